#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wordmaps/battery.hpp"
#include "wordmaps/report.hpp"
#include "wordmaps/rigidity.hpp"
#include "wordmaps/whitehead.hpp"
#include "wordmaps/wordmap.hpp"

namespace {

using wordmaps::json;

// Highest generator index mentioned in the text, before reduction. Stops at
// the first malformed character and lets parse_word report the error.
int infer_rank(const std::string& text) {
  int best = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 'x' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      ++i;
      int idx = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        idx = idx * 10 + (text[i] - '0');
        ++i;
      }
      best = std::max(best, idx);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      best = std::max(best, std::tolower(static_cast<unsigned char>(c)) - 'a' + 1);
      ++i;
    } else {
      break;
    }
    if (i < n && text[i] == '^') {
      ++i;
      if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    }
  }
  return best;
}

struct Settings {
  int rank = 0;
  bool infer = false;
  std::string battery = "default";
  std::string mode = "image";
  std::string format;  // empty = unset
  std::string output;  // empty = unset
  std::uint64_t max_tuples = 0;  // 0 = unset
  int bound = 4;
  int jobs = 0;
};

struct Resolved {
  std::vector<std::string> groups;
  wordmaps::EvalOptions eval;
  std::uint64_t hom_budget = wordmaps::kDefaultHomBudget;
  std::string format = "json";
  std::string output = "-";
};

Resolved resolve(const Settings& s) {
  Resolved r;
  if (s.battery == "default") {
    r.groups = wordmaps::default_battery();
  } else {
    const wordmaps::BatteryConfig cfg = wordmaps::load_battery_config(s.battery);
    r.groups = cfg.groups;
    r.eval.max_tuples = cfg.budgets.max_tuples;
    r.hom_budget = cfg.budgets.max_hom_assignments;
    r.format = cfg.format;
    r.output = cfg.output;
  }
  if (s.max_tuples != 0) r.eval.max_tuples = s.max_tuples;
  if (!s.format.empty()) r.format = s.format;
  if (!s.output.empty()) r.output = s.output;
  r.eval.jobs = s.jobs;
  return r;
}

int effective_rank(const Settings& s, const std::string& w1, const std::string& w2 = {}) {
  if (s.rank > 0) return s.rank;
  if (s.infer) return std::max(infer_rank(w1), w2.empty() ? 1 : infer_rank(w2));
  throw std::invalid_argument("--rank is required (or pass --infer-rank)");
}

void emit(const Resolved& r, const std::string& payload) {
  if (r.output == "-") {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream out(r.output, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file " + r.output);
  }
  out << payload;
}

std::string finish(const json& j) { return j.dump(2) + "\n"; }

std::string key_value_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string out = "key,value\n";
  for (const auto& [k, v] : rows) out += k + ',' + v + '\n';
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word maps on finite groups: images, fiber measures, and word classification"};
  app.require_subcommand(1);

  Settings s;
  std::string word1, word2, group_spec;

  auto add_common = [&](CLI::App* cmd, bool with_battery) {
    cmd->add_option("--rank", s.rank, "ambient free-group rank");
    cmd->add_flag("--infer-rank", s.infer, "infer the rank from the highest generator used");
    cmd->add_option("--format", s.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", s.output, "output path, '-' for stdout");
    cmd->add_option("--max-tuples", s.max_tuples, "tuple budget for image/measure scans");
    cmd->add_option("--jobs", s.jobs, "worker threads for the tuple scans");
    if (with_battery) {
      cmd->add_option("--battery", s.battery, "'default' or a battery config JSON file");
    }
  };

  CLI::App* normalize = app.add_subcommand("normalize", "reduce a word and print its data");
  normalize->add_option("word", word1)->required();
  add_common(normalize, false);

  CLI::App* image_cmd = app.add_subcommand("image", "exact image of a word map on one group");
  image_cmd->add_option("word", word1)->required();
  image_cmd->add_option("group", group_spec)->required();
  add_common(image_cmd, false);

  CLI::App* measure_cmd = app.add_subcommand("measure", "exact fiber counts on one group");
  measure_cmd->add_option("word", word1)->required();
  measure_cmd->add_option("group", group_spec)->required();
  add_common(measure_cmd, false);

  CLI::App* compare = app.add_subcommand("compare", "compare two words over a battery");
  compare->add_option("w1", word1)->required();
  compare->add_option("w2", word2)->required();
  compare->add_option("--mode", s.mode, "image|measure")
      ->check(CLI::IsMember({"image", "measure"}));
  add_common(compare, true);

  CLI::App* classify = app.add_subcommand("classify", "rank-2 word trichotomy");
  classify->add_option("word", word1)->required();
  add_common(classify, false);

  CLI::App* experiment = app.add_subcommand(
      "experiment", "test-word experiment: same image should force same measure");
  experiment->add_option("w1", word1)->required();
  experiment->add_option("w2", word2)->required();
  add_common(experiment, true);

  CLI::App* endosearch = app.add_subcommand("endosearch", "search an endomorphism w1 -> w2");
  endosearch->add_option("source", word1)->required();
  endosearch->add_option("target", word2)->required();
  endosearch->add_option("--bound", s.bound, "max generator-image length");
  add_common(endosearch, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Resolved r = resolve(s);

    if (normalize->parsed()) {
      const int rank = effective_rank(s, word1);
      const wordmaps::Word w = wordmaps::parse_word(word1, rank);
      if (r.format == "json") {
        json j;
        j["word"] = wordmaps::to_string(w);
        j["rank"] = rank;
        json syl = json::array();
        for (const auto& sy : w.syllables()) syl.push_back(json::array({sy.gen, sy.exp}));
        j["syllables"] = std::move(syl);
        j["exponent_vector"] = wordmaps::exponent_vector(w);
        j["length"] = w.length();
        emit(r, finish(j));
      } else {
        emit(r, key_value_csv({{"word", wordmaps::to_string(w)},
                               {"rank", std::to_string(rank)},
                               {"length", std::to_string(w.length())}}));
      }
      return 0;
    }

    if (image_cmd->parsed() || measure_cmd->parsed()) {
      const int rank = effective_rank(s, word1);
      const wordmaps::Word w = wordmaps::parse_word(word1, rank);
      const wordmaps::FiniteGroup G = wordmaps::make_group(group_spec);
      if (image_cmd->parsed()) {
        const wordmaps::WordImage img = wordmaps::image(w, G, r.eval);
        emit(r, r.format == "json"
                    ? finish(wordmaps::image_json(wordmaps::to_string(w), rank, group_spec, img))
                    : wordmaps::image_csv(img));
      } else {
        const wordmaps::FiberMeasure m = wordmaps::measure(w, G, r.eval);
        emit(r, r.format == "json"
                    ? finish(wordmaps::measure_json(wordmaps::to_string(w), rank, group_spec, m))
                    : wordmaps::measure_csv(m));
      }
      return 0;
    }

    if (compare->parsed()) {
      const int rank = effective_rank(s, word1, word2);
      const wordmaps::Word w1 = wordmaps::parse_word(word1, rank);
      const wordmaps::Word w2 = wordmaps::parse_word(word2, rank);
      const wordmaps::CompareMode mode =
          s.mode == "image" ? wordmaps::CompareMode::Image : wordmaps::CompareMode::Measure;
      const wordmaps::CompareReport report =
          wordmaps::battery_compare(w1, w2, r.groups, mode, r.eval);
      emit(r, r.format == "json" ? finish(wordmaps::to_json(report)) : wordmaps::to_csv(report));
      return 0;
    }

    if (classify->parsed()) {
      const int rank = s.rank > 0 ? s.rank : 2;
      const wordmaps::Word w = wordmaps::parse_word(word1, rank);
      const wordmaps::Classification c = wordmaps::classify_F2(w);
      if (r.format == "json") {
        emit(r, finish(wordmaps::classification_json(wordmaps::to_string(w), c)));
      } else {
        emit(r, key_value_csv({{"word", wordmaps::to_string(w)},
                               {"kind", wordmaps::to_string(c.kind)},
                               {"root", wordmaps::to_string(c.root)},
                               {"multiplicity", std::to_string(c.multiplicity)},
                               {"gcd", std::to_string(c.gcd)}}));
      }
      return 0;
    }

    if (experiment->parsed()) {
      const int rank = s.rank > 0 ? s.rank : 2;
      const wordmaps::Word w1 = wordmaps::parse_word(word1, rank);
      const wordmaps::Word w2 = wordmaps::parse_word(word2, rank);
      const wordmaps::ExperimentReport report =
          wordmaps::rigidity_experiment(w1, w2, r.groups, r.eval);
      emit(r, r.format == "json" ? finish(wordmaps::to_json(report)) : wordmaps::to_csv(report));
      return 0;
    }

    if (endosearch->parsed()) {
      const int rank = effective_rank(s, word1, word2);
      const wordmaps::Word source = wordmaps::parse_word(word1, rank);
      const wordmaps::Word target = wordmaps::parse_word(word2, rank);
      const auto phi = wordmaps::search_endomorphism(source, target, s.bound);
      json j;
      j["source"] = wordmaps::to_string(source);
      j["target"] = wordmaps::to_string(target);
      j["rank"] = rank;
      j["bound"] = s.bound;
      j["found"] = phi.has_value();
      if (phi) {
        json images = json::array();
        for (const auto& img : phi->images) images.push_back(wordmaps::to_string(img));
        j["witness"] = std::move(images);
      } else {
        j["witness"] = nullptr;
      }
      emit(r, finish(j));
      return 0;
    }
  } catch (const wordmaps::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const wordmaps::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
