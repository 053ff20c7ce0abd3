#include "wordmaps/report.hpp"

namespace wordmaps {

namespace {

json rows_json(const CompareReport& report) {
  json results = json::array();
  for (const CompareRow& row : report.rows) {
    json r;
    r["group"] = row.group_spec;
    r["order"] = row.order;
    r["verdict"] = row.equal ? "equal" : "differ";
    if (!row.equal) {
      json witness;
      witness["element"] = row.witness;
      if (report.mode == CompareMode::Measure) {
        witness["count1"] = row.count1;
        witness["count2"] = row.count2;
      }
      r["witness"] = std::move(witness);
    }
    results.push_back(std::move(r));
  }
  return results;
}

json first_differ_json(const CompareReport& report) {
  return report.first_differ ? json(*report.first_differ) : json(nullptr);
}

std::string rows_csv(const CompareReport& report) {
  std::string out = "group,order,verdict,element,count1,count2\n";
  for (const CompareRow& row : report.rows) {
    out += row.group_spec;
    out += ',' + std::to_string(row.order);
    out += row.equal ? ",equal" : ",differ";
    if (row.equal) {
      out += ",,,";
    } else {
      out += ',' + std::to_string(row.witness);
      if (report.mode == CompareMode::Measure) {
        out += ',' + std::to_string(row.count1) + ',' + std::to_string(row.count2);
      } else {
        out += ",,";
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace

json to_json(const CompareReport& report) {
  json j;
  j["w1"] = report.w1;
  j["w2"] = report.w2;
  j["rank"] = report.rank;
  j["mode"] = report.mode == CompareMode::Image ? "image" : "measure";
  j["results"] = rows_json(report);
  j["first_differ"] = first_differ_json(report);
  return j;
}

std::string to_csv(const CompareReport& report) { return rows_csv(report); }

json to_json(const ExperimentReport& report) {
  json j;
  j["w1"] = report.image_compare.w1;
  j["w2"] = report.image_compare.w2;
  j["rank"] = report.image_compare.rank;
  json cls;
  cls["kind"] = to_string(report.classification.kind);
  cls["root"] = to_string(report.classification.root);
  cls["multiplicity"] = report.classification.multiplicity;
  cls["gcd"] = report.classification.gcd;
  j["classification"] = std::move(cls);
  json image_part;
  image_part["results"] = rows_json(report.image_compare);
  image_part["first_differ"] = first_differ_json(report.image_compare);
  j["image"] = std::move(image_part);
  json measure_part;
  measure_part["results"] = rows_json(report.measure_compare);
  measure_part["first_differ"] = first_differ_json(report.measure_compare);
  j["measure"] = std::move(measure_part);
  j["theorem_main2"] = to_string(report.verdict);
  return j;
}

std::string to_csv(const ExperimentReport& report) {
  std::string out = "section,value\n";
  out += "classification," + to_string(report.classification.kind) + '\n';
  out += "theorem_main2," + to_string(report.verdict) + '\n';
  out += "\nimage\n" + rows_csv(report.image_compare);
  out += "\nmeasure\n" + rows_csv(report.measure_compare);
  return out;
}

json image_json(const std::string& word_text, int rank, const std::string& group_spec,
                const WordImage& img) {
  json j;
  j["word"] = word_text;
  j["rank"] = rank;
  j["group"] = group_spec;
  j["order"] = img.group->order();
  j["image"] = img.members;
  j["size"] = img.members.size();
  return j;
}

std::string image_csv(const WordImage& img) {
  std::string out = "element\n";
  for (int g : img.members) out += std::to_string(g) + '\n';
  return out;
}

json measure_json(const std::string& word_text, int rank, const std::string& group_spec,
                  const FiberMeasure& m) {
  json j;
  j["word"] = word_text;
  j["rank"] = rank;
  j["group"] = group_spec;
  j["order"] = m.group->order();
  j["counts"] = m.counts;
  j["sum"] = m.total();
  return j;
}

std::string measure_csv(const FiberMeasure& m) {
  std::string out = "element,count\n";
  for (std::size_t g = 0; g < m.counts.size(); ++g) {
    out += std::to_string(g) + ',' + std::to_string(m.counts[g]) + '\n';
  }
  return out;
}

json classification_json(const std::string& word_text, const Classification& c) {
  json j;
  j["word"] = word_text;
  j["rank"] = 2;
  json cls;
  cls["kind"] = to_string(c.kind);
  cls["root"] = to_string(c.root);
  cls["multiplicity"] = c.multiplicity;
  cls["gcd"] = c.gcd;
  j["classification"] = std::move(cls);
  return j;
}

}  // namespace wordmaps
