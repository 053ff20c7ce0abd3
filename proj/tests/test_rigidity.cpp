#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "wordmaps/battery.hpp"
#include "wordmaps/rigidity.hpp"

using namespace wordmaps;

namespace {

Word W(const std::string& text, int rank = 2) { return parse_word(text, rank); }

Word random_reduced_word(std::mt19937& rng, int rank, int min_len, int max_len) {
  std::uniform_int_distribution<int> len_dist(min_len, max_len);
  std::uniform_int_distribution<int> letter_dist(0, 2 * rank - 1);
  const int len = len_dist(rng);
  std::vector<int> letters;
  while (static_cast<int>(letters.size()) < len) {
    const int letter = letter_dist(rng);
    if (!letters.empty() && letters.back() == (letter ^ 1)) continue;
    letters.push_back(letter);
  }
  return from_letters(rank, letters);
}

void enumerate_reduced_words(int rank, int max_len, std::vector<int>& prefix,
                             std::vector<Word>& out) {
  out.push_back(from_letters(rank, prefix));
  if (static_cast<int>(prefix.size()) == max_len) return;
  for (int letter = 0; letter < 2 * rank; ++letter) {
    if (!prefix.empty() && prefix.back() == (letter ^ 1)) continue;
    prefix.push_back(letter);
    enumerate_reduced_words(rank, max_len, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TEST_CASE("is_surjective_word") {
  CHECK(is_surjective_word(W("a")));
  CHECK(is_surjective_word(W("aabAB")));
  CHECK_FALSE(is_surjective_word(W("abAB")));
  CHECK_FALSE(is_surjective_word(W("aabb")));
  CHECK_FALSE(is_surjective_word(Word(2)));
}

TEST_CASE("bezout_witness: examples") {
  const FiniteGroup S3 = make_symmetric(3);
  for (int g = 0; g < 6; ++g) {
    const std::vector<int> witness = bezout_witness(W("a"), S3, g);
    CHECK(witness == std::vector<int>{g, 0});
  }
  const FiniteGroup Z5 = make_cyclic(5);
  CHECK(bezout_witness(W("aabbb"), Z5, 3) == std::vector<int>{2, 3});
  CHECK_THROWS_AS(bezout_witness(W("abAB"), S3, 1), std::invalid_argument);
}

TEST_CASE("bezout_witness: random round trips") {
  std::mt19937 rng(47);
  const std::vector<std::string> specs = {"Z7", "S3", "D8", "A4"};
  int done = 0;
  while (done < 200) {
    const int rank = 1 + static_cast<int>(rng() % 3);
    const Word w = random_reduced_word(rng, rank, 1, 6);
    if (!is_surjective_word(w)) continue;
    const FiniteGroup G = make_group(specs[rng() % specs.size()]);
    const int g = static_cast<int>(rng() % static_cast<unsigned>(G.order()));
    const std::vector<int> witness = bezout_witness(w, G, g);
    CHECK(evaluate(w, G, witness) == g);
    ++done;
  }
}

TEST_CASE("classify_F2: examples") {
  CHECK(classify_F2(W("a")).kind == WordKind::Surjective);

  const Classification c1 = classify_F2(W("aabb"));
  CHECK(c1.kind == WordKind::TestWord);
  CHECK(c1.gcd == 2);
  CHECK(c1.multiplicity == 1);

  const Classification c2 = classify_F2(W("aa"));
  CHECK(c2.kind == WordKind::PowerOfSurjective);
  CHECK(c2.root == W("a"));
  CHECK(c2.multiplicity == 2);

  const Classification c3 = classify_F2(W("abAB"));
  CHECK(c3.kind == WordKind::TestWord);
  CHECK(c3.gcd == 0);

  const Classification c4 = classify_F2(W("abab"));
  CHECK(c4.kind == WordKind::PowerOfSurjective);
  CHECK(c4.root == W("ab"));

  CHECK(classify_F2(Word(2)).kind == WordKind::Trivial);
  CHECK_THROWS_AS(classify_F2(W("a", 1)), std::invalid_argument);
}

TEST_CASE("classify_F2: total and consistent on all short words") {
  std::vector<Word> words;
  std::vector<int> prefix;
  enumerate_reduced_words(2, 5, prefix, words);
  for (const Word& w : words) {
    const Classification c = classify_F2(w);
    if (w.empty()) {
      CHECK(c.kind == WordKind::Trivial);
      continue;
    }
    const Root r = maximal_root(w);
    std::int64_t g = 0;
    for (std::int64_t t : exponent_vector(r.root)) g = std::gcd(g, t);
    switch (c.kind) {
      case WordKind::Surjective:
        CHECK(g == 1);
        CHECK(r.multiplicity == 1);
        break;
      case WordKind::PowerOfSurjective:
        CHECK(g == 1);
        CHECK(r.multiplicity >= 2);
        break;
      case WordKind::TestWord:
        CHECK(g != 1);
        break;
      case WordKind::Trivial:
        CHECK(false);
        break;
    }
  }
}

TEST_CASE("power_image_check: examples") {
  CHECK(power_image_check(W("aa", 1), 2, 5).consistent);
  const PowerImageCheck bad = power_image_check(W("a", 1), 2, 3);
  CHECK_FALSE(bad.consistent);
  CHECK(bad.degree == 2);
  CHECK(bad.element == 1);  // the transposition
  CHECK(power_image_check(W("abab"), 2, 5).consistent);
  CHECK_THROWS_AS(power_image_check(W("a"), 1, 3), std::invalid_argument);
}

TEST_CASE("power_image_check: necessity on random powers") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const Word w = random_reduced_word(rng, 2, 1, 5);
    for (int d : {2, 3}) {
      Word wd(2);
      for (int i = 0; i < d; ++i) wd = concat(wd, w);
      CHECK(power_image_check(wd, d, 4).consistent);
    }
  }
}

TEST_CASE("abelian_image") {
  CHECK(abelian_image({{2, 4}}, make_cyclic(6)).members == std::vector<int>{0, 2, 4});
  const FiniteGroup G = make_group("Z2xZ4");
  std::vector<int> all;
  for (int g = 0; g < G.order(); ++g) all.push_back(g);
  CHECK(abelian_image({{1, 0}}, G).members == all);
  CHECK(abelian_image({{0, 0}}, G).members == std::vector<int>{0});
  CHECK_THROWS_AS(abelian_image({{1, 2}}, make_symmetric(3)), std::invalid_argument);
}

TEST_CASE("abelian_image agrees with the generic word map on the abelian battery") {
  const std::vector<std::vector<std::int64_t>> vectors = {{2, 4}, {3, 5}, {2, 0}, {6, 9}};
  for (int n = 2; n <= 8; ++n) {
    const FiniteGroup G = make_cyclic(n);
    for (const auto& entries : vectors) {
      CHECK_NOTHROW(abelian_image({entries}, G));  // the op cross-checks internally
    }
  }
}

TEST_CASE("abelian_wpr_certificate") {
  const AbelianCertificate c1 = abelian_wpr_certificate({{2, 4}});
  CHECK(c1.content == 2);
  CHECK(c1.primitive_part == std::vector<std::int64_t>{1, 2});

  const AbelianCertificate c2 = abelian_wpr_certificate({{1, 0}});
  CHECK(c2.content == 1);
  CHECK(c2.primitive_part == std::vector<std::int64_t>{1, 0});

  const AbelianCertificate c3 = abelian_wpr_certificate({{-3, 6}});
  CHECK(c3.content == 3);
  CHECK(c3.primitive_part == std::vector<std::int64_t>{-1, 2});

  CHECK_THROWS_AS(abelian_wpr_certificate({{0, 0}}), std::invalid_argument);
}

TEST_CASE("rigidity_experiment: conjugated test word passes") {
  const Word w1 = W("abAB");
  const Word w2 = concat(concat(W("a"), w1), W("A"));
  const ExperimentReport r = rigidity_experiment(w1, w2, default_battery());
  CHECK(r.classification.kind == WordKind::TestWord);
  CHECK(r.image_compare.all_equal());
  CHECK(r.measure_compare.all_equal());
  CHECK(r.verdict == ExperimentVerdict::Pass);
}

TEST_CASE("rigidity_experiment: power pair is out of scope for the prediction") {
  const ExperimentReport r = rigidity_experiment(W("aa"), W("bb"), default_battery());
  CHECK(r.classification.kind == WordKind::PowerOfSurjective);
  CHECK(r.image_compare.all_equal());
  CHECK(r.measure_compare.all_equal());
  CHECK(r.verdict == ExperimentVerdict::NotApplicable);
}

TEST_CASE("rigidity_experiment: the motivating non-test pair differs at S3") {
  const ExperimentReport r = rigidity_experiment(W("a"), W("aabAB"), default_battery());
  CHECK(r.classification.kind == WordKind::Surjective);
  CHECK(r.image_compare.all_equal());
  REQUIRE(r.measure_compare.first_differ.has_value());
  CHECK(*r.measure_compare.first_differ == "S3");
  CHECK(r.verdict == ExperimentVerdict::NotApplicable);
  CHECK_THROWS_AS(rigidity_experiment(W("a", 1), W("a", 1), default_battery()),
                  std::invalid_argument);
}

TEST_CASE("surjectivity criterion cross-validation on short words") {
  const std::vector<std::string> specs = {"Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8",
                                          "S3", "D4", "D8", "A4"};
  std::vector<FiniteGroup> groups;
  for (const auto& s : specs) groups.push_back(make_group(s));

  std::vector<Word> words;
  std::vector<int> prefix;
  enumerate_reduced_words(2, 6, prefix, words);
  for (const Word& w : words) {
    std::int64_t g = 0;
    for (std::int64_t t : exponent_vector(w)) g = std::gcd(g, t);
    bool full_everywhere = true;
    for (const FiniteGroup& G : groups) {
      if (static_cast<int>(image(w, G).members.size()) != G.order()) {
        full_everywhere = false;
        break;
      }
    }
    CHECK(full_everywhere == (g == 1));
    if (g >= 2) {
      CHECK(image(w, make_cyclic(static_cast<int>(g))).members == std::vector<int>{0});
    }
  }
}
