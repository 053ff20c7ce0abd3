#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "wordmaps/freegroup.hpp"

using namespace wordmaps;

namespace {

Word W(const std::string& text, int rank = 2) { return parse_word(text, rank); }

Word random_reduced_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
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

// All-divisors root oracle: for every candidate multiplicity m dividing the
// cyclic core length, test prefix^m == w by repeated concatenation.
std::pair<Word, int> root_oracle(const Word& w) {
  const CyclicForm cf = cyclic_reduce(w);
  const std::vector<int> letters = to_letters(cf.core);
  const int len = static_cast<int>(letters.size());
  for (int m = len; m >= 2; --m) {
    if (len % m != 0) continue;
    const int p = len / m;
    const Word candidate = concat(
        concat(cf.conjugator, from_letters(w.rank(), std::vector<int>(letters.begin(), letters.begin() + p))),
        invert(cf.conjugator));
    Word power(w.rank());
    for (int i = 0; i < m; ++i) power = concat(power, candidate);
    if (power == w) return {candidate, m};
  }
  return {w, 1};
}

}  // namespace

TEST_CASE("parse: compact and indexed syntax agree") {
  const Word w = W("aabAB");
  CHECK(w.syllables() == std::vector<Syllable>{{1, 2}, {2, 1}, {1, -1}, {2, -1}});
  CHECK(W("x1^2 x2 x1^-1 x2^-1") == w);
  CHECK(W("a^2bA^1B") == w);
}

TEST_CASE("parse: free reduction and identity") {
  CHECK(W("aA").empty());
  CHECK(W("").empty());
  CHECK(W("abBA").empty());
  CHECK(W("a^0") == Word(2));
}

TEST_CASE("parse: errors carry kind and position") {
  CHECK_THROWS_AS(W("c"), parse_error);
  try {
    W("c");
  } catch (const parse_error& e) {
    CHECK(e.kind() == parse_error::Kind::GeneratorOutOfRank);
    CHECK(e.position() == 0);
  }
  try {
    W("ab?");
  } catch (const parse_error& e) {
    CHECK(e.kind() == parse_error::Kind::Syntax);
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(W("x3", 2), parse_error);
  CHECK_THROWS_AS(W("a^"), parse_error);
  CHECK_THROWS_AS(W("x0"), parse_error);
  CHECK_NOTHROW(parse_word("x3", 3));
}

TEST_CASE("reduce: merge and cascade") {
  CHECK(Word(1, {{1, 1}, {1, -1}}).empty());
  CHECK(Word(1, {{1, 2}, {1, 3}}).syllables() == std::vector<Syllable>{{1, 5}});
  CHECK(Word(2, {{1, 1}, {2, 1}, {2, -1}, {1, 1}}).syllables() == std::vector<Syllable>{{1, 2}});
}

TEST_CASE("invert and concat") {
  CHECK(invert(W("aabAB")) == W("baBAA"));
  CHECK(concat(W("ab"), W("ba")) == W("abba"));
  CHECK_THROWS_AS(concat(W("a", 1), W("a", 2)), std::invalid_argument);
}

TEST_CASE("cyclic_reduce") {
  auto [core, conj] = cyclic_reduce(W("baB"));
  CHECK(core == W("a"));
  CHECK(conj == W("b"));
  auto [core2, conj2] = cyclic_reduce(W("ab"));
  CHECK(core2 == W("ab"));
  CHECK(conj2.empty());
  auto [core3, conj3] = cyclic_reduce(Word(2));
  CHECK(core3.empty());
  CHECK(conj3.empty());
  // partial syllable cancellation
  auto [core4, conj4] = cyclic_reduce(W("bbaB"));
  CHECK(concat(concat(conj4, core4), invert(conj4)) == W("bbaB"));
  CHECK(core4 == W("ba"));
}

TEST_CASE("exponent_vector") {
  CHECK(exponent_vector(W("aabAB")) == ExponentVector{1, 0});
  CHECK(exponent_vector(W("abAB")) == ExponentVector{0, 0});
  CHECK(exponent_vector(Word(2)) == ExponentVector{0, 0});
}

TEST_CASE("maximal_root: examples") {
  auto r1 = maximal_root(W("abab"));
  CHECK(r1.root == W("ab"));
  CHECK(r1.multiplicity == 2);
  auto r2 = maximal_root(W("a"));
  CHECK(r2.root == W("a"));
  CHECK(r2.multiplicity == 1);
  auto r3 = maximal_root(W("baaB"));
  CHECK(r3.root == W("baB"));
  CHECK(r3.multiplicity == 2);
  CHECK(concat(r3.root, r3.root) == W("baaB"));
  CHECK_THROWS_AS(maximal_root(Word(2)), std::invalid_argument);
}

TEST_CASE("maximal_root: agrees with the all-divisors oracle") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word w = random_reduced_word(rng, 2, 12);
    if (w.empty()) continue;
    const Root got = maximal_root(w);
    const auto [oracle_root, oracle_mult] = root_oracle(w);
    CHECK(got.multiplicity == oracle_mult);
    CHECK(got.root == oracle_root);
    Word power(w.rank());
    for (int i = 0; i < got.multiplicity; ++i) power = concat(power, got.root);
    CHECK(power == w);
  }
}

TEST_CASE("apply_endomorphism: examples") {
  FreeEndomorphism phi{2, {W("aabAB"), Word(2)}};
  CHECK(apply_endomorphism(phi, W("a")) == W("aabAB"));
  FreeEndomorphism proj{2, {W("a"), Word(2)}};
  CHECK(apply_endomorphism(proj, W("aabAB")) == W("a"));
  const Word w = W("abbA");
  CHECK(apply_endomorphism(identity_endomorphism(2), w) == w);
  CHECK_THROWS_AS(apply_endomorphism(phi, W("a", 3)), std::invalid_argument);
}

TEST_CASE("property: reduce is idempotent") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> gen_dist(1, 2);
  std::uniform_int_distribution<int> exp_dist(-3, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Syllable> raw;
    const int len = trial % 12;
    for (int i = 0; i < len; ++i) {
      raw.push_back({gen_dist(rng), exp_dist(rng)});
    }
    const Word once(2, raw);
    const Word twice(2, once.syllables());
    CHECK(once == twice);
  }
}

TEST_CASE("property: w * w^-1 is the identity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word w = random_reduced_word(rng, 3, 20);
    CHECK(concat(w, invert(w)).empty());
  }
}

TEST_CASE("property: exponent vector is additive under concat") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = random_reduced_word(rng, 2, 10);
    const Word v = random_reduced_word(rng, 2, 10);
    const ExponentVector eu = exponent_vector(u);
    const ExponentVector ev = exponent_vector(v);
    const ExponentVector ec = exponent_vector(concat(u, v));
    for (std::size_t i = 0; i < eu.size(); ++i) {
      CHECK(ec[i] == eu[i] + ev[i]);
    }
  }
}

TEST_CASE("property: endomorphisms distribute over concat") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    FreeEndomorphism phi{2, {random_reduced_word(rng, 2, 5), random_reduced_word(rng, 2, 5)}};
    const Word u = random_reduced_word(rng, 2, 8);
    const Word v = random_reduced_word(rng, 2, 8);
    CHECK(apply_endomorphism(phi, concat(u, v)) ==
          concat(apply_endomorphism(phi, u), apply_endomorphism(phi, v)));
  }
}

TEST_CASE("to_string round trip") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_reduced_word(rng, 3, 15);
    CHECK(parse_word(to_string(w), 3) == w);
  }
  CHECK(to_string(W("aabAB")) == "aabAB");
  CHECK(to_string(Word(2)).empty());
  CHECK(to_string(parse_word("x27^2 x1", 30)) == "x27^2 x1");
}
