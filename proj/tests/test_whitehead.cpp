#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "wordmaps/whitehead.hpp"
#include "wordmaps/wordmap.hpp"

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

FreeEndomorphism random_automorphism(std::mt19937& rng, int rank, int max_moves) {
  const auto moves = whitehead_moves(rank, /*include_permutations=*/true);
  std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
  std::uniform_int_distribution<int> count(0, max_moves);
  FreeEndomorphism phi = identity_endomorphism(rank);
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    phi = compose(moves[pick(rng)].endomorphism(), phi);
  }
  return phi;
}

std::int64_t content(const Word& w) {
  std::int64_t g = 0;
  for (std::int64_t t : exponent_vector(w)) g = std::gcd(g, t);
  return g;
}

}  // namespace

TEST_CASE("every move composed with its inverse is the identity") {
  for (int rank : {2, 3}) {
    const FreeEndomorphism id = identity_endomorphism(rank);
    for (const WhiteheadMove& mv : whitehead_moves(rank, true)) {
      CHECK(compose(mv.endomorphism(), mv.inverse().endomorphism()) == id);
      CHECK(compose(mv.inverse().endomorphism(), mv.endomorphism()) == id);
    }
  }
}

TEST_CASE("move counts for rank 2") {
  CHECK(whitehead_moves(2, false).size() == 12);   // 4 letters x 3 nonempty subsets
  CHECK(whitehead_moves(2, true).size() == 12 + 7);  // plus signed permutations
}

TEST_CASE("whitehead_minimize: examples") {
  const MinimizeResult m1 = whitehead_minimize(W("a"));
  CHECK(m1.minimal == W("a"));
  CHECK(m1.moves.empty());

  const MinimizeResult m2 = whitehead_minimize(W("ab"));
  CHECK(m2.minimal.length() == 1);
  CHECK(m2.moves.size() == 1);

  const MinimizeResult m3 = whitehead_minimize(W("abAB"));
  CHECK(m3.minimal == W("abAB"));
  CHECK(m3.moves.empty());
}

TEST_CASE("no multiplier move shortens the commutator") {
  const Word comm = W("abAB");
  for (const WhiteheadMove& mv : whitehead_moves(2, false)) {
    CHECK(cyclic_reduce(mv.apply(comm)).core.length() >= comm.length());
  }
}

TEST_CASE("are_automorphic: examples") {
  const AutomorphyResult swap = are_automorphic(W("a"), W("b"), 100000);
  REQUIRE(swap.verdict == AutomorphyResult::Verdict::Yes);
  CHECK(apply_endomorphism(*swap.witness, W("a")) == W("b"));

  CHECK(are_automorphic(W("a"), W("aabAB"), 100000).verdict ==
        AutomorphyResult::Verdict::No);

  const AutomorphyResult comm = are_automorphic(W("abAB"), W("baBA"), 100000);
  REQUIRE(comm.verdict == AutomorphyResult::Verdict::Yes);
  CHECK(apply_endomorphism(*comm.witness, W("abAB")) == W("baBA"));

  CHECK(are_automorphic(W("a"), W("aa"), 100000).verdict == AutomorphyResult::Verdict::No);
  CHECK_THROWS_AS(are_automorphic(W("a", 1), W("a", 2), 10), std::invalid_argument);
}

TEST_CASE("are_automorphic: identity and conjugates") {
  const AutomorphyResult trivial = are_automorphic(Word(2), Word(2), 10);
  REQUIRE(trivial.verdict == AutomorphyResult::Verdict::Yes);
  CHECK(are_automorphic(Word(2), W("a"), 10).verdict == AutomorphyResult::Verdict::No);

  const Word u = W("aabAB");
  const Word conj = concat(concat(W("ba"), u), invert(W("ba")));
  const AutomorphyResult res = are_automorphic(u, conj, 100000);
  REQUIRE(res.verdict == AutomorphyResult::Verdict::Yes);
  CHECK(apply_endomorphism(*res.witness, u) == conj);
}

TEST_CASE("property: u is automorphic to phi(u) with a verified witness") {
  std::mt19937 rng(101);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Word u = random_reduced_word(rng, 2, 0, 8);
    const FreeEndomorphism phi = random_automorphism(rng, 2, 5);
    const Word v = apply_endomorphism(phi, u);
    const AutomorphyResult res = are_automorphic(u, v, 500000);
    REQUIRE(res.verdict == AutomorphyResult::Verdict::Yes);
    CHECK(apply_endomorphism(*res.witness, u) == v);
    // content of the exponent vector is invariant under automorphism
    CHECK(content(u) == content(v));
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("budget exhaustion reports Unknown") {
  // A target at level-set distance >= 2 from the start cannot be discovered
  // while expanding only the start node, so budget 1 must come back Unknown.
  const auto moves = whitehead_moves(2, true);
  auto canon = [&](const Word& w) {
    auto l = to_letters(cyclic_reduce(w).core);
    std::vector<int> best = l;
    for (std::size_t r = 1; r < l.size(); ++r) {
      std::vector<int> rot(l.begin() + static_cast<std::ptrdiff_t>(r), l.end());
      rot.insert(rot.end(), l.begin(), l.begin() + static_cast<std::ptrdiff_t>(r));
      if (rot < best) best = rot;
    }
    return best;
  };
  for (const char* start : {"abAB", "aabb", "aabab", "aaabbb"}) {
    const Word u = W(start);
    const std::uint64_t len = u.length();
    std::map<std::vector<int>, int> depth{{canon(u), 0}};
    std::deque<Word> queue{u};
    std::optional<Word> far_node;
    while (!queue.empty() && !far_node) {
      const Word node = queue.front();
      queue.pop_front();
      const int d = depth.at(canon(node));
      for (const auto& mv : moves) {
        const Word img = cyclic_reduce(mv.apply(node)).core;
        if (img.length() != len || depth.contains(canon(img))) continue;
        depth.emplace(canon(img), d + 1);
        if (d + 1 >= 2) {
          far_node = img;
          break;
        }
        queue.push_back(img);
      }
    }
    if (!far_node) continue;
    CHECK(are_automorphic(u, *far_node, 1).verdict == AutomorphyResult::Verdict::Unknown);
    CHECK(are_automorphic(u, *far_node, 500000).verdict == AutomorphyResult::Verdict::Yes);
    return;
  }
  FAIL("no level set with diameter >= 2 found; Unknown path not exercised");
}

TEST_CASE("automorphy is symmetric and transitive on short words") {
  std::vector<Word> words;
  std::vector<int> letters;
  const std::function<void(int)> gen = [&](int remaining) {
    words.push_back(from_letters(2, letters));
    if (remaining == 0) return;
    for (int l = 0; l < 4; ++l) {
      if (!letters.empty() && letters.back() == (l ^ 1)) continue;
      letters.push_back(l);
      gen(remaining - 1);
      letters.pop_back();
    }
  };
  gen(3);
  const std::size_t n = words.size();
  std::vector<std::vector<char>> yes(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      yes[i][j] = are_automorphic(words[i], words[j], 200000).verdict ==
                  AutomorphyResult::Verdict::Yes;
    }
    CHECK(yes[i][i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(yes[i][j] == yes[j][i]);
      for (std::size_t k = 0; k < n; ++k) {
        if (yes[i][j] && yes[j][k]) CHECK(yes[i][k]);
      }
    }
  }
}

TEST_CASE("the No verdict for a vs aabAB has an independent finite certificate") {
  // A primitive word normally generates, so killing it must abelianize the
  // rank-2 free group down to Z. Exhibiting a pair (g, h) generating a
  // non-abelian group with w(g, h) = e therefore certifies that w = aabAB is
  // not automorphic to a generator, independently of the level-set search.
  CHECK(are_automorphic(W("a"), W("aabAB"), 1000000).verdict ==
        AutomorphyResult::Verdict::No);
  const FiniteGroup S3 = make_symmetric(3);
  const Word w = W("aabAB");
  bool certified = false;
  for (int g = 0; g < 6 && !certified; ++g) {
    for (int h = 0; h < 6 && !certified; ++h) {
      const std::vector<int> tuple{g, h};
      if (evaluate(w, S3, tuple) != 0) continue;
      const std::vector<int> generated = subgroup_generated(S3, {g, h});
      if (static_cast<int>(generated.size()) == S3.order()) certified = true;
    }
  }
  CHECK(certified);
}

TEST_CASE("maximal_root handles huge exponents without letter expansion") {
  const Root r = maximal_root(parse_word("a^1000000000", 2));
  CHECK(r.root == W("a"));
  CHECK(r.multiplicity == 1000000000);
  const Root rn = maximal_root(parse_word("b a^-1000000000 B", 2));
  CHECK(rn.root == W("bAB"));
  CHECK(rn.multiplicity == 1000000000);
}

TEST_CASE("search_endomorphism: examples") {
  const auto phi1 = search_endomorphism(W("a"), W("aabAB"), 5);
  REQUIRE(phi1.has_value());
  CHECK(phi1->images[0] == W("aabAB"));
  CHECK(phi1->images[1].empty());

  const auto phi2 = search_endomorphism(W("aabAB"), W("a"), 2);
  REQUIRE(phi2.has_value());
  CHECK(phi2->images[0] == W("a"));
  CHECK(phi2->images[1].empty());

  CHECK_FALSE(search_endomorphism(W("abAB"), W("a"), 3).has_value());
}

TEST_CASE("search_endomorphism: found witness actually maps source to target") {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    const Word source = random_reduced_word(rng, 2, 1, 4);
    FreeEndomorphism phi{2, {random_reduced_word(rng, 2, 0, 2), random_reduced_word(rng, 2, 0, 2)}};
    const Word target = apply_endomorphism(phi, source);
    const auto found = search_endomorphism(source, target, 2);
    REQUIRE(found.has_value());
    CHECK(apply_endomorphism(*found, source) == target);
  }
}
