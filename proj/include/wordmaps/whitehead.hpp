#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wordmaps/freegroup.hpp"

namespace wordmaps {

/// One generating automorphism of the classical length-reduction algorithm.
/// Permutation moves send x_i to x_{target[i]}^{sign[i]}; multiplier moves fix
/// the multiplier letter a and map every other generator x to
/// a^-[x^-1 in set] * x * a^[x in set].
struct WhiteheadMove {
  enum class Kind { Permutation, Multiplier };

  Kind kind = Kind::Permutation;
  int rank = 0;

  // Permutation data (1-based targets, signs in {+1,-1}).
  std::vector<int> target;
  std::vector<int> sign;

  // Multiplier data: the letter a and membership over letters 0..2*rank-1
  // (letter encoding as in to_letters). in_set holds a and never a^-1.
  int mult_gen = 0;
  int mult_sign = 1;
  std::vector<char> in_set;

  FreeEndomorphism endomorphism() const;
  WhiteheadMove inverse() const;
  Word apply(const Word& w) const;
};

/// All non-identity moves for the given rank, in a fixed deterministic order.
std::vector<WhiteheadMove> whitehead_moves(int rank, bool include_permutations);

struct MinimizeResult {
  Word minimal;                      // cyclically reduced, shortest in the orbit
  std::vector<WhiteheadMove> moves;  // strictly length-decreasing moves, in order
};

/// Greedy length reduction over the conjugacy class of w: applies the first
/// strictly decreasing multiplier move until none applies. The result is the
/// least length attained in the automorphism orbit of w.
MinimizeResult whitehead_minimize(const Word& w);

struct AutomorphyResult {
  enum class Verdict { Yes, No, Unknown };

  Verdict verdict = Verdict::Unknown;
  std::optional<FreeEndomorphism> witness;  // present iff Yes; maps u to v exactly
};

/// Decides whether some automorphism maps u to v. Minimizes both words, then
/// searches the equal-length level set breadth-first; `budget` caps expanded
/// nodes. Exhausting the level set proves No; exhausting the budget returns
/// Unknown (the level-set search is complete, so Unknown only occurs when the
/// budget binds, which small-rank level sets never do in practice).
AutomorphyResult are_automorphic(const Word& u, const Word& v, std::uint64_t budget);

/// First endomorphism (image tuples ordered by total length, then
/// lexicographically) mapping source to target, with every generator image of
/// length at most max_image_length. Words with zero exponent vector can only
/// map to words with zero exponent vector; that obstruction is applied first.
std::optional<FreeEndomorphism> search_endomorphism(const Word& source, const Word& target,
                                                    int max_image_length);

}  // namespace wordmaps
