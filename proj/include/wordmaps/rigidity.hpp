#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wordmaps/freegroup.hpp"
#include "wordmaps/wordmap.hpp"

namespace wordmaps {

/// True iff the exponent sums of w have gcd 1 (gcd of the zero vector is 0).
/// Such words attain every element of every finite group.
bool is_surjective_word(const Word& w);

/// A tuple (g^{n_1}, ..., g^{n_d}) with sum n_i * t_i = 1 for the exponent
/// vector (t_i) of w, found by extended Euclid. All entries are powers of g,
/// so commutator parts vanish and the tuple evaluates to g; that is verified
/// before returning.
std::vector<int> bezout_witness(const Word& w, const FiniteGroup& G, int g);

enum class WordKind { Trivial, Surjective, PowerOfSurjective, TestWord };

std::string to_string(WordKind kind);

struct Classification {
  WordKind kind = WordKind::Trivial;
  Word root;                     // maximal root of the word
  std::int64_t multiplicity = 0; // word == root^multiplicity
  std::int64_t gcd = 0;          // content of the root's exponent vector
  ExponentVector root_exponents;
};

/// Rank-2 trichotomy on the maximal root u of w: content 1 with multiplicity
/// 1 is surjective, content 1 with multiplicity >= 2 is a power of a
/// surjective word, and content != 1 (including 0) is a test word. The empty
/// word is Trivial.
Classification classify_F2(const Word& w);

struct PowerImageCheck {
  bool consistent = true;
  int degree = 0;    // first failing symmetric-group degree
  int element = -1;  // least image element that is not a dpow-th power
};

/// Checks, for every n <= n_max, that the image of w on the symmetric group
/// of degree n consists of dpow-th powers.
PowerImageCheck power_image_check(const Word& w, int dpow, int n_max,
                                  const EvalOptions& opts = {});

/// Element of a free abelian group as its integer entry vector.
struct AbelianWord {
  std::vector<std::int64_t> entries;
};

/// Image of an abelian word on an abelian group: the set of m-th powers where
/// m is the gcd of the entries. Cross-checked against the generic word map of
/// x1^{a_1}...xr^{a_r} before returning.
WordImage abelian_image(const AbelianWord& a, const FiniteGroup& G,
                        const EvalOptions& opts = {});

struct AbelianCertificate {
  std::int64_t content = 0;                   // positive gcd of the entries
  std::vector<std::int64_t> primitive_part;   // content * primitive_part == entries
};

/// Content / primitive-part factorization of a nonzero abelian word. Words
/// with identical images on every finite group share the content, so the pair
/// certifies the word up to a basis change.
AbelianCertificate abelian_wpr_certificate(const AbelianWord& a);

enum class ExperimentVerdict { Pass, Fail, NotApplicable };

std::string to_string(ExperimentVerdict v);

struct ExperimentReport {
  Classification classification;
  CompareReport image_compare;
  CompareReport measure_compare;
  ExperimentVerdict verdict = ExperimentVerdict::NotApplicable;
};

/// Test-word experiment over a battery: when w1 is a test word whose image
/// agrees with w2 on every battery group, the measures are predicted to agree
/// everywhere as well; the verdict records whether they do. For other
/// classifications both comparisons are reported without a prediction.
ExperimentReport rigidity_experiment(const Word& w1, const Word& w2,
                                     const std::vector<std::string>& battery,
                                     const EvalOptions& opts = {});

}  // namespace wordmaps
