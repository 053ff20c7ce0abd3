#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordmaps/freegroup.hpp"
#include "wordmaps/groups.hpp"

namespace wordmaps {

struct EvalOptions {
  std::uint64_t max_tuples = 10'000'000;
  int jobs = 0;  // worker threads for the tuple scan; 0 = library default
};

/// Value of the word map at one tuple: the product of tuple[gen-1]^exp over
/// the syllables of w.
int evaluate(const Word& w, const FiniteGroup& G, std::span<const int> tuple);

struct WordImage {
  const FiniteGroup* group = nullptr;
  std::vector<int> members;  // sorted element ids

  bool contains(int g) const;
};

struct FiberMeasure {
  const FiniteGroup* group = nullptr;
  int rank = 0;
  std::vector<std::uint64_t> counts;  // counts[g] = #tuples mapping to g

  std::uint64_t total() const;
  std::vector<int> support() const;  // sorted ids with nonzero count
};

/// Exact image over all |G|^rank tuples. The scan is partitioned over the
/// first coordinate; the result is independent of the worker count.
WordImage image(const Word& w, const FiniteGroup& G, const EvalOptions& opts = {});

/// Exact fiber counts over all |G|^rank tuples; counts sum to |G|^rank.
FiberMeasure measure(const Word& w, const FiniteGroup& G, const EvalOptions& opts = {});

/// Single-threaded reference implementations of the two scans above, written
/// without the syllable power tables. Kept for testing and benchmarking.
WordImage image_serial(const Word& w, const FiniteGroup& G, const EvalOptions& opts = {});
FiberMeasure measure_serial(const Word& w, const FiniteGroup& G, const EvalOptions& opts = {});

/// |{phi in Hom(F_d, G) : phi(w) = g}| via the bijection between Hom(F_d, G)
/// and d-tuples of G; equals measure(w, G).counts[g].
std::uint64_t hom_count_fixing(const Word& w, const FiniteGroup& G, int g,
                               const EvalOptions& opts = {});

/// True iff w evaluates to the identity on every tuple over G. Membership in
/// the intersection of the kernels of all homomorphisms F_d -> G; subgroups
/// of G contribute nothing extra because their tuples are G-tuples.
bool in_K_subgroup(const Word& w, const FiniteGroup& G, const EvalOptions& opts = {});

struct ImageComparison {
  bool equal = false;
  int witness = -1;  // least id in exactly one of the images
};
ImageComparison same_image(const Word& w1, const Word& w2, const FiniteGroup& G,
                           const EvalOptions& opts = {});

struct MeasureComparison {
  bool equal = false;
  int witness = -1;  // least id with differing counts
  std::uint64_t count1 = 0;
  std::uint64_t count2 = 0;
};
MeasureComparison same_measure(const Word& w1, const Word& w2, const FiniteGroup& G,
                               const EvalOptions& opts = {});

/// Intersection of the kernels of all homomorphisms P -> G, as a sorted id set.
std::vector<int> K_subgroup_finite(const FiniteGroup& P, const FiniteGroup& G,
                                   std::uint64_t max_assignments = kDefaultHomBudget);

/// Intersection of phi^-1(K) over all endomorphisms phi of P; checked to be
/// fully invariant before returning.
std::vector<int> J_subgroup_finite(const FiniteGroup& P, const FiniteGroup& G,
                                   std::uint64_t max_assignments = kDefaultHomBudget);

enum class CompareMode { Image, Measure };

struct CompareRow {
  std::string group_spec;
  int order = 0;
  bool equal = false;
  int witness = -1;                       // meaningful when !equal
  std::uint64_t count1 = 0, count2 = 0;   // measure mode only
};

struct CompareReport {
  std::string w1, w2;
  int rank = 0;
  CompareMode mode = CompareMode::Image;
  std::vector<CompareRow> rows;
  std::optional<std::string> first_differ;

  bool all_equal() const { return !first_differ.has_value(); }
};

/// Per-group verdicts over a battery of group specs, in battery order.
CompareReport battery_compare(const Word& w1, const Word& w2,
                              const std::vector<std::string>& battery, CompareMode mode,
                              const EvalOptions& opts = {});

}  // namespace wordmaps
