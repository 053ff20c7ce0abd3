#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordmaps {

/// Thrown when an enumeration would exceed its configured assignment or
/// tuple budget. Maps to CLI exit code 3.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultHomBudget = 10'000'000;

/// Finite group as a dense Cayley table. Element 0 is the identity. Values
/// are immutable after construction and safe to share across threads.
class FiniteGroup {
 public:
  /// Validates the table (Latin square, identity, inverses; associativity
  /// exhaustively up to order 64, sampled above) before accepting it.
  static FiniteGroup from_table(std::string label, std::vector<int> table,
                                std::vector<int> generators,
                                std::vector<std::string> element_names = {});

  int order() const { return n_; }
  int mult(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int power(int g, std::int64_t e) const;

  const std::string& label() const { return label_; }
  const std::vector<int>& generators() const { return generators_; }
  const std::vector<std::string>& element_names() const { return element_names_; }
  const std::vector<int>& table() const { return table_; }

 private:
  FiniteGroup() = default;

  int n_ = 1;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::string label_;
  std::vector<std::string> element_names_;
};

FiniteGroup make_cyclic(int n);
FiniteGroup make_symmetric(int n, int bound = 8);
FiniteGroup make_alternating(int n, int bound = 8);
FiniteGroup make_dihedral(int order);  // order even and >= 2
FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right);

/// Builds a group from the spec grammar: Zn | Sn | An | Dn (dihedral of
/// order n, n even), combined with `x` for direct products, e.g. "S3xZ2".
FiniteGroup make_group(std::string_view spec);

/// Validates a spec string (syntax and size bounds) without building tables.
void check_group_spec(std::string_view spec);

/// Lexicographic rank of a permutation given as an image vector; matches the
/// element ids used by make_symmetric.
int permutation_id(const std::vector<int>& images);

std::optional<int> element_by_name(const FiniteGroup& G, std::string_view name);

std::vector<int> subgroup_generated(const FiniteGroup& G, const std::vector<int>& seeds);
bool is_subgroup(const FiniteGroup& G, const std::vector<int>& subset);
bool is_normal(const FiniteGroup& G, const std::vector<int>& subset);

/// Homomorphism between two fixed groups, stored pointwise.
struct GroupHomomorphism {
  std::vector<int> map;  // size = source order; map[identity] == identity

  int operator()(int g) const { return map[static_cast<std::size_t>(g)]; }
  bool is_bijective() const;

  friend bool operator==(const GroupHomomorphism&, const GroupHomomorphism&) = default;
};

struct Quotient {
  FiniteGroup group;
  GroupHomomorphism projection;  // element id -> coset id
};
Quotient quotient_group(const FiniteGroup& G, const std::vector<int>& normal_subgroup);

/// Complete Hom(P, G), found by assigning images to P's recorded generators
/// and extending along a breadth-first generator decomposition of every
/// element, then validating multiplicativity. Output order is the mixed-radix
/// order of the generator-image assignment, independent of thread count.
std::vector<GroupHomomorphism> enumerate_homomorphisms(const FiniteGroup& P, const FiniteGroup& G,
                                                       std::uint64_t max_assignments = kDefaultHomBudget);

std::vector<GroupHomomorphism> enumerate_endomorphisms(const FiniteGroup& G,
                                                       std::uint64_t max_assignments = kDefaultHomBudget);
std::vector<GroupHomomorphism> enumerate_automorphisms(const FiniteGroup& G,
                                                       std::uint64_t max_assignments = kDefaultHomBudget);

struct EndoEquivalence {
  bool equivalent = false;
  std::optional<GroupHomomorphism> to_second;  // maps g to h
  std::optional<GroupHomomorphism> to_first;   // maps h to g
};
EndoEquivalence endo_equivalent_in_finite(const FiniteGroup& G, int g, int h,
                                          std::uint64_t max_assignments = kDefaultHomBudget);

bool is_d_generated(const FiniteGroup& G, int d, std::uint64_t max_tuples = kDefaultHomBudget);

}  // namespace wordmaps
