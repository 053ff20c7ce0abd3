#include "wordmaps/groups.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <random>

#include <omp.h>

namespace wordmaps {

namespace {

constexpr int kExhaustiveAssocBound = 64;

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t limit) {
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) {
      return limit + 1;
    }
    result *= base;
  }
  return result;
}

void validate_table(const std::string& label, const std::vector<int>& table, int n,
                    const std::vector<int>& inverse) {
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      const int v = at(a, b);
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument(label + ": table row " + std::to_string(a) +
                                    " is not a permutation");
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      const int v = at(a, b);
      if (seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument(label + ": table column " + std::to_string(b) +
                                    " is not a permutation");
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int g = 0; g < n; ++g) {
    if (at(0, g) != g || at(g, 0) != g) {
      throw std::invalid_argument(label + ": element 0 is not an identity");
    }
    if (at(g, inverse[static_cast<std::size_t>(g)]) != 0) {
      throw std::invalid_argument(label + ": inverse table broken at " + std::to_string(g));
    }
  }
  if (n <= kExhaustiveAssocBound) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int ab = at(a, b);
        for (int c = 0; c < n; ++c) {
          if (at(ab, c) != at(a, at(b, c))) {
            throw std::invalid_argument(label + ": associativity fails");
          }
        }
      }
    }
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int trial = 0; trial < 200'000; ++trial) {
      const int a = pick(rng);
      const int b = pick(rng);
      const int c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c))) {
        throw std::invalid_argument(label + ": associativity fails (sampled)");
      }
    }
  }
}

std::vector<int> permutation_compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i] = p[static_cast<std::size_t>(q[i])];
  }
  return r;
}

int permutation_parity(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++inversions;
    }
  }
  return inversions % 2;
}

std::string cycle_notation(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (done[static_cast<std::size_t>(i)] || p[static_cast<std::size_t>(i)] == i) {
      continue;
    }
    out += '(';
    int j = i;
    bool first = true;
    while (!done[static_cast<std::size_t>(j)]) {
      done[static_cast<std::size_t>(j)] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);  // 1-based points for display
      first = false;
      j = p[static_cast<std::size_t>(j)];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

FiniteGroup from_permutations(std::string label, const std::vector<std::vector<int>>& perms,
                              const std::vector<std::vector<int>>& generator_perms) {
  const int n = static_cast<int>(perms.size());
  std::vector<int> ids;  // lookup by sorted order; perms are already sorted
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  auto index_of = [&](const std::vector<int>& p) {
    const auto it = std::lower_bound(perms.begin(), perms.end(), p);
    return static_cast<int>(it - perms.begin());
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * n + b] =
          index_of(permutation_compose(perms[static_cast<std::size_t>(a)],
                                       perms[static_cast<std::size_t>(b)]));
    }
  }
  std::vector<int> gens;
  for (const auto& g : generator_perms) {
    const int id = index_of(g);
    if (id != 0 && std::find(gens.begin(), gens.end(), id) == gens.end()) {
      gens.push_back(id);
    }
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (const auto& p : perms) names.push_back(cycle_notation(p));
  return FiniteGroup::from_table(std::move(label), std::move(table), std::move(gens),
                                 std::move(names));
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string label, std::vector<int> table,
                                    std::vector<int> generators,
                                    std::vector<std::string> element_names) {
  const std::size_t sz = table.size();
  int n = 1;
  while (static_cast<std::size_t>(n) * n < sz) ++n;
  if (static_cast<std::size_t>(n) * n != sz || sz == 0) {
    throw std::invalid_argument(label + ": table is not square");
  }
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[static_cast<std::size_t>(a) * n + b] == 0) {
        inverse[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inverse[static_cast<std::size_t>(a)] < 0) {
      throw std::invalid_argument(label + ": element without inverse");
    }
  }
  validate_table(label, table, n, inverse);
  for (int g : generators) {
    if (g < 0 || g >= n) {
      throw std::invalid_argument(label + ": generator id out of range");
    }
  }
  if (element_names.empty()) {
    for (int g = 0; g < n; ++g) element_names.push_back(std::to_string(g));
  }
  if (element_names.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument(label + ": element name count mismatch");
  }
  FiniteGroup G;
  G.n_ = n;
  G.table_ = std::move(table);
  G.inverse_ = std::move(inverse);
  G.generators_ = std::move(generators);
  G.label_ = std::move(label);
  G.element_names_ = std::move(element_names);
  return G;
}

int FiniteGroup::power(int g, std::int64_t e) const {
  // The group exponent divides the order, so reduce e mod n first.
  std::int64_t r = e % n_;
  if (r < 0) r += n_;
  int base = g;
  int acc = 0;
  while (r > 0) {
    if (r & 1) acc = mult(acc, base);
    base = mult(base, base);
    r >>= 1;
  }
  return acc;
}

FiniteGroup make_cyclic(int n) {
  if (n < 1) {
    throw std::invalid_argument("make_cyclic: order must be positive");
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    }
  }
  std::vector<int> gens;
  if (n >= 2) gens.push_back(1);
  return FiniteGroup::from_table("Z" + std::to_string(n), std::move(table), std::move(gens));
}

FiniteGroup make_symmetric(int n, int bound) {
  if (n < 1 || n > bound) {
    throw std::invalid_argument("make_symmetric: degree out of bounds");
  }
  std::vector<std::vector<int>> perms;
  perms.reserve(factorial(n));
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> transposition(static_cast<std::size_t>(n));
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    gens.push_back(transposition);
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    gens.push_back(cycle);
  }
  return from_permutations("S" + std::to_string(n), perms, gens);
}

FiniteGroup make_alternating(int n, int bound) {
  if (n < 1 || n > bound) {
    throw std::invalid_argument("make_alternating: degree out of bounds");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (permutation_parity(p) == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::vector<int>> gens;
  if (n >= 3) {
    std::vector<int> three(static_cast<std::size_t>(n));
    std::iota(three.begin(), three.end(), 0);
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    gens.push_back(three);
    if (n >= 4) {
      std::vector<int> big(static_cast<std::size_t>(n));
      std::iota(big.begin(), big.end(), 0);
      if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) big[static_cast<std::size_t>(i)] = (i + 1) % n;
      } else {
        // (n-1)-cycle on points 1..n-1, an even permutation for even n
        for (int i = 1; i < n; ++i) big[static_cast<std::size_t>(i)] = i % (n - 1) + 1;
      }
      gens.push_back(big);
    }
  }
  return from_permutations("A" + std::to_string(n), perms, gens);
}

FiniteGroup make_dihedral(int order) {
  if (order < 2 || order % 2 != 0) {
    throw std::invalid_argument("make_dihedral: order must be even and at least 2");
  }
  const int h = order / 2;  // rotations; ids 0..h-1; reflections h..order-1
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  auto id_of = [&](int refl, int rot) { return refl * h + rot; };
  for (int a = 0; a < order; ++a) {
    const int ra = a >= h;
    const int ka = a % h;
    for (int b = 0; b < order; ++b) {
      const int rb = b >= h;
      const int kb = b % h;
      // s^ra r^ka * s^rb r^kb with r^k s = s r^-k
      const int refl = ra ^ rb;
      const int rot = rb ? (kb - ka + h) % h : (ka + kb) % h;
      table[static_cast<std::size_t>(a) * order + b] = id_of(refl, rot);
    }
  }
  std::vector<int> gens;
  if (h >= 2) gens.push_back(1);
  gens.push_back(h);
  std::vector<std::string> names;
  for (int k = 0; k < h; ++k) {
    names.push_back(k == 0 ? "e" : (k == 1 ? "r" : "r^" + std::to_string(k)));
  }
  for (int k = 0; k < h; ++k) {
    names.push_back(k == 0 ? "s" : (k == 1 ? "sr" : "sr^" + std::to_string(k)));
  }
  return FiniteGroup::from_table("D" + std::to_string(order), std::move(table), std::move(gens),
                                 std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right) {
  const int nl = left.order();
  const int nr = right.order();
  const int n = nl * nr;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  auto id_of = [&](int a, int b) { return a * nr + b; };  // left factor major
  for (int a1 = 0; a1 < nl; ++a1) {
    for (int b1 = 0; b1 < nr; ++b1) {
      for (int a2 = 0; a2 < nl; ++a2) {
        for (int b2 = 0; b2 < nr; ++b2) {
          table[static_cast<std::size_t>(id_of(a1, b1)) * n + id_of(a2, b2)] =
              id_of(left.mult(a1, a2), right.mult(b1, b2));
        }
      }
    }
  }
  std::vector<int> gens;
  for (int g : left.generators()) gens.push_back(id_of(g, 0));
  for (int g : right.generators()) gens.push_back(id_of(0, g));
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < nl; ++a) {
    for (int b = 0; b < nr; ++b) {
      names.push_back("(" + left.element_names()[static_cast<std::size_t>(a)] + "," +
                      right.element_names()[static_cast<std::size_t>(b)] + ")");
    }
  }
  return FiniteGroup::from_table(left.label() + "x" + right.label(), std::move(table),
                                 std::move(gens), std::move(names));
}

namespace {

struct SpecFactor {
  char family;
  int size;
};

std::vector<SpecFactor> parse_spec_factors(std::string_view spec) {
  std::vector<SpecFactor> factors;
  std::size_t i = 0;
  while (i < spec.size()) {
    const char family = spec[i];
    if (family != 'Z' && family != 'S' && family != 'A' && family != 'D') {
      throw std::invalid_argument("group spec: unknown family '" + std::string(1, family) +
                                  "' in \"" + std::string(spec) + "\"");
    }
    ++i;
    int size = 0;
    const char* first = spec.data() + i;
    const char* last = spec.data() + spec.size();
    auto [ptr, ec] = std::from_chars(first, last, size);
    if (ec != std::errc() || ptr == first) {
      throw std::invalid_argument("group spec: missing order in \"" + std::string(spec) + "\"");
    }
    i += static_cast<std::size_t>(ptr - first);
    factors.push_back({family, size});
    if (i < spec.size()) {
      if (spec[i] != 'x') {
        throw std::invalid_argument("group spec: expected 'x' in \"" + std::string(spec) + "\"");
      }
      ++i;
      if (i == spec.size()) {
        throw std::invalid_argument("group spec: trailing 'x' in \"" + std::string(spec) + "\"");
      }
    }
  }
  if (factors.empty()) {
    throw std::invalid_argument("group spec: empty");
  }
  return factors;
}

void check_factor(const SpecFactor& f) {
  switch (f.family) {
    case 'Z':
      if (f.size < 1) throw std::invalid_argument("group spec: Zn needs n >= 1");
      break;
    case 'S':
      if (f.size < 1 || f.size > 8) throw std::invalid_argument("group spec: Sn needs 1 <= n <= 8");
      break;
    case 'A':
      if (f.size < 1 || f.size > 8) throw std::invalid_argument("group spec: An needs 1 <= n <= 8");
      break;
    case 'D':
      if (f.size < 2 || f.size % 2 != 0) {
        throw std::invalid_argument("group spec: Dn needs even n >= 2");
      }
      break;
    default:
      break;
  }
}

FiniteGroup build_factor(const SpecFactor& f) {
  check_factor(f);
  switch (f.family) {
    case 'Z':
      return make_cyclic(f.size);
    case 'S':
      return make_symmetric(f.size);
    case 'A':
      return make_alternating(f.size);
    default:
      return make_dihedral(f.size);
  }
}

}  // namespace

FiniteGroup make_group(std::string_view spec) {
  const std::vector<SpecFactor> factors = parse_spec_factors(spec);
  FiniteGroup G = build_factor(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    G = direct_product(G, build_factor(factors[i]));
  }
  return G;
}

void check_group_spec(std::string_view spec) {
  for (const SpecFactor& f : parse_spec_factors(spec)) {
    check_factor(f);
  }
}

int permutation_id(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  int id = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (images[static_cast<std::size_t>(j)] < images[static_cast<std::size_t>(i)]) ++smaller;
    }
    id = id * (n - i) + smaller;
  }
  return id;
}

std::optional<int> element_by_name(const FiniteGroup& G, std::string_view name) {
  const auto& names = G.element_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::vector<int> subgroup_generated(const FiniteGroup& G, const std::vector<int>& seeds) {
  for (int s : seeds) {
    if (s < 0 || s >= G.order()) {
      throw std::invalid_argument("subgroup_generated: seed out of range");
    }
  }
  std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
  in[0] = 1;
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    const int x = frontier.front();
    frontier.pop_front();
    for (int s : seeds) {
      const int y = G.mult(x, s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        frontier.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int g = 0; g < G.order(); ++g) {
    if (in[static_cast<std::size_t>(g)]) out.push_back(g);
  }
  return out;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& subset) {
  std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
  for (int g : subset) {
    if (g < 0 || g >= G.order()) return false;
    in[static_cast<std::size_t>(g)] = 1;
  }
  if (!in[0]) return false;
  for (int a : subset) {
    for (int b : subset) {
      if (!in[static_cast<std::size_t>(G.mult(a, b))]) return false;
    }
  }
  return true;
}

bool is_normal(const FiniteGroup& G, const std::vector<int>& subset) {
  if (!is_subgroup(G, subset)) {
    throw std::invalid_argument("is_normal: subset is not a subgroup");
  }
  std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
  for (int g : subset) in[static_cast<std::size_t>(g)] = 1;
  for (int g = 0; g < G.order(); ++g) {
    for (int h : subset) {
      if (!in[static_cast<std::size_t>(G.mult(G.mult(g, h), G.inverse(g)))]) {
        return false;
      }
    }
  }
  return true;
}

Quotient quotient_group(const FiniteGroup& G, const std::vector<int>& normal_subgroup) {
  if (!is_subgroup(G, normal_subgroup)) {
    throw std::invalid_argument("quotient_group: not a subgroup");
  }
  if (!is_normal(G, normal_subgroup)) {
    throw std::invalid_argument("quotient_group: subgroup is not normal");
  }
  const int n = G.order();
  std::vector<int> coset(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int g = 0; g < n; ++g) {
    if (coset[static_cast<std::size_t>(g)] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int h : normal_subgroup) {
      coset[static_cast<std::size_t>(G.mult(g, h))] = id;
    }
  }
  const int q = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      table[static_cast<std::size_t>(a) * q + b] =
          coset[static_cast<std::size_t>(G.mult(reps[static_cast<std::size_t>(a)],
                                                reps[static_cast<std::size_t>(b)]))];
    }
  }
  std::vector<int> gens;
  for (int g : G.generators()) {
    const int c = coset[static_cast<std::size_t>(g)];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) {
      gens.push_back(c);
    }
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(q));
  for (int rep : reps) {
    names.push_back("[" + G.element_names()[static_cast<std::size_t>(rep)] + "]");
  }
  FiniteGroup Q = FiniteGroup::from_table(G.label() + "/N", std::move(table), std::move(gens),
                                          std::move(names));
  return {std::move(Q), GroupHomomorphism{std::move(coset)}};
}

bool GroupHomomorphism::is_bijective() const {
  std::vector<char> seen(map.size(), 0);
  for (int v : map) {
    if (v < 0 || static_cast<std::size_t>(v) >= map.size() || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

namespace {

// Breadth-first generator decomposition: every element as parent * generator.
struct Decomposition {
  std::vector<int> order;   // BFS visit order, starting at the identity
  std::vector<int> parent;  // by element id
  std::vector<int> via;     // generator index used to reach the element
};

Decomposition decompose(const FiniteGroup& P) {
  const int n = P.order();
  Decomposition d;
  d.parent.assign(static_cast<std::size_t>(n), -1);
  d.via.assign(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[0] = 1;
  d.order.push_back(0);
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    const int x = frontier.front();
    frontier.pop_front();
    for (std::size_t gi = 0; gi < P.generators().size(); ++gi) {
      const int y = P.mult(x, P.generators()[gi]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        d.parent[static_cast<std::size_t>(y)] = x;
        d.via[static_cast<std::size_t>(y)] = static_cast<int>(gi);
        d.order.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  if (static_cast<int>(d.order.size()) != n) {
    throw std::invalid_argument(P.label() + ": recorded generators do not generate the group");
  }
  return d;
}

bool extend_and_validate(const FiniteGroup& P, const FiniteGroup& G, const Decomposition& d,
                         const std::vector<int>& images, std::vector<int>& map) {
  const int n = P.order();
  map.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 1; i < d.order.size(); ++i) {
    const int y = d.order[i];
    map[static_cast<std::size_t>(y)] =
        G.mult(map[static_cast<std::size_t>(d.parent[static_cast<std::size_t>(y)])],
               images[static_cast<std::size_t>(d.via[static_cast<std::size_t>(y)])]);
  }
  for (int a = 0; a < n; ++a) {
    const int fa = map[static_cast<std::size_t>(a)];
    for (int b = 0; b < n; ++b) {
      if (map[static_cast<std::size_t>(P.mult(a, b))] !=
          G.mult(fa, map[static_cast<std::size_t>(b)])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<GroupHomomorphism> enumerate_homomorphisms(const FiniteGroup& P, const FiniteGroup& G,
                                                       std::uint64_t max_assignments) {
  const std::size_t k = P.generators().size();
  if (k == 0) {
    if (P.order() != 1) {
      throw std::invalid_argument(P.label() + ": no recorded generator set");
    }
    return {GroupHomomorphism{{0}}};
  }
  const std::uint64_t total =
      checked_pow(static_cast<std::uint64_t>(G.order()), static_cast<int>(k), max_assignments);
  if (total > max_assignments) {
    throw budget_error("homomorphism enumeration budget exceeded: |G|^k > " +
                       std::to_string(max_assignments));
  }
  const Decomposition d = decompose(P);
  const int ng = G.order();

  // Partitioned by the image of the first generator; per-bucket collection
  // keeps the output in assignment order for any thread count.
  std::vector<std::vector<GroupHomomorphism>> buckets(static_cast<std::size_t>(ng));
#pragma omp parallel for schedule(dynamic)
  for (int first = 0; first < ng; ++first) {
    std::vector<int> images(k, 0);
    images[0] = first;
    std::vector<int> map;
    const std::uint64_t inner = total / static_cast<std::uint64_t>(ng);
    for (std::uint64_t idx = 0; idx < inner; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t gi = k; gi-- > 1;) {
        images[gi] = static_cast<int>(rest % static_cast<std::uint64_t>(ng));
        rest /= static_cast<std::uint64_t>(ng);
      }
      if (extend_and_validate(P, G, d, images, map)) {
        buckets[static_cast<std::size_t>(first)].push_back(GroupHomomorphism{map});
      }
    }
  }
  std::vector<GroupHomomorphism> out;
  for (auto& bucket : buckets) {
    for (auto& hom : bucket) out.push_back(std::move(hom));
  }
  return out;
}

std::vector<GroupHomomorphism> enumerate_endomorphisms(const FiniteGroup& G,
                                                       std::uint64_t max_assignments) {
  return enumerate_homomorphisms(G, G, max_assignments);
}

std::vector<GroupHomomorphism> enumerate_automorphisms(const FiniteGroup& G,
                                                       std::uint64_t max_assignments) {
  std::vector<GroupHomomorphism> out;
  for (auto& hom : enumerate_endomorphisms(G, max_assignments)) {
    if (hom.is_bijective()) out.push_back(std::move(hom));
  }
  return out;
}

EndoEquivalence endo_equivalent_in_finite(const FiniteGroup& G, int g, int h,
                                          std::uint64_t max_assignments) {
  if (g < 0 || g >= G.order() || h < 0 || h >= G.order()) {
    throw std::invalid_argument("endo_equivalent_in_finite: element out of range");
  }
  EndoEquivalence result;
  for (auto& hom : enumerate_endomorphisms(G, max_assignments)) {
    if (!result.to_second && hom(g) == h) result.to_second = hom;
    if (!result.to_first && hom(h) == g) result.to_first = hom;
    if (result.to_second && result.to_first) break;
  }
  result.equivalent = result.to_second && result.to_first;
  if (!result.equivalent) {
    result.to_second.reset();
    result.to_first.reset();
  }
  return result;
}

bool is_d_generated(const FiniteGroup& G, int d, std::uint64_t max_tuples) {
  if (d < 0) {
    throw std::invalid_argument("is_d_generated: negative d");
  }
  const int n = G.order();
  if (n == 1) return true;
  const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(n), d, max_tuples);
  if (total > max_tuples) {
    throw budget_error("is_d_generated budget exceeded");
  }
  std::vector<int> tuple(static_cast<std::size_t>(d));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = static_cast<std::size_t>(d); i-- > 0;) {
      tuple[i] = static_cast<int>(rest % static_cast<std::uint64_t>(n));
      rest /= static_cast<std::uint64_t>(n);
    }
    if (static_cast<int>(subgroup_generated(G, tuple).size()) == n) {
      return true;
    }
  }
  return false;
}

}  // namespace wordmaps
