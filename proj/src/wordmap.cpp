#include "wordmaps/wordmap.hpp"

#include <algorithm>
#include <atomic>

#include <omp.h>

namespace wordmaps {

namespace {

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

std::uint64_t tuple_count_or_throw(const Word& w, const FiniteGroup& G,
                                   const EvalOptions& opts) {
  const std::uint64_t n = static_cast<std::uint64_t>(G.order());
  std::uint64_t total = 1;
  for (int i = 0; i < w.rank(); ++i) {
    if (n != 0 && total > (std::uint64_t{1} << 62) / n) {
      throw budget_error("tuple count |G|^d overflows the 63-bit counter");
    }
    total *= n;
  }
  if (total > opts.max_tuples) {
    throw budget_error("tuple budget exceeded: |G|^d = " + std::to_string(total) + " > " +
                       std::to_string(opts.max_tuples));
  }
  return total;
}

// Per-(word, group) power tables: one row per distinct exponent appearing in
// the word, so the inner loop does one lookup and one multiplication per
// syllable.
struct PowTables {
  std::vector<std::vector<int>> rows;
  std::vector<int> row_of;  // per syllable, index into rows
  std::vector<int> coord;   // per syllable, tuple slot (0-based)
};

PowTables build_pow_tables(const Word& w, const FiniteGroup& G) {
  PowTables t;
  std::vector<std::int64_t> exponents;
  for (const Syllable& s : w.syllables()) {
    const auto it = std::find(exponents.begin(), exponents.end(), s.exp);
    int idx = static_cast<int>(it - exponents.begin());
    if (it == exponents.end()) {
      exponents.push_back(s.exp);
      std::vector<int> row(static_cast<std::size_t>(G.order()));
      for (int g = 0; g < G.order(); ++g) {
        row[static_cast<std::size_t>(g)] = G.power(g, s.exp);
      }
      t.rows.push_back(std::move(row));
    }
    t.row_of.push_back(idx);
    t.coord.push_back(s.gen - 1);
  }
  return t;
}

inline int eval_with_tables(const FiniteGroup& G, const PowTables& t, const int* tuple) {
  int acc = 0;
  for (std::size_t j = 0; j < t.coord.size(); ++j) {
    acc = G.mult(acc, t.rows[static_cast<std::size_t>(t.row_of[j])]
                            [static_cast<std::size_t>(tuple[t.coord[j]])]);
  }
  return acc;
}

// Mixed-radix scan over the sub-block with fixed first coordinate; the last
// coordinate moves fastest.
template <typename Body>
void scan_block(int first, int d, int n, std::uint64_t inner, Body&& body) {
  std::vector<int> tuple(static_cast<std::size_t>(d), 0);
  tuple[0] = first;
  for (std::uint64_t idx = 0; idx < inner; ++idx) {
    body(tuple.data());
    for (int i = d - 1; i >= 1; --i) {
      if (++tuple[static_cast<std::size_t>(i)] < n) break;
      tuple[static_cast<std::size_t>(i)] = 0;
    }
  }
}

}  // namespace

int evaluate(const Word& w, const FiniteGroup& G, std::span<const int> tuple) {
  if (static_cast<int>(tuple.size()) != w.rank()) {
    throw std::invalid_argument("evaluate: tuple arity does not match word rank");
  }
  int acc = 0;
  for (const Syllable& s : w.syllables()) {
    acc = G.mult(acc, G.power(tuple[static_cast<std::size_t>(s.gen - 1)], s.exp));
  }
  return acc;
}

bool WordImage::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

std::uint64_t FiberMeasure::total() const {
  std::uint64_t t = 0;
  for (std::uint64_t c : counts) t += c;
  return t;
}

std::vector<int> FiberMeasure::support() const {
  std::vector<int> out;
  for (std::size_t g = 0; g < counts.size(); ++g) {
    if (counts[g] > 0) out.push_back(static_cast<int>(g));
  }
  return out;
}

FiberMeasure measure(const Word& w, const FiniteGroup& G, const EvalOptions& opts) {
  const std::uint64_t total = tuple_count_or_throw(w, G, opts);
  const int n = G.order();
  const int d = w.rank();
  const std::uint64_t inner = total / static_cast<std::uint64_t>(n);
  const PowTables tables = build_pow_tables(w, G);

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
#pragma omp parallel num_threads(resolve_jobs(opts.jobs))
  {
    std::vector<std::uint64_t> local(static_cast<std::size_t>(n), 0);
#pragma omp for schedule(static) nowait
    for (int first = 0; first < n; ++first) {
      scan_block(first, d, n, inner, [&](const int* tuple) {
        ++local[static_cast<std::size_t>(eval_with_tables(G, tables, tuple))];
      });
    }
#pragma omp critical
    for (int g = 0; g < n; ++g) {
      counts[static_cast<std::size_t>(g)] += local[static_cast<std::size_t>(g)];
    }
  }
  return {&G, d, std::move(counts)};
}

WordImage image(const Word& w, const FiniteGroup& G, const EvalOptions& opts) {
  const std::uint64_t total = tuple_count_or_throw(w, G, opts);
  const int n = G.order();
  const int d = w.rank();
  const std::uint64_t inner = total / static_cast<std::uint64_t>(n);
  const PowTables tables = build_pow_tables(w, G);

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::atomic<bool> full{false};
#pragma omp parallel num_threads(resolve_jobs(opts.jobs))
  {
    std::vector<char> local(static_cast<std::size_t>(n), 0);
    int local_count = 0;
#pragma omp for schedule(static) nowait
    for (int first = 0; first < n; ++first) {
      if (full.load(std::memory_order_relaxed)) continue;
      scan_block(first, d, n, inner, [&](const int* tuple) {
        const int v = eval_with_tables(G, tables, tuple);
        if (!local[static_cast<std::size_t>(v)]) {
          local[static_cast<std::size_t>(v)] = 1;
          if (++local_count == n) full.store(true, std::memory_order_relaxed);
        }
      });
    }
#pragma omp critical
    for (int g = 0; g < n; ++g) {
      if (local[static_cast<std::size_t>(g)]) seen[static_cast<std::size_t>(g)] = 1;
    }
  }
  // A full local mask short-circuits the remaining blocks; the merged set is
  // the full group in that case, identical to the exhaustive scan.
  if (full.load()) {
    std::fill(seen.begin(), seen.end(), 1);
  }
  WordImage img{&G, {}};
  for (int g = 0; g < n; ++g) {
    if (seen[static_cast<std::size_t>(g)]) img.members.push_back(g);
  }
  return img;
}

FiberMeasure measure_serial(const Word& w, const FiniteGroup& G, const EvalOptions& opts) {
  const std::uint64_t total = tuple_count_or_throw(w, G, opts);
  const int n = G.order();
  const int d = w.rank();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  std::vector<int> tuple(static_cast<std::size_t>(d), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    ++counts[static_cast<std::size_t>(evaluate(w, G, tuple))];
    for (int i = d - 1; i >= 0; --i) {
      if (++tuple[static_cast<std::size_t>(i)] < n) break;
      tuple[static_cast<std::size_t>(i)] = 0;
    }
  }
  return {&G, d, std::move(counts)};
}

WordImage image_serial(const Word& w, const FiniteGroup& G, const EvalOptions& opts) {
  const FiberMeasure m = measure_serial(w, G, opts);
  WordImage img{&G, m.support()};
  return img;
}

std::uint64_t hom_count_fixing(const Word& w, const FiniteGroup& G, int g,
                               const EvalOptions& opts) {
  if (g < 0 || g >= G.order()) {
    throw std::invalid_argument("hom_count_fixing: element out of range");
  }
  return measure(w, G, opts).counts[static_cast<std::size_t>(g)];
}

bool in_K_subgroup(const Word& w, const FiniteGroup& G, const EvalOptions& opts) {
  const std::uint64_t total = tuple_count_or_throw(w, G, opts);
  const int n = G.order();
  const int d = w.rank();
  const PowTables tables = build_pow_tables(w, G);
  std::vector<int> tuple(static_cast<std::size_t>(d), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (eval_with_tables(G, tables, tuple.data()) != 0) {
      return false;
    }
    for (int i = d - 1; i >= 0; --i) {
      if (++tuple[static_cast<std::size_t>(i)] < n) break;
      tuple[static_cast<std::size_t>(i)] = 0;
    }
  }
  return true;
}

ImageComparison same_image(const Word& w1, const Word& w2, const FiniteGroup& G,
                           const EvalOptions& opts) {
  if (w1.rank() != w2.rank()) {
    throw std::invalid_argument("same_image: rank mismatch");
  }
  const WordImage a = image(w1, G, opts);
  const WordImage b = image(w2, G, opts);
  if (a.members == b.members) {
    return {true, -1};
  }
  for (int g = 0; g < G.order(); ++g) {
    if (a.contains(g) != b.contains(g)) {
      return {false, g};
    }
  }
  return {true, -1};
}

MeasureComparison same_measure(const Word& w1, const Word& w2, const FiniteGroup& G,
                               const EvalOptions& opts) {
  if (w1.rank() != w2.rank()) {
    throw std::invalid_argument("same_measure: rank mismatch");
  }
  const FiberMeasure a = measure(w1, G, opts);
  const FiberMeasure b = measure(w2, G, opts);
  for (int g = 0; g < G.order(); ++g) {
    if (a.counts[static_cast<std::size_t>(g)] != b.counts[static_cast<std::size_t>(g)]) {
      return {false, g, a.counts[static_cast<std::size_t>(g)], b.counts[static_cast<std::size_t>(g)]};
    }
  }
  return {true, -1, 0, 0};
}

std::vector<int> K_subgroup_finite(const FiniteGroup& P, const FiniteGroup& G,
                                   std::uint64_t max_assignments) {
  const auto homs = enumerate_homomorphisms(P, G, max_assignments);
  std::vector<int> out;
  for (int x = 0; x < P.order(); ++x) {
    bool in_all_kernels = true;
    for (const auto& hom : homs) {
      if (hom(x) != 0) {
        in_all_kernels = false;
        break;
      }
    }
    if (in_all_kernels) out.push_back(x);
  }
  return out;
}

std::vector<int> J_subgroup_finite(const FiniteGroup& P, const FiniteGroup& G,
                                   std::uint64_t max_assignments) {
  const std::vector<int> K = K_subgroup_finite(P, G, max_assignments);
  std::vector<char> in_K(static_cast<std::size_t>(P.order()), 0);
  for (int x : K) in_K[static_cast<std::size_t>(x)] = 1;

  const auto ends = enumerate_endomorphisms(P, max_assignments);
  std::vector<int> J;
  for (int x = 0; x < P.order(); ++x) {
    bool keep = true;
    for (const auto& phi : ends) {
      if (!in_K[static_cast<std::size_t>(phi(x))]) {
        keep = false;
        break;
      }
    }
    if (keep) J.push_back(x);
  }

  std::vector<char> in_J(static_cast<std::size_t>(P.order()), 0);
  for (int x : J) in_J[static_cast<std::size_t>(x)] = 1;
  for (const auto& phi : ends) {
    for (int x : J) {
      if (!in_J[static_cast<std::size_t>(phi(x))]) {
        throw std::logic_error("J_subgroup_finite: result is not fully invariant");
      }
    }
  }
  return J;
}

CompareReport battery_compare(const Word& w1, const Word& w2,
                              const std::vector<std::string>& battery, CompareMode mode,
                              const EvalOptions& opts) {
  if (w1.rank() != w2.rank()) {
    throw std::invalid_argument("battery_compare: rank mismatch");
  }
  CompareReport report;
  report.w1 = to_string(w1);
  report.w2 = to_string(w2);
  report.rank = w1.rank();
  report.mode = mode;
  for (const std::string& spec : battery) {
    const FiniteGroup G = make_group(spec);
    CompareRow row;
    row.group_spec = spec;
    row.order = G.order();
    if (mode == CompareMode::Image) {
      const ImageComparison cmp = same_image(w1, w2, G, opts);
      row.equal = cmp.equal;
      row.witness = cmp.witness;
    } else {
      const MeasureComparison cmp = same_measure(w1, w2, G, opts);
      row.equal = cmp.equal;
      row.witness = cmp.witness;
      row.count1 = cmp.count1;
      row.count2 = cmp.count2;
    }
    if (!row.equal && !report.first_differ) {
      report.first_differ = spec;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace wordmaps
