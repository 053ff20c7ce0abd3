#include "wordmaps/rigidity.hpp"

#include <algorithm>
#include <numeric>

namespace wordmaps {

namespace {

std::int64_t vector_gcd(const ExponentVector& v) {
  std::int64_t g = 0;
  for (std::int64_t t : v) g = std::gcd(g, t);
  return g;
}

// g = sum coeffs[i] * t[i] with g = gcd(t) >= 0.
std::pair<std::int64_t, std::vector<std::int64_t>> extended_gcd(
    const std::vector<std::int64_t>& t) {
  auto egcd2 = [](auto&& self, std::int64_t a, std::int64_t b)
      -> std::tuple<std::int64_t, std::int64_t, std::int64_t> {
    if (b == 0) {
      return a < 0 ? std::tuple{-a, std::int64_t{-1}, std::int64_t{0}}
                   : std::tuple{a, std::int64_t{1}, std::int64_t{0}};
    }
    auto [g, x, y] = self(self, b, a % b);
    return {g, y, x - (a / b) * y};
  };
  std::int64_t g = 0;
  std::vector<std::int64_t> coeffs(t.size(), 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto [g2, x, y] = egcd2(egcd2, g, t[i]);
    for (std::size_t j = 0; j < i; ++j) coeffs[j] *= x;
    coeffs[i] = y;
    g = g2;
  }
  return {g, std::move(coeffs)};
}

}  // namespace

bool is_surjective_word(const Word& w) { return vector_gcd(exponent_vector(w)) == 1; }

std::vector<int> bezout_witness(const Word& w, const FiniteGroup& G, int g) {
  if (g < 0 || g >= G.order()) {
    throw std::invalid_argument("bezout_witness: element out of range");
  }
  const ExponentVector t = exponent_vector(w);
  auto [content, coeffs] = extended_gcd(t);
  if (content != 1) {
    throw std::invalid_argument("bezout_witness: word is not surjective (content " +
                                std::to_string(content) + ")");
  }
  std::vector<int> witness(static_cast<std::size_t>(w.rank()));
  for (std::size_t i = 0; i < witness.size(); ++i) {
    witness[i] = G.power(g, coeffs[i]);
  }
  if (evaluate(w, G, witness) != g) {
    throw std::logic_error("bezout_witness: evaluation mismatch");
  }
  return witness;
}

std::string to_string(WordKind kind) {
  switch (kind) {
    case WordKind::Trivial:
      return "trivial";
    case WordKind::Surjective:
      return "surjective";
    case WordKind::PowerOfSurjective:
      return "power_of_surjective";
    case WordKind::TestWord:
      return "test_word";
  }
  return "unknown";
}

Classification classify_F2(const Word& w) {
  if (w.rank() != 2) {
    throw std::invalid_argument("classify_F2: word must have rank 2");
  }
  Classification c{WordKind::Trivial, Word(2), 0, 0, {0, 0}};
  if (w.empty()) {
    return c;
  }
  const Root root = maximal_root(w);
  c.root = root.root;
  c.multiplicity = root.multiplicity;
  c.root_exponents = exponent_vector(root.root);
  c.gcd = vector_gcd(c.root_exponents);
  if (c.gcd != 1) {
    c.kind = WordKind::TestWord;
  } else {
    c.kind = c.multiplicity >= 2 ? WordKind::PowerOfSurjective : WordKind::Surjective;
  }
  return c;
}

PowerImageCheck power_image_check(const Word& w, int dpow, int n_max, const EvalOptions& opts) {
  if (dpow < 2) {
    throw std::invalid_argument("power_image_check: power must be at least 2");
  }
  if (n_max < 1) {
    throw std::invalid_argument("power_image_check: n_max must be positive");
  }
  for (int n = 1; n <= n_max; ++n) {
    const FiniteGroup S = make_symmetric(n);
    std::vector<char> is_power(static_cast<std::size_t>(S.order()), 0);
    for (int x = 0; x < S.order(); ++x) {
      is_power[static_cast<std::size_t>(S.power(x, dpow))] = 1;
    }
    const WordImage img = image(w, S, opts);
    for (int g : img.members) {
      if (!is_power[static_cast<std::size_t>(g)]) {
        return {false, n, g};
      }
    }
  }
  return {true, 0, -1};
}

WordImage abelian_image(const AbelianWord& a, const FiniteGroup& G, const EvalOptions& opts) {
  if (a.entries.empty()) {
    throw std::invalid_argument("abelian_image: empty entry vector");
  }
  for (int x = 0; x < G.order(); ++x) {
    for (int y = x + 1; y < G.order(); ++y) {
      if (G.mult(x, y) != G.mult(y, x)) {
        throw std::invalid_argument("abelian_image: group " + G.label() + " is not abelian");
      }
    }
  }
  std::int64_t m = 0;
  for (std::int64_t e : a.entries) m = std::gcd(m, e);

  std::vector<char> seen(static_cast<std::size_t>(G.order()), 0);
  for (int g = 0; g < G.order(); ++g) {
    seen[static_cast<std::size_t>(G.power(g, m))] = 1;
  }
  WordImage img{&G, {}};
  for (int g = 0; g < G.order(); ++g) {
    if (seen[static_cast<std::size_t>(g)]) img.members.push_back(g);
  }

  const int rank = static_cast<int>(a.entries.size());
  std::vector<Syllable> raw;
  for (int i = 0; i < rank; ++i) {
    raw.push_back({i + 1, a.entries[static_cast<std::size_t>(i)]});
  }
  const WordImage generic = image(Word(rank, std::move(raw)), G, opts);
  if (generic.members != img.members) {
    throw std::logic_error("abelian_image: direct computation disagrees with the word map");
  }
  return img;
}

AbelianCertificate abelian_wpr_certificate(const AbelianWord& a) {
  std::int64_t m = 0;
  for (std::int64_t e : a.entries) m = std::gcd(m, e);
  if (m == 0) {
    throw std::invalid_argument("abelian_wpr_certificate: zero vector");
  }
  AbelianCertificate cert{m, {}};
  cert.primitive_part.reserve(a.entries.size());
  for (std::int64_t e : a.entries) {
    cert.primitive_part.push_back(e / m);
  }
  return cert;
}

std::string to_string(ExperimentVerdict v) {
  switch (v) {
    case ExperimentVerdict::Pass:
      return "pass";
    case ExperimentVerdict::Fail:
      return "fail";
    case ExperimentVerdict::NotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

ExperimentReport rigidity_experiment(const Word& w1, const Word& w2,
                                     const std::vector<std::string>& battery,
                                     const EvalOptions& opts) {
  if (w1.rank() != 2 || w2.rank() != 2) {
    throw std::invalid_argument("rigidity_experiment: words must have rank 2");
  }
  ExperimentReport report;
  report.classification = classify_F2(w1);
  report.image_compare = battery_compare(w1, w2, battery, CompareMode::Image, opts);
  report.measure_compare = battery_compare(w1, w2, battery, CompareMode::Measure, opts);
  if (report.classification.kind == WordKind::TestWord && report.image_compare.all_equal()) {
    report.verdict = report.measure_compare.all_equal() ? ExperimentVerdict::Pass
                                                        : ExperimentVerdict::Fail;
  } else {
    report.verdict = ExperimentVerdict::NotApplicable;
  }
  return report;
}

}  // namespace wordmaps
