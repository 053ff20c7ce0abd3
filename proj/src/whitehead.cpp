#include "wordmaps/whitehead.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wordmaps {

namespace {

// Lexicographically least rotation of a cyclic letter sequence.
std::vector<int> canonical_rotation(const std::vector<int>& letters) {
  const std::size_t n = letters.size();
  if (n == 0) {
    return {};
  }
  std::size_t best = 0;
  for (std::size_t start = 1; start < n; ++start) {
    for (std::size_t k = 0; k < n; ++k) {
      const int a = letters[(start + k) % n];
      const int b = letters[(best + k) % n];
      if (a != b) {
        if (a < b) best = start;
        break;
      }
    }
  }
  std::vector<int> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = letters[(best + k) % n];
  }
  return out;
}

Word cyclic_core(const Word& w) { return cyclic_reduce(w).core; }

FreeEndomorphism fold_moves(int rank, const std::vector<const WhiteheadMove*>& in_application_order) {
  FreeEndomorphism acc = identity_endomorphism(rank);
  for (const WhiteheadMove* mv : in_application_order) {
    acc = compose(mv->endomorphism(), acc);
  }
  return acc;
}

FreeEndomorphism inner_automorphism(const Word& s) {
  FreeEndomorphism phi{s.rank(), {}};
  const Word s_inv = invert(s);
  for (int g = 1; g <= s.rank(); ++g) {
    Word x(s.rank(), {{g, 1}});
    phi.images.push_back(concat(concat(s, x), s_inv));
  }
  return phi;
}

}  // namespace

FreeEndomorphism WhiteheadMove::endomorphism() const {
  FreeEndomorphism phi{rank, {}};
  phi.images.reserve(static_cast<std::size_t>(rank));
  if (kind == Kind::Permutation) {
    for (int g = 1; g <= rank; ++g) {
      phi.images.emplace_back(
          rank, std::vector<Syllable>{{target[static_cast<std::size_t>(g - 1)],
                                       static_cast<std::int64_t>(sign[static_cast<std::size_t>(g - 1)])}});
    }
    return phi;
  }
  for (int g = 1; g <= rank; ++g) {
    if (g == mult_gen) {
      phi.images.emplace_back(rank, std::vector<Syllable>{{g, 1}});
      continue;
    }
    const int pos_letter = 2 * (g - 1);
    const int neg_letter = pos_letter + 1;
    std::vector<Syllable> img;
    if (in_set[static_cast<std::size_t>(neg_letter)]) {
      img.push_back({mult_gen, static_cast<std::int64_t>(-mult_sign)});
    }
    img.push_back({g, 1});
    if (in_set[static_cast<std::size_t>(pos_letter)]) {
      img.push_back({mult_gen, static_cast<std::int64_t>(mult_sign)});
    }
    phi.images.emplace_back(rank, std::move(img));
  }
  return phi;
}

WhiteheadMove WhiteheadMove::inverse() const {
  WhiteheadMove inv = *this;
  if (kind == Kind::Permutation) {
    for (int i = 0; i < rank; ++i) {
      const int t = target[static_cast<std::size_t>(i)] - 1;
      inv.target[static_cast<std::size_t>(t)] = i + 1;
      inv.sign[static_cast<std::size_t>(t)] = sign[static_cast<std::size_t>(i)];
    }
    return inv;
  }
  const int a_letter = 2 * (mult_gen - 1) + (mult_sign < 0 ? 1 : 0);
  inv.in_set[static_cast<std::size_t>(a_letter)] = 0;
  inv.in_set[static_cast<std::size_t>(a_letter ^ 1)] = 1;
  inv.mult_sign = -mult_sign;
  return inv;
}

Word WhiteheadMove::apply(const Word& w) const { return apply_endomorphism(endomorphism(), w); }

std::vector<WhiteheadMove> whitehead_moves(int rank, bool include_permutations) {
  std::vector<WhiteheadMove> moves;
  const int letters = 2 * rank;

  if (include_permutations) {
    std::vector<int> perm(static_cast<std::size_t>(rank));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      for (int mask = 0; mask < (1 << rank); ++mask) {
        bool identity = true;
        for (int i = 0; i < rank && identity; ++i) {
          if (perm[static_cast<std::size_t>(i)] != i + 1 || (mask >> i) & 1) identity = false;
        }
        if (identity) continue;
        WhiteheadMove mv;
        mv.kind = WhiteheadMove::Kind::Permutation;
        mv.rank = rank;
        mv.target = perm;
        mv.sign.resize(static_cast<std::size_t>(rank));
        for (int i = 0; i < rank; ++i) {
          mv.sign[static_cast<std::size_t>(i)] = ((mask >> i) & 1) ? -1 : 1;
        }
        moves.push_back(std::move(mv));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  for (int a = 0; a < letters; ++a) {
    std::vector<int> others;
    for (int l = 0; l < letters; ++l) {
      if (l != a && l != (a ^ 1)) others.push_back(l);
    }
    const int subsets = 1 << others.size();
    for (int mask = 1; mask < subsets; ++mask) {  // mask 0 is the identity
      WhiteheadMove mv;
      mv.kind = WhiteheadMove::Kind::Multiplier;
      mv.rank = rank;
      mv.mult_gen = a / 2 + 1;
      mv.mult_sign = (a & 1) ? -1 : 1;
      mv.in_set.assign(static_cast<std::size_t>(letters), 0);
      mv.in_set[static_cast<std::size_t>(a)] = 1;
      for (std::size_t b = 0; b < others.size(); ++b) {
        if ((mask >> b) & 1) mv.in_set[static_cast<std::size_t>(others[b])] = 1;
      }
      moves.push_back(std::move(mv));
    }
  }
  return moves;
}

MinimizeResult whitehead_minimize(const Word& w) {
  const std::vector<WhiteheadMove> moves = whitehead_moves(w.rank(), /*include_permutations=*/false);
  Word current = cyclic_core(w);
  std::vector<WhiteheadMove> applied;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const WhiteheadMove& mv : moves) {
      Word candidate = cyclic_core(mv.apply(current));
      if (candidate.length() < current.length()) {
        current = std::move(candidate);
        applied.push_back(mv);
        progress = true;
        break;
      }
    }
  }
  return {std::move(current), std::move(applied)};
}

AutomorphyResult are_automorphic(const Word& u, const Word& v, std::uint64_t budget) {
  if (u.rank() != v.rank()) {
    throw std::invalid_argument("are_automorphic: rank mismatch");
  }
  const int rank = u.rank();
  MinimizeResult mu = whitehead_minimize(u);
  MinimizeResult mv = whitehead_minimize(v);
  const std::uint64_t len = mu.minimal.length();
  if (len != mv.minimal.length()) {
    return {AutomorphyResult::Verdict::No, std::nullopt};
  }

  // Assemble the witness from a chain of moves found by level-set search,
  // then fix up by an inner automorphism so that the witness maps u to v
  // exactly rather than up to conjugacy.
  auto build_witness = [&](const std::vector<WhiteheadMove>& chain) -> FreeEndomorphism {
    std::vector<const WhiteheadMove*> order;
    for (const WhiteheadMove& m : mu.moves) order.push_back(&m);
    for (const WhiteheadMove& m : chain) order.push_back(&m);
    std::vector<WhiteheadMove> undo;
    undo.reserve(mv.moves.size());
    for (auto it = mv.moves.rbegin(); it != mv.moves.rend(); ++it) {
      undo.push_back(it->inverse());
    }
    for (const WhiteheadMove& m : undo) order.push_back(&m);
    FreeEndomorphism phi0 = fold_moves(rank, order);

    const Word z = apply_endomorphism(phi0, u);  // conjugate of v by construction
    const CyclicForm zf = cyclic_reduce(z);
    const CyclicForm vf = cyclic_reduce(v);
    const std::vector<int> zl = to_letters(zf.core);
    const std::vector<int> vl = to_letters(vf.core);
    const std::size_t n = zl.size();
    std::size_t rot = 0;
    bool found = n == 0;
    for (std::size_t r = 0; r < n && !found; ++r) {
      bool match = true;
      for (std::size_t k = 0; k < n && match; ++k) {
        if (zl[(r + k) % n] != vl[k]) match = false;
      }
      if (match) {
        rot = r;
        found = true;
      }
    }
    if (!found) {
      throw std::logic_error("are_automorphic: conjugacy fixup failed");
    }
    const Word prefix = from_letters(rank, std::vector<int>(zl.begin(), zl.begin() + static_cast<std::ptrdiff_t>(rot)));
    const Word t = concat(concat(zf.conjugator, prefix), invert(vf.conjugator));
    FreeEndomorphism witness = compose(inner_automorphism(invert(t)), phi0);
    if (apply_endomorphism(witness, u) != v) {
      throw std::logic_error("are_automorphic: witness verification failed");
    }
    return witness;
  };

  if (len == 0) {
    AutomorphyResult res{AutomorphyResult::Verdict::Yes, std::nullopt};
    res.witness = build_witness({});
    return res;
  }

  const std::vector<int> start = canonical_rotation(to_letters(mu.minimal));
  const std::vector<int> goal = canonical_rotation(to_letters(mv.minimal));
  if (start == goal) {
    AutomorphyResult res{AutomorphyResult::Verdict::Yes, std::nullopt};
    res.witness = build_witness({});
    return res;
  }

  const std::vector<WhiteheadMove> moves = whitehead_moves(rank, /*include_permutations=*/true);
  struct NodeInfo {
    std::vector<int> parent;
    std::size_t move_index = 0;
  };
  std::map<std::vector<int>, NodeInfo> visited;
  visited.emplace(start, NodeInfo{});
  std::deque<std::vector<int>> queue{start};
  std::uint64_t expanded = 0;

  auto reconstruct = [&](std::vector<int> key) {
    std::vector<WhiteheadMove> chain;
    while (key != start) {
      const NodeInfo& info = visited.at(key);
      chain.push_back(moves[info.move_index]);
      key = info.parent;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  };

  while (!queue.empty()) {
    if (expanded >= budget) {
      return {AutomorphyResult::Verdict::Unknown, std::nullopt};
    }
    const std::vector<int> node = std::move(queue.front());
    queue.pop_front();
    ++expanded;
    const Word node_word = from_letters(rank, node);
    for (std::size_t m = 0; m < moves.size(); ++m) {
      const Word img = cyclic_core(moves[m].apply(node_word));
      if (img.length() != len) {
        continue;
      }
      std::vector<int> key = canonical_rotation(to_letters(img));
      if (visited.contains(key)) {
        continue;
      }
      visited.emplace(key, NodeInfo{node, m});
      if (key == goal) {
        AutomorphyResult res{AutomorphyResult::Verdict::Yes, std::nullopt};
        res.witness = build_witness(reconstruct(key));
        return res;
      }
      queue.push_back(std::move(key));
    }
  }
  return {AutomorphyResult::Verdict::No, std::nullopt};
}

namespace {

// Reduced words of exact length `len`, in lexicographic letter order.
void reduced_words_of_length(int rank, int len, std::vector<int>& prefix,
                             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == len) {
    out.push_back(prefix);
    return;
  }
  for (int letter = 0; letter < 2 * rank; ++letter) {
    if (!prefix.empty() && prefix.back() == (letter ^ 1)) {
      continue;
    }
    prefix.push_back(letter);
    reduced_words_of_length(rank, len, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::optional<FreeEndomorphism> search_endomorphism(const Word& source, const Word& target,
                                                    int max_image_length) {
  if (source.rank() != target.rank()) {
    throw std::invalid_argument("search_endomorphism: rank mismatch");
  }
  if (max_image_length < 0) {
    throw std::invalid_argument("search_endomorphism: negative bound");
  }
  const int rank = source.rank();

  const ExponentVector ev_source = exponent_vector(source);
  const ExponentVector ev_target = exponent_vector(target);
  const bool source_zero = std::all_of(ev_source.begin(), ev_source.end(),
                                       [](std::int64_t t) { return t == 0; });
  const bool target_zero = std::all_of(ev_target.begin(), ev_target.end(),
                                       [](std::int64_t t) { return t == 0; });
  if (source_zero && !target_zero) {
    return std::nullopt;
  }

  std::vector<std::vector<Word>> by_length(static_cast<std::size_t>(max_image_length) + 1);
  for (int len = 0; len <= max_image_length; ++len) {
    std::vector<std::vector<int>> raw;
    std::vector<int> prefix;
    reduced_words_of_length(rank, len, prefix, raw);
    for (const auto& letters : raw) {
      by_length[static_cast<std::size_t>(len)].push_back(from_letters(rank, letters));
    }
  }

  std::vector<const Word*> images(static_cast<std::size_t>(rank));
  std::optional<FreeEndomorphism> found;

  auto try_tuple = [&]() -> bool {
    FreeEndomorphism phi{rank, {}};
    phi.images.reserve(static_cast<std::size_t>(rank));
    for (const Word* w : images) phi.images.push_back(*w);
    if (apply_endomorphism(phi, source) == target) {
      found = std::move(phi);
      return true;
    }
    return false;
  };

  // Components are assigned left to right, each running through words in
  // (length, lex) order, so the first hit is minimal in total length and
  // lexicographically least among tuples of that total.
  auto assign = [&](auto&& self, int component, int remaining) -> bool {
    if (component == rank) {
      return remaining == 0 && try_tuple();
    }
    const int max_here = std::min(max_image_length, remaining);
    for (int len = 0; len <= max_here; ++len) {
      if (remaining - len > (rank - component - 1) * max_image_length) {
        continue;
      }
      for (const Word& w : by_length[static_cast<std::size_t>(len)]) {
        images[static_cast<std::size_t>(component)] = &w;
        if (self(self, component + 1, remaining - len)) {
          return true;
        }
      }
    }
    return false;
  };

  for (int total = 0; total <= rank * max_image_length; ++total) {
    if (assign(assign, 0, total)) {
      return found;
    }
  }
  return std::nullopt;
}

}  // namespace wordmaps
