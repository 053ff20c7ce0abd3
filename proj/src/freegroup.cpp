#include "wordmaps/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace wordmaps {

namespace {

void push_reduced(std::vector<Syllable>& out, int gen, std::int64_t exp) {
  if (exp == 0) {
    return;
  }
  if (!out.empty() && out.back().gen == gen) {
    out.back().exp += exp;
    if (out.back().exp == 0) {
      out.pop_back();
    }
    return;
  }
  out.push_back({gen, exp});
}

void check_rank(int rank) {
  if (rank < 1) {
    throw std::invalid_argument("word rank must be positive");
  }
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::vector<Syllable> raw) : rank_(rank) {
  check_rank(rank);
  std::vector<Syllable> reduced;
  reduced.reserve(raw.size());
  for (const Syllable& s : raw) {
    if (s.gen < 1 || s.gen > rank) {
      throw std::invalid_argument("syllable generator out of rank");
    }
    push_reduced(reduced, s.gen, s.exp);
  }
  syllables_ = std::move(reduced);
}

std::uint64_t Word::length() const {
  std::uint64_t total = 0;
  for (const Syllable& s : syllables_) {
    total += static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
  }
  return total;
}

Word parse_word(std::string_view text, int rank) {
  check_rank(rank);
  std::vector<Syllable> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&](std::int64_t& value) {
    const char* first = text.data() + i;
    const char* last = text.data() + n;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) {
      throw parse_error(parse_error::Kind::Syntax, i,
                        "expected integer at position " + std::to_string(i));
    }
    i += static_cast<std::size_t>(ptr - first);
  };

  skip_ws();
  while (i < n) {
    const std::size_t term_pos = i;
    const char c = text[i];
    int gen = 0;
    int sign = 1;
    if (c == 'x' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      ++i;
      std::int64_t index = 0;
      parse_int(index);
      if (index < 1) {
        throw parse_error(parse_error::Kind::GeneratorOutOfRank, term_pos,
                          "generator index must be at least 1");
      }
      if (index > rank) {
        throw parse_error(parse_error::Kind::GeneratorOutOfRank, term_pos,
                          "generator x" + std::to_string(index) + " exceeds rank " +
                              std::to_string(rank));
      }
      gen = static_cast<int>(index);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
      gen = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
      if (gen > rank) {
        throw parse_error(parse_error::Kind::GeneratorOutOfRank, term_pos,
                          std::string("generator '") + c + "' exceeds rank " +
                              std::to_string(rank));
      }
      ++i;
    } else {
      throw parse_error(parse_error::Kind::Syntax, i,
                        "unexpected character at position " + std::to_string(i));
    }
    std::int64_t exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      parse_int(exp);
    }
    push_reduced(out, gen, exp * sign);
    skip_ws();
  }
  return Word(rank, std::move(out));
}

std::string to_string(const Word& w) {
  constexpr std::uint64_t kCompactLimit = 10000;
  std::string out;
  if (w.rank() <= 26 && w.length() <= kCompactLimit) {
    for (const Syllable& s : w.syllables()) {
      const char letter = static_cast<char>((s.exp < 0 ? 'A' : 'a') + s.gen - 1);
      const std::int64_t reps = s.exp < 0 ? -s.exp : s.exp;
      out.append(static_cast<std::size_t>(reps), letter);
    }
    return out;
  }
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(s.gen);
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

Word invert(const Word& w) {
  std::vector<Syllable> out;
  out.reserve(w.syllables().size());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it) {
    out.push_back({it->gen, -it->exp});
  }
  return Word(w.rank(), std::move(out));
}

Word concat(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw std::invalid_argument("concat: rank mismatch");
  }
  std::vector<Syllable> out = u.syllables();
  for (const Syllable& s : v.syllables()) {
    push_reduced(out, s.gen, s.exp);
  }
  return Word(u.rank(), std::move(out));
}

CyclicForm cyclic_reduce(const Word& w) {
  std::vector<Syllable> s = w.syllables();
  std::vector<Syllable> conj;
  std::size_t i = 0;
  std::size_t j = s.size();
  while (j - i >= 2) {
    Syllable& front = s[i];
    Syllable& back = s[j - 1];
    if (front.gen != back.gen || (front.exp > 0) == (back.exp > 0)) {
      break;
    }
    const std::int64_t fa = front.exp < 0 ? -front.exp : front.exp;
    const std::int64_t ba = back.exp < 0 ? -back.exp : back.exp;
    const std::int64_t k = std::min(fa, ba);
    const std::int64_t step = front.exp > 0 ? k : -k;
    push_reduced(conj, front.gen, step);
    front.exp -= step;
    back.exp += step;
    if (front.exp == 0) ++i;
    if (back.exp == 0) --j;
  }
  Word core(w.rank(), std::vector<Syllable>(s.begin() + static_cast<std::ptrdiff_t>(i),
                                            s.begin() + static_cast<std::ptrdiff_t>(j)));
  Word conjugator(w.rank(), std::move(conj));
  return {std::move(core), std::move(conjugator)};
}

ExponentVector exponent_vector(const Word& w) {
  ExponentVector ev(static_cast<std::size_t>(w.rank()), 0);
  for (const Syllable& s : w.syllables()) {
    ev[static_cast<std::size_t>(s.gen - 1)] += s.exp;
  }
  return ev;
}

std::vector<int> to_letters(const Word& w) {
  constexpr std::uint64_t kLetterLimit = 10'000'000;
  if (w.length() > kLetterLimit) {
    throw std::length_error("word too long for letter expansion");
  }
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(w.length()));
  for (const Syllable& s : w.syllables()) {
    const int letter = 2 * (s.gen - 1) + (s.exp < 0 ? 1 : 0);
    const std::int64_t reps = s.exp < 0 ? -s.exp : s.exp;
    for (std::int64_t k = 0; k < reps; ++k) {
      letters.push_back(letter);
    }
  }
  return letters;
}

Word from_letters(int rank, const std::vector<int>& letters) {
  std::vector<Syllable> out;
  for (int letter : letters) {
    push_reduced(out, letter / 2 + 1, (letter & 1) ? -1 : 1);
  }
  return Word(rank, std::move(out));
}

Root maximal_root(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("maximal_root: empty word");
  }
  CyclicForm cf = cyclic_reduce(w);
  if (cf.core.syllables().size() == 1) {
    const Syllable s = cf.core.syllables().front();
    const std::int64_t sign = s.exp < 0 ? -1 : 1;
    Word root_core(w.rank(), {{s.gen, sign}});
    Word root = concat(concat(cf.conjugator, root_core), invert(cf.conjugator));
    return {std::move(root), sign * s.exp};
  }
  const std::vector<int> letters = to_letters(cf.core);
  const std::size_t len = letters.size();

  // Failure function; the smallest period dividing len gives the root.
  std::vector<std::size_t> fail(len, 0);
  for (std::size_t i = 1; i < len; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && letters[i] != letters[k]) {
      k = fail[k - 1];
    }
    if (letters[i] == letters[k]) {
      ++k;
    }
    fail[i] = k;
  }
  std::size_t period = len - fail[len - 1];
  if (len % period != 0) {
    period = len;
  }
  const std::int64_t multiplicity = static_cast<std::int64_t>(len / period);
  Word root_core = from_letters(w.rank(), std::vector<int>(letters.begin(),
                                                           letters.begin() + static_cast<std::ptrdiff_t>(period)));
  Word root = concat(concat(cf.conjugator, root_core), invert(cf.conjugator));
  return {std::move(root), multiplicity};
}

FreeEndomorphism identity_endomorphism(int rank) {
  check_rank(rank);
  FreeEndomorphism phi{rank, {}};
  phi.images.reserve(static_cast<std::size_t>(rank));
  for (int g = 1; g <= rank; ++g) {
    phi.images.emplace_back(rank, std::vector<Syllable>{{g, 1}});
  }
  return phi;
}

FreeEndomorphism compose(const FreeEndomorphism& outer, const FreeEndomorphism& inner) {
  if (outer.rank != inner.rank) {
    throw std::invalid_argument("compose: rank mismatch");
  }
  FreeEndomorphism result{outer.rank, {}};
  result.images.reserve(inner.images.size());
  for (const Word& img : inner.images) {
    result.images.push_back(apply_endomorphism(outer, img));
  }
  return result;
}

Word apply_endomorphism(const FreeEndomorphism& phi, const Word& w) {
  if (phi.rank != w.rank()) {
    throw std::invalid_argument("apply_endomorphism: rank mismatch");
  }
  if (static_cast<int>(phi.images.size()) != phi.rank) {
    throw std::invalid_argument("apply_endomorphism: malformed endomorphism");
  }
  std::vector<Syllable> out;
  for (const Syllable& s : w.syllables()) {
    const Word& img = phi.images[static_cast<std::size_t>(s.gen - 1)];
    const Word use = s.exp < 0 ? invert(img) : img;
    const std::int64_t reps = s.exp < 0 ? -s.exp : s.exp;
    for (std::int64_t k = 0; k < reps; ++k) {
      for (const Syllable& t : use.syllables()) {
        push_reduced(out, t.gen, t.exp);
      }
    }
  }
  return Word(w.rank(), std::move(out));
}

}  // namespace wordmaps
