#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordmaps {

/// One maximal run x_g^e of a word. Generators are 1-based, exponents nonzero.
struct Syllable {
  int gen = 0;
  std::int64_t exp = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Signed exponent sums of a word, one entry per generator.
using ExponentVector = std::vector<std::int64_t>;

class parse_error : public std::runtime_error {
 public:
  enum class Kind { Syntax, GeneratorOutOfRank };

  parse_error(Kind kind, std::size_t position, const std::string& what)
      : std::runtime_error(what), kind_(kind), position_(position) {}

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Freely reduced word in the free group of a fixed rank. The empty syllable
/// sequence is the identity. Construction reduces its input, so adjacent
/// syllables always carry distinct generators and nonzero exponents.
class Word {
 public:
  Word() = default;  // identity in the rank-1 free group
  explicit Word(int rank);
  Word(int rank, std::vector<Syllable> raw);

  int rank() const { return rank_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }

  /// Number of letters, i.e. the sum of |exp| over all syllables.
  std::uint64_t length() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int rank_ = 1;
  std::vector<Syllable> syllables_;
};

/// Parses either compact letters ("aabAB", uppercase = inverse) or indexed
/// syntax ("x1^2 x2 x1^-1 x2^-1"); the two may be mixed term by term.
Word parse_word(std::string_view text, int rank);

/// Compact letters when rank <= 26 and the word is short, indexed otherwise.
std::string to_string(const Word& w);

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);

struct CyclicForm {
  Word core;        // cyclically reduced
  Word conjugator;  // w == conjugator * core * conjugator^-1
};
CyclicForm cyclic_reduce(const Word& w);

ExponentVector exponent_vector(const Word& w);

struct Root {
  Word root;
  std::int64_t multiplicity = 1;  // root^multiplicity == w, multiplicity maximal
};
/// Maximal-root extraction via the smallest period of the cyclic core that
/// divides its length. The reported multiplicity is always positive.
Root maximal_root(const Word& w);

/// Endomorphism of a free group given by the images of its generators.
struct FreeEndomorphism {
  int rank = 0;
  std::vector<Word> images;  // images[i] is the image of generator i+1

  friend bool operator==(const FreeEndomorphism&, const FreeEndomorphism&) = default;
};

FreeEndomorphism identity_endomorphism(int rank);

/// Composition outer . inner: x -> outer(inner(x)).
FreeEndomorphism compose(const FreeEndomorphism& outer, const FreeEndomorphism& inner);

Word apply_endomorphism(const FreeEndomorphism& phi, const Word& w);

/// Letter encoding shared by the Whitehead layer and root extraction:
/// letter = 2*(gen-1) + (exp < 0), so inverse(letter) == letter ^ 1.
std::vector<int> to_letters(const Word& w);
Word from_letters(int rank, const std::vector<int>& letters);

}  // namespace wordmaps
