#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace modknot {

// Template generators. x is the left-ear loop (R in the Farey coding) and
// y the right-ear loop (L).
enum class Letter : char { X = 'x', Y = 'y' };

using Exponent = std::uint64_t;

// Largest exponent or total word length accepted from text.
inline constexpr Exponent kMaxExponent = Exponent{1} << 62;

// One block x^a y^b of a word in syllable normal form.
struct Syllable {
  Exponent a = 1;
  Exponent b = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct PurePower {
  Letter letter = Letter::X;
  Exponent exponent = 1;

  friend bool operator==(const PurePower&, const PurePower&) = default;
};

// A cyclic positive word in x and y, i.e. the symbolic itinerary of a periodic
// orbit on the modular template.
//
// Words containing both letters are stored as syllables x^{a1} y^{b1} ...
// x^{as} y^{bs}, always starting at an x-block. Single-letter words are stored
// as a pure power. The stored rotation is significant for spelling but not
// for equality of the underlying cyclic class; use canonicalize() for that.
class CyclicWord {
 public:
  // Throws EmptyWord for an empty list, InvalidParams for a zero exponent.
  static CyclicWord from_syllables(std::vector<Syllable> syllables);
  static CyclicWord power(Letter letter, Exponent exponent);
  // Builds a word from a plain spelling such as "xxyxyy"; the spelling is
  // read cyclically, so a leading y-block moves to the end.
  static CyclicWord from_spelling(std::string_view letters);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  const std::optional<PurePower>& pure_power() const { return pure_; }
  bool has_both_letters() const { return !pure_.has_value(); }

  // m: total number of x letters.
  Exponent x_count() const { return x_count_; }
  // l: total number of y letters.
  Exponent y_count() const { return y_count_; }
  Exponent length() const { return x_count_ + y_count_; }
  // Number of syllables; a pure power has trip number 0.
  std::size_t trip() const { return syllables_.size(); }

  // Linear spelling with every letter written out, e.g. "xxyxyy".
  std::string spell() const;
  // Compact exponent notation accepted by parse_word, e.g. "x^2 y x y^2".
  std::string str() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  CyclicWord() = default;

  std::vector<Syllable> syllables_;
  std::optional<PurePower> pure_;
  Exponent x_count_ = 0;
  Exponent y_count_ = 0;
};

// Parses `word := token+ ; token := ('x'|'y') ('^' [1-9][0-9]*)?`, with spaces
// and tabs allowed between tokens.
CyclicWord parse_word(std::string_view text);

// Lexicographically least rotation of the spelling, with x < y.
CyclicWord canonicalize(const CyclicWord& word);

// False iff the word is a k-fold repetition (k >= 2) of a shorter word.
bool is_primitive(const CyclicWord& word);

// Every canonical primitive word of length <= max_length, sorted by
// (length, spelling). Pure powers x and y are included unless
// require_both_letters is set.
std::vector<CyclicWord> enumerate_primitive(std::size_t max_length,
                                            bool require_both_letters);

}  // namespace modknot
