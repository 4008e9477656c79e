#include "modknot/word.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

#include "modknot/errors.hpp"

namespace modknot {
namespace {

struct Run {
  Letter letter;
  Exponent count;
};

Exponent checked_add(Exponent lhs, Exponent rhs) {
  if (lhs > kMaxExponent - rhs) {
    throw SyntaxError("word length exceeds 2^62");
  }
  return lhs + rhs;
}

// Merges runs cyclically and turns them into a word that starts at an
// x-block.
CyclicWord from_runs(std::vector<Run> runs) {
  std::vector<Run> merged;
  for (const Run& run : runs) {
    if (!merged.empty() && merged.back().letter == run.letter) {
      merged.back().count = checked_add(merged.back().count, run.count);
    } else {
      merged.push_back(run);
    }
  }
  if (merged.empty()) {
    throw EmptyWord();
  }
  if (merged.size() > 1 && merged.front().letter == merged.back().letter) {
    merged.front().count = checked_add(merged.front().count, merged.back().count);
    merged.pop_back();
  }
  if (merged.size() == 1) {
    return CyclicWord::power(merged.front().letter, merged.front().count);
  }
  if (merged.front().letter == Letter::Y) {
    std::rotate(merged.begin(), merged.begin() + 1, merged.end());
  }
  std::vector<Syllable> syllables;
  syllables.reserve(merged.size() / 2);
  for (std::size_t i = 0; i < merged.size(); i += 2) {
    syllables.push_back({merged[i].count, merged[i + 1].count});
  }
  return CyclicWord::from_syllables(std::move(syllables));
}

// Orders syllables so that comparing syllable sequences of equal total
// length agrees with comparing their spellings: a longer x-block spells
// smaller, and after equal x-blocks a shorter y-block spells smaller.
bool syllable_less(const Syllable& lhs, const Syllable& rhs) {
  if (lhs.a != rhs.a) {
    return lhs.a > rhs.a;
  }
  return lhs.b < rhs.b;
}

std::size_t smallest_period(const std::vector<Syllable>& s) {
  const std::size_t n = s.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) {
      continue;
    }
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) {
      periodic = s[i] == s[i - p];
    }
    if (periodic) {
      return p;
    }
  }
  return n;
}

}  // namespace

CyclicWord CyclicWord::from_syllables(std::vector<Syllable> syllables) {
  if (syllables.empty()) {
    throw EmptyWord();
  }
  CyclicWord word;
  for (const Syllable& s : syllables) {
    if (s.a == 0 || s.b == 0) {
      throw InvalidParams("syllable exponents must be positive");
    }
    word.x_count_ = checked_add(word.x_count_, s.a);
    word.y_count_ = checked_add(word.y_count_, s.b);
  }
  checked_add(word.x_count_, word.y_count_);
  word.syllables_ = std::move(syllables);
  return word;
}

CyclicWord CyclicWord::power(Letter letter, Exponent exponent) {
  if (exponent == 0) {
    throw EmptyWord();
  }
  if (exponent > kMaxExponent) {
    throw SyntaxError("exponent exceeds 2^62");
  }
  CyclicWord word;
  word.pure_ = PurePower{letter, exponent};
  (letter == Letter::X ? word.x_count_ : word.y_count_) = exponent;
  return word;
}

CyclicWord CyclicWord::from_spelling(std::string_view letters) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const char c = letters[i];
    if (c != 'x' && c != 'y') {
      throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    runs.push_back({static_cast<Letter>(c), 1});
  }
  return from_runs(std::move(runs));
}

std::string CyclicWord::spell() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(length()));
  if (pure_) {
    out.append(static_cast<std::size_t>(pure_->exponent),
               static_cast<char>(pure_->letter));
    return out;
  }
  for (const Syllable& s : syllables_) {
    out.append(static_cast<std::size_t>(s.a), 'x');
    out.append(static_cast<std::size_t>(s.b), 'y');
  }
  return out;
}

std::string CyclicWord::str() const {
  std::string out;
  auto emit = [&out](char letter, Exponent e) {
    if (!out.empty()) {
      out += ' ';
    }
    out += letter;
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  };
  if (pure_) {
    emit(static_cast<char>(pure_->letter), pure_->exponent);
    return out;
  }
  for (const Syllable& s : syllables_) {
    emit('x', s.a);
    emit('y', s.b);
  }
  return out;
}

CyclicWord parse_word(std::string_view text) {
  std::vector<Run> runs;
  std::size_t i = 0;
  auto is_blank = [](char c) { return c == ' ' || c == '\t'; };
  while (i < text.size()) {
    const char c = text[i];
    if (is_blank(c)) {
      ++i;
      continue;
    }
    if (c != 'x' && c != 'y') {
      throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    Run run{static_cast<Letter>(c), 1};
    ++i;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (i >= text.size() || text[i] < '1' || text[i] > '9') {
        throw SyntaxError("exponent must be a positive integer", i);
      }
      Exponent value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<Exponent>(text[i] - '0');
        if (value > kMaxExponent) {
          throw SyntaxError("exponent exceeds 2^62", i);
        }
        ++i;
      }
      run.count = value;
    }
    runs.push_back(run);
  }
  if (runs.empty()) {
    throw EmptyWord();
  }
  return from_runs(std::move(runs));
}

CyclicWord canonicalize(const CyclicWord& word) {
  if (word.pure_power()) {
    return word;
  }
  const auto& s = word.syllables();
  const std::size_t n = s.size();
  auto rotation_less = [&](std::size_t lhs, std::size_t rhs) {
    for (std::size_t k = 0; k < n; ++k) {
      const Syllable& l = s[(lhs + k) % n];
      const Syllable& r = s[(rhs + k) % n];
      if (syllable_less(l, r)) return true;
      if (syllable_less(r, l)) return false;
    }
    return false;
  };
  std::size_t best = 0;
  for (std::size_t start = 1; start < n; ++start) {
    if (rotation_less(start, best)) {
      best = start;
    }
  }
  std::vector<Syllable> rotated(s.begin() + static_cast<std::ptrdiff_t>(best), s.end());
  rotated.insert(rotated.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(best));
  return CyclicWord::from_syllables(std::move(rotated));
}

bool is_primitive(const CyclicWord& word) {
  if (const auto& pure = word.pure_power()) {
    return pure->exponent == 1;
  }
  return smallest_period(word.syllables()) == word.syllables().size();
}

std::vector<CyclicWord> enumerate_primitive(std::size_t max_length,
                                            bool require_both_letters) {
  if (max_length == 0) {
    throw InvalidParams("max_length must be at least 1");
  }
  // Duval's generation of Lyndon words: the canonical primitive necklaces
  // are exactly the Lyndon words.
  std::vector<std::string> spellings;
  std::string w = "x";
  while (!w.empty()) {
    if (!require_both_letters || (w.find('x') != std::string::npos &&
                                  w.find('y') != std::string::npos)) {
      spellings.push_back(w);
    }
    const std::size_t m = w.size();
    while (w.size() < max_length) {
      w.push_back(w[w.size() - m]);
    }
    while (!w.empty() && w.back() == 'y') {
      w.pop_back();
    }
    if (!w.empty()) {
      w.back() = 'y';
    }
  }
  std::sort(spellings.begin(), spellings.end(),
            [](const std::string& lhs, const std::string& rhs) {
              if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
              return lhs < rhs;
            });
  std::vector<CyclicWord> words;
  words.reserve(spellings.size());
  for (const std::string& spelling : spellings) {
    words.push_back(CyclicWord::from_spelling(spelling));
  }
  return words;
}

}  // namespace modknot
