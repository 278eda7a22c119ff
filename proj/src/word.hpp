#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mat2.hpp"

namespace matgrowth {

enum class Letter : std::uint8_t { A = 0, B = 1 };

inline char letter_char(Letter l) { return l == Letter::A ? 'A' : 'B'; }

// Word over the two-letter alphabet {A, B}. The empty word is allowed and
// evaluates to the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Accepts plain text like "AABA" and exponent shorthand like "AB^10A^2".
  // Exponents must be positive; total length is capped to keep shorthand
  // like A^999999999 from exhausting memory.
  static Word parse(std::string_view text);
  static constexpr std::size_t max_parse_length = 1u << 24;

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  Word concat(const Word& o) const;
  Word power(std::size_t k) const;
  bool is_suffix_of(const Word& longer) const;

  std::string str() const;             // plain letters
  std::string str_compressed() const;  // run-length, e.g. "A^2BA"

  bool operator==(const Word&) const = default;
  // Lexicographic with A < B; shortlex_less below orders by length first.
  auto operator<=>(const Word& o) const {
    return letters_ <=> o.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

inline bool shortlex_less(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

Mat2 eval_word(const Word& w, const Mat2& a, const Mat2& b);

}  // namespace matgrowth
