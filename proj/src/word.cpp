#include "word.hpp"

#include <cctype>

#include "error.hpp"

namespace matgrowth {

Word Word::parse(std::string_view text) {
  std::vector<Letter> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    Letter l;
    if (c == 'A') {
      l = Letter::A;
    } else if (c == 'B') {
      l = Letter::B;
    } else {
      throw Error::parse(std::string("unexpected character '") + c +
                         "' at position " + std::to_string(pos));
    }
    ++pos;
    std::uint64_t rep = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
        throw Error::parse("exponent must be a positive integer at position " +
                           std::to_string(pos));
      std::size_t start = pos;
      rep = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        rep = rep * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (rep > max_parse_length)
          throw Error::cap("word length exceeds parser cap");
        ++pos;
      }
      if (pos == start)
        throw Error::parse("expected exponent digits at position " + std::to_string(pos));
      if (rep == 0)
        throw Error::parse("zero exponent at position " + std::to_string(start));
    }
    if (out.size() + rep > max_parse_length)
      throw Error::cap("word length exceeds parser cap");
    out.insert(out.end(), rep, l);
  }
  return Word(std::move(out));
}

Word Word::concat(const Word& o) const {
  std::vector<Letter> l = letters_;
  l.insert(l.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(l));
}

Word Word::power(std::size_t k) const {
  std::vector<Letter> l;
  l.reserve(letters_.size() * k);
  for (std::size_t i = 0; i < k; ++i)
    l.insert(l.end(), letters_.begin(), letters_.end());
  return Word(std::move(l));
}

bool Word::is_suffix_of(const Word& longer) const {
  if (size() > longer.size()) return false;
  std::size_t offset = longer.size() - size();
  for (std::size_t i = 0; i < size(); ++i)
    if (letters_[i] != longer[offset + i]) return false;
  return true;
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(letter_char(l));
  return s;
}

std::string Word::str_compressed() const {
  std::string s;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    s.push_back(letter_char(letters_[i]));
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

Mat2 eval_word(const Word& w, const Mat2& a, const Mat2& b) {
  Mat2 m = Mat2::identity();
  for (Letter l : w) m = m * (l == Letter::A ? a : b);
  return m;
}

}  // namespace matgrowth
