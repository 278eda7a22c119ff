#include "mat2.hpp"

#include <cctype>
#include <cmath>
#include <cstddef>

#include "error.hpp"

namespace matgrowth {

namespace {

void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

Rational parse_entry(std::string_view s, std::size_t& pos) {
  skip_ws(s, pos);
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
    ++pos;
  if (pos == start)
    throw Error::parse("expected matrix entry at position " + std::to_string(start));
  return Rational::parse(s.substr(start, pos - start));
}

void expect(std::string_view s, std::size_t& pos, char c) {
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != c)
    throw Error::parse(std::string("expected '") + c + "' at position " +
                       std::to_string(pos));
  ++pos;
}

}  // namespace

Mat2 Mat2::parse(std::string_view text) {
  std::size_t pos = 0;
  Mat2 m;
  m.a = parse_entry(text, pos);
  expect(text, pos, ',');
  m.b = parse_entry(text, pos);
  expect(text, pos, ';');
  m.c = parse_entry(text, pos);
  expect(text, pos, ',');
  m.d = parse_entry(text, pos);
  skip_ws(text, pos);
  if (pos != text.size())
    throw Error::parse("trailing characters at position " + std::to_string(pos));
  return m;
}

std::string Mat2::str() const {
  return a.str() + "," + b.str() + ";" + c.str() + "," + d.str();
}

Rational Mat2::max_abs_entry() const {
  Rational best = a.abs();
  for (const Rational* e : {&b, &c, &d}) {
    Rational v = e->abs();
    if (v > best) best = v;
  }
  return best;
}

Rational Mat2::l1_norm() const {
  return a.abs() + b.abs() + c.abs() + d.abs();
}

bool Mat2::is_integer() const {
  return a.is_integer() && b.is_integer() && c.is_integer() && d.is_integer();
}

bool Mat2::is_nonnegative() const {
  return a.sign() >= 0 && b.sign() >= 0 && c.sign() >= 0 && d.sign() >= 0;
}

Mat2 Mat2::pow(unsigned long n) const {
  Mat2 result = identity();
  Mat2 base = *this;
  while (n > 0) {
    if (n & 1ul) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

double spectral_radius(const Mat2& m) {
  Rational t = m.trace();
  Rational disc = t * t - Rational(4) * m.det();
  double r;
  if (disc.sign() >= 0) {
    r = 0.5 * (std::fabs(t.to_double()) + std::sqrt(disc.to_double()));
  } else {
    // Complex pair: |eigenvalue| = sqrt(det), and det > 0 whenever disc < 0.
    r = std::sqrt(m.det().to_double());
  }
  if (!std::isfinite(r)) throw Error::nonfinite("spectral radius overflows double");
  return r;
}

double log_l1_norm(const Mat2& m) {
  Rational n = m.l1_norm();
  if (n.is_zero()) throw Error::domain("log norm of the zero matrix");
  return n.log_abs();
}

}  // namespace matgrowth
