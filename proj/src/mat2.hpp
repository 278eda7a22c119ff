#pragma once

#include <string>
#include <string_view>

#include "rational.hpp"

namespace matgrowth {

// Row-major 2x2 matrix [[a, b], [c, d]] over the exact rationals.
struct Mat2 {
  Rational a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }

  // Text form "a,b;c,d" where each entry is an integer or p/q.
  // Whitespace around entries and separators is ignored.
  static Mat2 parse(std::string_view text);
  std::string str() const;

  Rational trace() const { return a + d; }
  Rational det() const { return a * d - b * c; }
  Rational max_abs_entry() const;
  Rational l1_norm() const;  // sum of |entries|

  bool is_integer() const;
  bool is_nonnegative() const;

  Mat2 pow(unsigned long n) const;  // exact, by repeated squaring
  Mat2 scaled(const Rational& s) const { return {a * s, b * s, c * s, d * s}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  bool operator==(const Mat2&) const = default;
};

inline Mat2 mean_matrix(const Mat2& x, const Mat2& y) {
  return (x + y).scaled(Rational(1, 2));
}

// Largest eigenvalue modulus. The discriminant test is exact, so the
// real/complex branch is never decided by floating-point noise.
double spectral_radius(const Mat2& m);

// log of l1_norm without forming a double of the (possibly huge) norm.
double log_l1_norm(const Mat2& m);

}  // namespace matgrowth
