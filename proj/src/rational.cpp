#include "rational.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>

#include "error.hpp"

namespace matgrowth {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error::domain("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
  if (sgn(v_.get_den()) == 0) throw Error::domain("rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error::domain("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  return Rational(mpq_class(::abs(v_)));
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start)
      throw Error::parse(std::string("expected ") + what + " in rational '" +
                         std::string(text) + "'");
    return std::string(text.substr(start, pos - start));
  };

  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string num = digits("numerator digits");
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits("denominator digits");
  }
  if (pos != text.size())
    throw Error::parse("trailing characters in rational '" + std::string(text) + "'");

  mpz_class n(num), d(den);
  if (sgn(d) == 0) throw Error::domain("rational with zero denominator");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

double Rational::log_abs() const {
  if (is_zero()) throw Error::domain("log of zero");
  signed long ne = 0, de = 0;
  double nm = mpz_get_d_2exp(&ne, num().get_mpz_t());
  double dm = mpz_get_d_2exp(&de, den().get_mpz_t());
  return std::log(std::fabs(nm)) - std::log(dm) +
         std::numbers::ln2 * static_cast<double>(ne - de);
}

}  // namespace matgrowth
