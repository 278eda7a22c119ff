#include <doctest.h>

#include <cmath>
#include <random>

#include "error.hpp"
#include "mat2.hpp"
#include "rational.hpp"
#include "word.hpp"

using namespace matgrowth;

namespace {

Mat2 random_int_mat(std::mt19937_64& rng, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  return {d(rng), d(rng), d(rng), d(rng)};
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  return {num(rng), den(rng)};
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK(Rational::parse("-4/8").str() == "-1/2");
  CHECK(Rational::parse("+7").str() == "7");
  CHECK(Rational::parse("0/9").str() == "0");
  CHECK(Rational::parse("5").is_integer());
  CHECK_FALSE(Rational::parse("5/2").is_integer());

  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational::parse("1/"), Error);
  CHECK_THROWS_AS(Rational::parse("1//2"), Error);
  CHECK_THROWS_AS(Rational::parse("2/-4"), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);

  try {
    Rational::parse("1/0");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::domain);
  }
  try {
    Rational::parse("x");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
  }
}

TEST_CASE("rational arithmetic is exact") {
  Rational third(1, 3), sixth(1, 6);
  CHECK((third + sixth).str() == "1/2");
  CHECK((third - sixth).str() == "1/6");
  CHECK((third * sixth).str() == "1/18");
  CHECK((third / sixth).str() == "2");
  CHECK((-third).str() == "-1/3");
  CHECK(third.abs() == third);
  CHECK((-third).abs() == third);
  CHECK_THROWS_AS(third / Rational(0), Error);

  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(7, 7) == Rational(1));
  CHECK(Rational(2, 4).sign() == 1);
  CHECK(Rational(-2, 4).sign() == -1);
  CHECK(Rational().is_zero());
}

TEST_CASE("rational canonical invariant holds under arithmetic") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng);
    for (const Rational& r : {a + b, a - b, a * b}) {
      CHECK(r.den() > 0);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
      CHECK(g == 1);
      CHECK(Rational::parse(r.str()) == r);
    }
  }
}

TEST_CASE("rational log_abs handles huge values") {
  Rational big = Rational(10);
  for (int i = 0; i < 3; ++i) big *= big;  // 10^8
  CHECK(big.log_abs() == doctest::Approx(8 * std::log(10.0)).epsilon(1e-12));
  Rational tiny = Rational(1) / big;
  CHECK(tiny.log_abs() == doctest::Approx(-8 * std::log(10.0)).epsilon(1e-12));
  CHECK((-big).log_abs() == doctest::Approx(8 * std::log(10.0)).epsilon(1e-12));
  CHECK_THROWS_AS(Rational(0).log_abs(), Error);
}

TEST_CASE("matrix text round trips") {
  Mat2 m = Mat2::parse("1,2;0,1");
  CHECK(m.a == Rational(1));
  CHECK(m.b == Rational(2));
  CHECK(m.c == Rational(0));
  CHECK(m.d == Rational(1));
  CHECK(m.str() == "1,2;0,1");

  CHECK(Mat2::parse(" 1 , 1/2 ; 1/2 , 1 ").str() == "1,1/2;1/2,1");
  CHECK(Mat2::parse("-3,2;-2,1").str() == "-3,2;-2,1");

  CHECK_THROWS_AS(Mat2::parse("1,2;0"), Error);
  CHECK_THROWS_AS(Mat2::parse("1,2;0,x"), Error);
  CHECK_THROWS_AS(Mat2::parse("1,2,3;4,5"), Error);
  CHECK_THROWS_AS(Mat2::parse("1,2;0,1 extra"), Error);
  CHECK_THROWS_AS(Mat2::parse("1,1/0;0,1"), Error);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Mat2 r{random_rational(rng), random_rational(rng), random_rational(rng),
           random_rational(rng)};
    CHECK(Mat2::parse(r.str()) == r);
  }
}

TEST_CASE("matrix products match worked examples") {
  Mat2 a1 = Mat2::parse("1,1;0,1"), b1 = Mat2::parse("1,0;1,1");
  CHECK(a1 * b1 == Mat2::parse("2,1;1,1"));

  Mat2 a2 = Mat2::parse("1,2;0,1"), b2 = Mat2::parse("1,0;2,1");
  CHECK(a2 * b2 == Mat2::parse("5,2;2,1"));

  Mat2 bm2 = Mat2::parse("1,0;-2,1");
  CHECK(a2 * bm2 == Mat2::parse("-3,2;-2,1"));
  CHECK((a2 * a2) * (bm2 * bm2) == Mat2::parse("-15,4;-4,1"));

  CHECK(Mat2::identity() * a2 == a2);
  CHECK(a2 * Mat2::identity() == a2);
}

TEST_CASE("matrix multiplication is associative (exact)") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    Mat2 x = random_int_mat(rng), y = random_int_mat(rng), z = random_int_mat(rng);
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("norms and entry scans") {
  Mat2 m = Mat2::parse("-3,2;-2,1");
  CHECK(m.max_abs_entry() == Rational(3));
  CHECK(m.l1_norm() == Rational(8));
  CHECK(m.trace() == Rational(-2));
  CHECK(m.det() == Rational(1));
  CHECK(m.is_integer());
  CHECK_FALSE(m.is_nonnegative());
  CHECK(Mat2::parse("0,1;2,3").is_nonnegative());
  CHECK_FALSE(Mat2::parse("1,1/2;0,1").is_integer());
}

TEST_CASE("exact powers") {
  Mat2 a = Mat2::parse("1,1;0,1");
  CHECK(a.pow(0) == Mat2::identity());
  CHECK(a.pow(1) == a);
  CHECK(a.pow(10) == Mat2::parse("1,10;0,1"));
  Mat2 m = Mat2::parse("2,1;1,1");
  CHECK(m.pow(7) == m * m * m * m * m * m * m);
}

TEST_CASE("spectral radius closed forms") {
  // real branch
  CHECK(spectral_radius(Mat2::parse("5,2;2,1")) ==
        doctest::Approx(3 + std::sqrt(8.0)).epsilon(1e-14));
  // complex branch: mean of a2bm2 is a scaled rotation
  CHECK(spectral_radius(Mat2::parse("1,1;-1,1")) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  // A^3 B for the binary pair
  CHECK(spectral_radius(Mat2::parse("3,1;1,0")) ==
        doctest::Approx((3 + std::sqrt(13.0)) / 2).epsilon(1e-14));
  CHECK(spectral_radius(Mat2::identity()) == doctest::Approx(1.0));
  CHECK(spectral_radius(Mat2{0, 0, 0, 0}) == doctest::Approx(0.0));
  // nilpotent: disc = 0, trace = 0
  CHECK(spectral_radius(Mat2::parse("0,1;0,0")) == doctest::Approx(0.0));
}

TEST_CASE("spectral radius properties") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    Mat2 m = random_int_mat(rng), n = random_int_mat(rng);
    double rm = spectral_radius(m);
    // rho(M^k) = rho(M)^k
    CHECK(spectral_radius(m.pow(3)) ==
          doctest::Approx(rm * rm * rm).epsilon(1e-9).scale(1.0));
    // cyclic invariance
    CHECK(spectral_radius(m * n) ==
          doctest::Approx(spectral_radius(n * m)).epsilon(1e-9).scale(1.0));
    // dominated by the l1 norm
    CHECK(rm <= m.l1_norm().to_double() + 1e-9);
    // scaling
    CHECK(spectral_radius(m.scaled(Rational(-3))) ==
          doctest::Approx(3 * rm).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("mean matrix") {
  Mat2 a = Mat2::parse("1,1;0,1"), b = Mat2::parse("1,0;1,1");
  Mat2 mean = mean_matrix(a, b);
  CHECK(mean == Mat2::parse("1,1/2;1/2,1"));
  CHECK(mean * mean == Mat2::parse("5/4,1;1,5/4"));
}

TEST_CASE("log_l1_norm matches direct logs and survives huge products") {
  Mat2 m = Mat2::parse("2,1;1,1");
  CHECK(log_l1_norm(m) == doctest::Approx(std::log(5.0)).epsilon(1e-14));
  Mat2 big = m.pow(300);  // far beyond double range
  // entries of m^n are Fibonacci numbers; the l1 norm is exactly F(2n+3),
  // so Binet gives an independent value: log F(k) ~ k log(phi) - log(sqrt 5)
  double expect = 603 * std::log((1 + std::sqrt(5.0)) / 2) - 0.5 * std::log(5.0);
  CHECK(log_l1_norm(big) == doctest::Approx(expect).epsilon(1e-9));
  CHECK_THROWS_AS(log_l1_norm(Mat2{0, 0, 0, 0}), Error);
}

TEST_CASE("word parsing expands exponents") {
  CHECK(Word::parse("A^3B").str() == "AAAB");
  CHECK(Word::parse("BAABABB").size() == 7);
  CHECK(Word::parse("AB^10A^2BA^2BA^10").size() == 27);
  CHECK(Word::parse("B^2A^6B^2A^2BABABA^2B^2A^2BAB^2").size() == 27);
  CHECK(Word::parse("").empty());

  CHECK_THROWS_AS(Word::parse("AB^0"), Error);
  CHECK_THROWS_AS(Word::parse("A^"), Error);
  CHECK_THROWS_AS(Word::parse("A^-2"), Error);
  CHECK_THROWS_AS(Word::parse("^2"), Error);
  CHECK_THROWS_AS(Word::parse("abz"), Error);
  CHECK_THROWS_AS(Word::parse("A^99999999999"), Error);

  try {
    Word::parse("A^0");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
  }
}

TEST_CASE("word rendering round trips") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> len(0, 50), coin(0, 1);
  for (int i = 0; i < 100; ++i) {
    std::vector<Letter> ls;
    int n = len(rng);
    for (int j = 0; j < n; ++j)
      ls.push_back(coin(rng) ? Letter::B : Letter::A);
    Word w(ls);
    CHECK(Word::parse(w.str()) == w);
    CHECK(Word::parse(w.str_compressed()) == w);
  }
  CHECK(Word::parse("AAAB").str_compressed() == "A^3B");
  CHECK(Word::parse("ABBA").str_compressed() == "AB^2A");
}

TEST_CASE("word ordering and helpers") {
  Word a = Word::parse("A"), b = Word::parse("B"), ab = Word::parse("AB");
  CHECK(a < b);
  CHECK(a < ab);          // lexicographic: prefix first
  CHECK(shortlex_less(b, ab));  // but B is shorter than AB
  CHECK(ab.power(3) == Word::parse("ABABAB"));
  CHECK(a.concat(b) == ab);
  CHECK(b.is_suffix_of(ab));
  CHECK_FALSE(a.is_suffix_of(ab));
  CHECK(Word().is_suffix_of(ab));
}

TEST_CASE("word evaluation") {
  Mat2 a = Mat2::parse("1,1;0,1"), b = Mat2::parse("1,0;1,1");
  CHECK(eval_word(Word(), a, b) == Mat2::identity());
  CHECK(eval_word(Word::parse("AB"), a, b) == a * b);
  CHECK(eval_word(Word::parse("BAABABB"), a, b) == b * a * a * b * a * b * b);
  // left-to-right order matters
  CHECK(eval_word(Word::parse("AB"), a, b) != eval_word(Word::parse("BA"), a, b));
}
