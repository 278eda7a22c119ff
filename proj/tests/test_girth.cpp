#include <doctest.h>

#include <cmath>
#include <random>

#include "error.hpp"
#include "fastest.hpp"
#include "girth.hpp"

using namespace matgrowth;
using namespace matgrowth::girth;

namespace {

Mat2 A1() { return Mat2::parse("1,1;0,1"); }
Mat2 B1() { return Mat2::parse("1,0;1,1"); }
Mat2 A2() { return Mat2::parse("1,2;0,1"); }
Mat2 B2() { return Mat2::parse("1,0;2,1"); }

Word W(const char* s) { return Word::parse(s); }

}  // namespace

TEST_CASE("primality screen") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 101, 1000003}) CHECK(is_prime(p));
  for (std::uint64_t n : {0, 1, 4, 9, 91, 100, 1000001}) CHECK_FALSE(is_prime(n));
}

TEST_CASE("mod-p reduction") {
  ModMat2 r = reduce_mod(Mat2::parse("-3,2;-2,1"), 5);
  CHECK(r.a == 2);
  CHECK(r.b == 2);
  CHECK(r.c == 3);
  CHECK(r.d == 1);
  CHECK(r.p == 5);

  ModMat2 s = reduce_mod(Mat2::parse("5,2;2,1"), 5);
  CHECK(s.a == 0);
  CHECK(s.b == 2);
  CHECK(s.c == 2);
  CHECK(s.d == 1);

  CHECK(reduce_mod(Mat2::identity(), 7) == mod_identity(7));
  CHECK(mod_identity(2) == ModMat2{1, 0, 0, 1, 2});

  CHECK_THROWS_AS(reduce_mod(Mat2::parse("1/2,0;0,1"), 5), Error);
  CHECK_THROWS_AS(reduce_mod(Mat2::identity(), 4), Error);
  CHECK_THROWS_AS(reduce_mod(Mat2::identity(), 1), Error);
  CHECK_THROWS_AS(reduce_mod(Mat2::identity(), 0), Error);
}

TEST_CASE("reduction is a semigroup morphism") {
  std::mt19937 gen(99);
  std::uniform_int_distribution<long> entry(-9, 9);
  auto draw = [&] {
    return Mat2{Rational(entry(gen)), Rational(entry(gen)), Rational(entry(gen)),
                Rational(entry(gen))};
  };
  for (int rep = 0; rep < 100; ++rep) {
    Mat2 x = draw(), y = draw();
    for (std::uint32_t p : {2u, 3u, 5u, 101u})
      CHECK(reduce_mod(x * y, p) == mod_mul(reduce_mod(x, p), reduce_mod(y, p)));
  }
  CHECK_THROWS_AS(mod_mul(mod_identity(3), mod_identity(5)), Error);
}

TEST_CASE("girth bound") {
  CHECK(girth_bound(2, 2.0) == 1);
  CHECK(girth_bound(101, 1.618) == 10);
  CHECK(girth_bound(101, 2.414213562373095) == 6);
  CHECK(girth_bound(1000003, 2.414213562373095) == 16);
  CHECK_THROWS_AS(girth_bound(100, 2.0), Error);
  CHECK_THROWS_AS(girth_bound(101, 1.0), Error);
  CHECK_THROWS_AS(girth_bound(101, 0.5), Error);
}

TEST_CASE("shortest collisions for the k=1 shear pair") {
  struct Expect {
    std::uint32_t p;
    unsigned depth;
    const char* u;
    const char* v;
  } table[] = {
      {2, 2, "AA", "BB"},
      {3, 3, "AAA", "BBB"},
      {5, 5, "AAAAA", "BBBBB"},
      {11, 6, "AABABB", "BBABAA"},
  };
  for (const auto& e : table) {
    BfsResult r = bfs_first_collision(A1(), B1(), e.p);
    REQUIRE(r.collision.has_value());
    CHECK(r.collision->depth == e.depth);
    CHECK(r.collision->u == W(e.u));
    CHECK(r.collision->v == W(e.v));
    CHECK(r.p == e.p);
  }
}

TEST_CASE("shortest collisions for the k=2 shear pair") {
  struct Expect {
    std::uint32_t p;
    unsigned depth;
    const char* u;
    const char* v;
    std::size_t states;
  } table[] = {
      {2, 1, "A", "B", 1},
      {3, 3, "AAA", "BBB", 13},
      {5, 3, "ABA", "BAB", 13},
      {11, 5, "ABBBA", "BAAAB", 61},
  };
  for (const auto& e : table) {
    BfsResult r = bfs_first_collision(A2(), B2(), e.p);
    REQUIRE(r.collision.has_value());
    CHECK(r.collision->depth == e.depth);
    CHECK(r.collision->u == W(e.u));
    CHECK(r.collision->v == W(e.v));
    CHECK(r.states_visited == e.states);
  }
}

TEST_CASE("depth cap reports a miss, deeper run finds the relation") {
  BfsLimits shallow;
  shallow.depth_max = 5;
  BfsResult r5 = bfs_first_collision(A2(), B2(), 101, shallow);
  CHECK_FALSE(r5.collision.has_value());
  CHECK(r5.depth_max == 5);
  CHECK(r5.states_visited == 62);

  BfsLimits deep;
  deep.depth_max = 12;
  BfsResult r12 = bfs_first_collision(A2(), B2(), 101, deep);
  REQUIRE(r12.collision.has_value());
  CHECK(r12.collision->depth == 7);
  CHECK(r12.collision->u == W("AABBABA"));
  CHECK(r12.collision->v == W("BABAABB"));
}

TEST_CASE("equal generators collide immediately") {
  BfsResult r = bfs_first_collision(A1(), A1(), 5);
  REQUIRE(r.collision.has_value());
  CHECK(r.collision->depth == 1);
  CHECK(r.collision->u == W("A"));
  CHECK(r.collision->v == W("B"));
}

TEST_CASE("collision records are mod-true, exact-false, and entry-large") {
  struct Case {
    Mat2 a, b;
    std::uint32_t p;
  } cases[] = {{A1(), B1(), 5}, {A1(), B1(), 11}, {A2(), B2(), 11}};
  for (const auto& c : cases) {
    BfsResult r = bfs_first_collision(c.a, c.b, c.p);
    REQUIRE(r.collision.has_value());
    const Word& u = r.collision->u;
    const Word& v = r.collision->v;
    Mat2 eu = eval_word(u, c.a, c.b);
    Mat2 ev = eval_word(v, c.a, c.b);
    CHECK(reduce_mod(eu, c.p) == reduce_mod(ev, c.p));
    CHECK_FALSE(verify_relation(u, v, c.a, c.b));
    // the witnesses differ over Z, so some entry gap is a nonzero
    // multiple of p
    Mat2 diff = eu + ev.scaled(Rational(-1));
    CHECK(diff.max_abs_entry() >= Rational(static_cast<long>(c.p)));
    // no relation can show up while every length-n entry is below p
    Rational peak =
        fastest::max_entry_over_length(c.a, c.b, r.collision->depth).max_value;
    CHECK(peak >= Rational(static_cast<long>(c.p)));
    double s_max = std::sqrt(spectral_radius(c.a * c.b));
    CHECK(r.collision->depth >= girth_bound(c.p, s_max));
  }
}

TEST_CASE("search is deterministic") {
  BfsResult r1 = bfs_first_collision(A2(), B2(), 11);
  BfsResult r2 = bfs_first_collision(A2(), B2(), 11);
  REQUIRE(r1.collision.has_value());
  REQUIRE(r2.collision.has_value());
  CHECK(r1.collision->u == r2.collision->u);
  CHECK(r1.collision->v == r2.collision->v);
  CHECK(r1.states_visited == r2.states_visited);
}

TEST_CASE("state budget is enforced") {
  BfsLimits tiny;
  tiny.max_states = 4;
  CHECK_THROWS_AS(bfs_first_collision(A2(), B2(), 101, tiny), Error);
  try {
    bfs_first_collision(A2(), B2(), 101, tiny);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cap);
  }
  BfsLimits zero;
  zero.depth_max = 0;
  CHECK_THROWS_AS(bfs_first_collision(A2(), B2(), 101, zero), Error);
}

TEST_CASE("exact relation verification") {
  // braid relation for the signed shear pair
  Mat2 c = Mat2::parse("1,1;0,1");
  Mat2 d = Mat2::parse("1,0;-1,1");
  CHECK(verify_relation(W("ABA"), W("BAB"), c, d));

  // a known 27-letter relation for an upper-triangular integer pair
  Mat2 g1 = Mat2::parse("2,0;0,3");
  Mat2 g2 = Mat2::parse("3,5;0,5");
  Word u = W("AB^10A^2BA^2BA^10");
  Word v = W("B^2A^6B^2A^2BABABA^2B^2A^2BAB^2");
  CHECK(u.size() == 27);
  CHECK(v.size() == 27);
  CHECK(verify_relation(u, v, g1, g2));

  CHECK_FALSE(verify_relation(W("AB"), W("BA"), A2(), B2()));
}

TEST_CASE("freeness certificate") {
  CHECK(freeness_sufficient(Rational(2), Rational(2)));
  CHECK(freeness_sufficient(Rational(1, 2), Rational(8)));
  CHECK(freeness_sufficient(Rational(-2), Rational(-2)));
  CHECK_FALSE(freeness_sufficient(Rational(1), Rational(1)));
  CHECK_FALSE(freeness_sufficient(Rational(2), Rational(-2)));
}

TEST_CASE("suffix freeness check") {
  CHECK(suffix_freeness_check(W("AB"), W("ABB")));
  CHECK(suffix_freeness_check(W("AAB"), W("BAB")));
  CHECK_FALSE(suffix_freeness_check(W("B"), W("AB")));
  CHECK_FALSE(suffix_freeness_check(W("AB"), W("AB")));
  CHECK_THROWS_AS(suffix_freeness_check(Word{}, W("A")), Error);
}
