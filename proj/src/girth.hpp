#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "mat2.hpp"
#include "word.hpp"

namespace matgrowth::girth {

bool is_prime(std::uint64_t n);

// 2x2 matrix over Z_p, entries in [0, p).
struct ModMat2 {
  std::uint32_t a = 0, b = 0, c = 0, d = 0;
  std::uint32_t p = 0;
  bool operator==(const ModMat2&) const = default;
};

// Requires integer entries and prime p.
ModMat2 reduce_mod(const Mat2& m, std::uint32_t p);
ModMat2 mod_mul(const ModMat2& x, const ModMat2& y);
ModMat2 mod_identity(std::uint32_t p);

// ceil(log(p) / log(s)): the word length at which entries can first reach
// p, hence the predicted order of the shortest possible relation mod p.
std::uint64_t girth_bound(std::uint64_t p, double s);

struct CollisionRecord {
  unsigned depth = 0;  // max of the two word lengths
  Word u, v;           // u shortlex-less than v
};

struct BfsLimits {
  unsigned depth_max = 25;
  std::size_t max_states = std::size_t(1) << 26;
};

struct BfsResult {
  std::optional<CollisionRecord> collision;
  std::size_t states_visited = 0;
  std::uint32_t p = 0;
  unsigned depth_max = 0;
};

// Breadth-first enumeration of all nonempty words by increasing length,
// evaluated mod p. Returns the first pair of distinct words with equal
// evaluations; at the minimal depth the lexicographically least (u, v)
// pair is reported, so the record is deterministic.
BfsResult bfs_first_collision(const Mat2& a, const Mat2& b, std::uint32_t p,
                              const BfsLimits& limits = {});

// Exact rational equality of the two evaluations.
bool verify_relation(const Word& u, const Word& v, const Mat2& a, const Mat2& b);

// Sufficient condition only: k*m >= 4 makes the semigroup generated by
// [[1,k],[0,1]] and [[1,0],[m,1]] free. false means unknown, not non-free.
bool freeness_sufficient(const Rational& k, const Rational& m);

// true iff neither word is a suffix of the other, which certifies that
// substituting free generators for the letters of u and v again yields
// free semigroup generators.
bool suffix_freeness_check(const Word& u, const Word& v);

}  // namespace matgrowth::girth
