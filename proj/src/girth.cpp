#include "girth.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace matgrowth::girth {

namespace {

std::uint32_t residue(const Rational& r, std::uint32_t p) {
  // mpz_fdiv_ui floors, so negatives land in [0, p) directly.
  return static_cast<std::uint32_t>(mpz_fdiv_ui(r.num().get_mpz_t(), p));
}

struct Key {
  std::uint64_t hi = 0, lo = 0;
  bool operator==(const Key&) const = default;
};

Key key_of(const ModMat2& m) {
  return {(std::uint64_t(m.a) << 32) | m.b, (std::uint64_t(m.c) << 32) | m.d};
}

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t x = k.hi * 0x9E3779B97F4A7C15ULL + k.lo;
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }
};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ModMat2 reduce_mod(const Mat2& m, std::uint32_t p) {
  if (!is_prime(p)) throw Error::domain("modulus must be prime");
  if (!m.is_integer()) throw Error::domain("mod-p reduction needs integer entries");
  return {residue(m.a, p), residue(m.b, p), residue(m.c, p), residue(m.d, p), p};
}

ModMat2 mod_identity(std::uint32_t p) {
  if (!is_prime(p)) throw Error::domain("modulus must be prime");
  return {1 % p, 0, 0, 1 % p, p};
}

ModMat2 mod_mul(const ModMat2& x, const ModMat2& y) {
  if (x.p != y.p) throw Error::domain("mismatched moduli");
  std::uint64_t p = x.p;
  auto mul = [p](std::uint64_t u, std::uint64_t v, std::uint64_t w, std::uint64_t z) {
    return static_cast<std::uint32_t>((u * v + w * z) % p);
  };
  return {mul(x.a, y.a, x.b, y.c), mul(x.a, y.b, x.b, y.d),
          mul(x.c, y.a, x.d, y.c), mul(x.c, y.b, x.d, y.d), x.p};
}

std::uint64_t girth_bound(std::uint64_t p, double s) {
  if (!is_prime(p)) throw Error::domain("p must be prime");
  if (!(s > 1.0)) throw Error::domain("growth rate must exceed 1");
  double raw = std::log(static_cast<double>(p)) / std::log(s);
  return static_cast<std::uint64_t>(std::ceil(raw));
}

BfsResult bfs_first_collision(const Mat2& a, const Mat2& b, std::uint32_t p,
                              const BfsLimits& limits) {
  if (limits.depth_max < 1) throw Error::domain("depth_max must be at least 1");
  ModMat2 ra = reduce_mod(a, p), rb = reduce_mod(b, p);

  // Parent links; words are rebuilt by walking to the root (index 0, the
  // empty word, which itself never enters the visited map).
  struct Node {
    std::uint32_t parent;
    Letter letter;
  };
  std::vector<Node> nodes{{0, Letter::A}};
  auto word_at = [&](std::uint32_t idx) {
    std::vector<Letter> rev;
    while (idx != 0) {
      rev.push_back(nodes[idx].letter);
      idx = nodes[idx].parent;
    }
    std::reverse(rev.begin(), rev.end());
    return Word(std::move(rev));
  };

  std::unordered_map<Key, std::uint32_t, KeyHash> seen;
  struct FrontierEntry {
    std::uint32_t node;
    ModMat2 m;
  };
  std::vector<FrontierEntry> frontier{{0, mod_identity(p)}};

  BfsResult result;
  result.p = p;
  result.depth_max = limits.depth_max;

  for (unsigned depth = 1; depth <= limits.depth_max; ++depth) {
    std::vector<FrontierEntry> next;
    next.reserve(frontier.size() * 2);
    // (first word index, colliding parent index, colliding letter)
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Letter>> hits;
    for (const FrontierEntry& f : frontier) {
      for (Letter l : {Letter::A, Letter::B}) {
        ModMat2 child = mod_mul(f.m, l == Letter::A ? ra : rb);
        auto [it, inserted] = seen.try_emplace(key_of(child), 0);
        if (!inserted) {
          hits.emplace_back(it->second, f.node, l);
          continue;
        }
        if (seen.size() > limits.max_states)
          throw Error::cap("BFS state budget exceeded");
        nodes.push_back({f.node, l});
        std::uint32_t idx = static_cast<std::uint32_t>(nodes.size() - 1);
        it->second = idx;
        next.push_back({idx, child});
      }
    }
    if (!hits.empty()) {
      CollisionRecord best;
      bool have = false;
      for (const auto& [u_idx, parent, letter] : hits) {
        CollisionRecord cand;
        cand.depth = depth;
        cand.u = word_at(u_idx);
        cand.v = word_at(parent);
        cand.v.push_back(letter);
        if (!have || shortlex_less(cand.u, best.u) ||
            (cand.u == best.u && shortlex_less(cand.v, best.v))) {
          best = std::move(cand);
          have = true;
        }
      }
      result.collision = std::move(best);
      result.states_visited = seen.size();
      return result;
    }
    frontier = std::move(next);
  }
  result.states_visited = seen.size();
  return result;
}

bool verify_relation(const Word& u, const Word& v, const Mat2& a, const Mat2& b) {
  return eval_word(u, a, b) == eval_word(v, a, b);
}

bool freeness_sufficient(const Rational& k, const Rational& m) {
  return k * m >= Rational(4);
}

bool suffix_freeness_check(const Word& u, const Word& v) {
  if (u.empty() || v.empty())
    throw Error::domain("suffix check needs nonempty words");
  return !u.is_suffix_of(v) && !v.is_suffix_of(u);
}

}  // namespace matgrowth::girth
