#include "fastest.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace matgrowth::fastest {

namespace {

void check_len(unsigned n, const SearchLimits& limits) {
  if (n < 1) throw Error::domain("word length must be at least 1");
  if (n > limits.max_exhaustive_len)
    throw Error::cap("length " + std::to_string(n) + " exceeds exhaustive cap " +
                     std::to_string(limits.max_exhaustive_len));
}

// Depth-first walk over all words of length n in lexicographic order,
// sharing prefix products. visit(prefix[n]) runs at each leaf.
template <typename Visit>
void walk_leaves(const Mat2& a, const Mat2& b, unsigned n, Visit&& visit) {
  std::vector<Mat2> prefix(n + 1);
  prefix[0] = Mat2::identity();
  std::vector<Letter> cur(n);
  auto step = [&](auto&& self, unsigned depth) -> void {
    if (depth == n) {
      visit(prefix[n], cur);
      return;
    }
    cur[depth] = Letter::A;
    prefix[depth + 1] = prefix[depth] * a;
    self(self, depth + 1);
    cur[depth] = Letter::B;
    prefix[depth + 1] = prefix[depth] * b;
    self(self, depth + 1);
  };
  step(step, 0);
}

MaximizerRecord exhaustive_max(const Mat2& a, const Mat2& b, unsigned n) {
  // Pass 1: value only, so ties do not hold 2^n words in memory while the
  // maximum is still moving.
  Rational best;
  bool seen = false;
  walk_leaves(a, b, n, [&](const Mat2& m, const std::vector<Letter>&) {
    Rational v = m.max_abs_entry();
    if (!seen || v > best) {
      best = v;
      seen = true;
    }
  });
  // Pass 2: collect the ties. Lexicographic order falls out of the walk.
  MaximizerRecord rec;
  rec.length = n;
  rec.max_value = best;
  walk_leaves(a, b, n, [&](const Mat2& m, const std::vector<Letter>& w) {
    if (m.max_abs_entry() == best) rec.witnesses.emplace_back(w);
  });
  return rec;
}

Mat2 swap_columns(const Mat2& m) { return {m.b, m.a, m.d, m.c}; }

bool dominates(const Mat2& x, const Mat2& y) {
  // x >= y entrywise, strictly somewhere.
  return x.a >= y.a && x.b >= y.b && x.c >= y.c && x.d >= y.d && x != y;
}

MaximizerRecord pruned_max(const Mat2& a, const Mat2& b, unsigned n) {
  if (!a.is_nonnegative() || !b.is_nonnegative())
    throw Error::domain("domination pruning needs nonnegative matrices");
  // When B is A reflected through the antidiagonal, a prefix also loses to
  // any prefix that dominates its column swap: the dominator can mirror the
  // loser's continuation letter for letter.
  Mat2 j{0, 1, 1, 0};
  bool swap_rule = (b == j * a * j);

  struct Node {
    Mat2 m;
    Word w;
  };
  std::vector<Node> frontier;
  frontier.push_back({a, Word::parse("A")});
  frontier.push_back({b, Word::parse("B")});
  for (unsigned depth = 1; depth < n; ++depth) {
    std::vector<Node> next;
    next.reserve(frontier.size() * 2);
    for (const Node& f : frontier) {
      Word wa = f.w, wb = f.w;
      wa.push_back(Letter::A);
      wb.push_back(Letter::B);
      next.push_back({f.m * a, std::move(wa)});
      next.push_back({f.m * b, std::move(wb)});
    }
    std::vector<bool> drop(next.size(), false);
    for (std::size_t i = 0; i < next.size(); ++i) {
      for (std::size_t k = 0; k < next.size() && !drop[i]; ++k) {
        if (k == i || drop[k]) continue;
        if (dominates(next[k].m, next[i].m)) {
          drop[i] = true;
        } else if (swap_rule) {
          Mat2 swapped = swap_columns(next[i].m);
          // Equality needs an index tie-break or mirror twins erase each
          // other.
          if (dominates(next[k].m, swapped) || (next[k].m == swapped && k < i))
            drop[i] = true;
        }
      }
    }
    std::vector<Node> kept;
    kept.reserve(next.size());
    for (std::size_t i = 0; i < next.size(); ++i)
      if (!drop[i]) kept.push_back(std::move(next[i]));
    frontier = std::move(kept);
  }

  MaximizerRecord rec;
  rec.length = n;
  rec.witnesses_exhaustive = false;
  bool seen = false;
  for (const Node& f : frontier) {
    Rational v = f.m.max_abs_entry();
    if (!seen || v > rec.max_value) {
      rec.max_value = v;
      seen = true;
    }
  }
  for (const Node& f : frontier)
    if (f.m.max_abs_entry() == rec.max_value) rec.witnesses.push_back(f.w);
  std::sort(rec.witnesses.begin(), rec.witnesses.end());
  return rec;
}

double rate_from_log(double log_value, unsigned len) {
  return std::exp(log_value / static_cast<double>(len));
}

}  // namespace

MaximizerRecord max_entry_over_length(const Mat2& a, const Mat2& b, unsigned n,
                                      const SearchLimits& limits, PruneMode mode) {
  check_len(n, limits);
  return mode == PruneMode::none ? exhaustive_max(a, b, n) : pruned_max(a, b, n);
}

std::pair<double, Word> jsr_lower_bound(const Mat2& a, const Mat2& b,
                                        unsigned max_len, const SearchLimits& limits) {
  check_len(max_len, limits);
  // Pass 1: the exact running max of rho(w)^(1/|w|) over every word with
  // |w| <= max_len.
  double best = 0.0;
  std::vector<Mat2> prefix(max_len + 1);
  prefix[0] = Mat2::identity();
  std::vector<Letter> cur(max_len);
  auto scan = [&](auto&& self, unsigned depth, auto&& at_node) -> void {
    if (depth == max_len) return;
    for (Letter l : {Letter::A, Letter::B}) {
      cur[depth] = l;
      prefix[depth + 1] = prefix[depth] * (l == Letter::A ? a : b);
      at_node(depth + 1);
      self(self, depth + 1, at_node);
    }
  };
  scan(scan, 0, [&](unsigned len) {
    double rho = spectral_radius(prefix[len]);
    if (rho > 0.0) best = std::max(best, rate_from_log(std::log(rho), len));
  });
  // Pass 2: shortlex-least word whose rate ties the max within 1e-10
  // relative, so the reported witness is stable under ulp noise.
  double tol = 1e-10 * std::max(1.0, best);
  std::optional<Word> witness;
  scan(scan, 0, [&](unsigned len) {
    double rho = spectral_radius(prefix[len]);
    if (rho <= 0.0) return;
    if (rate_from_log(std::log(rho), len) < best - tol) return;
    Word w(std::vector<Letter>(cur.begin(), cur.begin() + len));
    if (!witness || shortlex_less(w, *witness)) witness = std::move(w);
  });
  if (!witness) throw Error::domain("all candidate products are nilpotent");
  return {best, *witness};
}

double jsr_upper_bound(const Mat2& a, const Mat2& b, unsigned n,
                       const SearchLimits& limits) {
  check_len(n, limits);
  Rational best;
  bool seen = false;
  walk_leaves(a, b, n, [&](const Mat2& m, const std::vector<Letter>&) {
    Rational v = m.l1_norm();
    if (!seen || v > best) {
      best = v;
      seen = true;
    }
  });
  if (best.is_zero()) throw Error::domain("all length-n products are zero");
  return rate_from_log(best.log_abs(), n);
}

JsrEstimate jsr_estimate(const Mat2& a, const Mat2& b, unsigned max_len,
                         const SearchLimits& limits) {
  JsrEstimate est;
  est.search_depth = max_len;
  auto [lower, witness] = jsr_lower_bound(a, b, max_len, limits);
  est.lower = lower;
  est.lower_witness = witness;
  est.upper = jsr_upper_bound(a, b, 1, limits);
  for (unsigned n = 2; n <= max_len; ++n)
    est.upper = std::min(est.upper, jsr_upper_bound(a, b, n, limits));
  return est;
}

AlternationReport verify_alternation_optimality(const Rational& k, const Rational& m,
                                                unsigned n_max, bool force,
                                                const SearchLimits& limits) {
  if (n_max < 2 || n_max % 2 != 0)
    throw Error::domain("n_max must be a positive even integer");
  check_len(n_max, limits);

  AlternationReport rep;
  rep.k = k;
  rep.m = m;
  rep.n_max = n_max;
  rep.forced = force;
  rep.hypothesis_met =
      (k >= Rational(2) && m >= Rational(2)) || (k == Rational(1) && m == Rational(1));
  if (!rep.hypothesis_met && !force)
    throw Error::domain("k, m outside the verified range (need k,m >= 2 or k = m = 1); "
                        "pass force to probe anyway");

  Mat2 a{1, k, 0, 1};
  Mat2 b{1, 0, m, 1};
  Word ab = Word::parse("AB");
  Word ba = Word::parse("BA");
  rep.verified = true;
  for (unsigned n = 2; n <= n_max; n += 2) {
    MaximizerRecord rec = max_entry_over_length(a, b, n, limits);
    Word alt_ab = ab.power(n / 2);
    Word alt_ba = ba.power(n / 2);
    bool ok = std::binary_search(rec.witnesses.begin(), rec.witnesses.end(), alt_ab) &&
              std::binary_search(rec.witnesses.begin(), rec.witnesses.end(), alt_ba);
    if (!ok) {
      rep.verified = false;
      AlternationReport::Counterexample ce;
      ce.n = n;
      ce.lex_least_maximizer = rec.witnesses.front();
      ce.max_value = rec.max_value;
      ce.alternating_value = eval_word(alt_ab, a, b).max_abs_entry();
      rep.counterexample = std::move(ce);
      break;
    }
  }
  return rep;
}

PeriodProbe periodicity_probe(const Mat2& a, const Mat2& b, unsigned max_len,
                              const SearchLimits& limits) {
  if (max_len < 3)
    throw Error::domain("periodicity probe needs max_len >= 3");
  check_len(max_len, limits);

  PeriodProbe probe;
  probe.max_len = max_len;
  probe.rows.reserve(max_len);
  for (unsigned n = 1; n <= max_len; ++n) {
    MaximizerRecord rec = max_entry_over_length(a, b, n, limits);
    probe.rows.push_back(
        {n, rec.max_value, rec.witnesses.front(), rec.witnesses.size()});
  }
  for (unsigned r = 1; 3 * r <= max_len; ++r) {
    const Word& v = probe.rows[r - 1].lex_least;
    bool periodic = true;
    for (unsigned t = 2; t * r <= max_len; ++t) {
      if (probe.rows[t * r - 1].lex_least != v.power(t)) {
        periodic = false;
        break;
      }
    }
    if (periodic) {
      probe.period = {r, v};
      break;
    }
  }
  return probe;
}

CandidateRate candidate_set_rate(const Mat2& a, const Mat2& b) {
  CandidateRate out;
  out.in_sl2z_nonneg = a.is_integer() && b.is_integer() &&
                       a.det() == Rational(1) && b.det() == Rational(1) &&
                       a.is_nonnegative() && b.is_nonnegative();
  for (const char* text : {"A", "B", "AB", "AAB", "ABB"}) {
    Word w = Word::parse(text);
    double rho = spectral_radius(eval_word(w, a, b));
    double rate =
        rho > 0.0 ? rate_from_log(std::log(rho), static_cast<unsigned>(w.size())) : 0.0;
    out.rates.emplace_back(std::move(w), rate);
  }
  out.best_word = out.rates.front().first;
  out.best_rate = out.rates.front().second;
  for (const auto& [w, r] : out.rates) {
    if (r > out.best_rate) {
      out.best_rate = r;
      out.best_word = w;
    }
  }
  return out;
}

}  // namespace matgrowth::fastest
