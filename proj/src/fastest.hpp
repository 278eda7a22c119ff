#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mat2.hpp"
#include "word.hpp"

namespace matgrowth::fastest {

struct SearchLimits {
  unsigned max_exhaustive_len = 30;
};

enum class PruneMode {
  none,       // plain exhaustive walk over all 2^n words
  dominated,  // entrywise-domination pruning; nonnegative pairs only
};

struct MaximizerRecord {
  unsigned length = 0;
  Rational max_value;
  std::vector<Word> witnesses;  // lexicographic order, A < B
  // Pruned searches still report the exact max_value but may drop some of
  // the tied witnesses.
  bool witnesses_exhaustive = true;
};

MaximizerRecord max_entry_over_length(const Mat2& a, const Mat2& b, unsigned n,
                                      const SearchLimits& limits = {},
                                      PruneMode mode = PruneMode::none);

struct JsrEstimate {
  double lower = 0.0;
  double upper = 0.0;
  Word lower_witness;
  unsigned search_depth = 0;
};

// max over all words w with 1 <= |w| <= max_len of rho(w(A,B))^(1/|w|).
// The witness is the shortlex-least word within 1e-10 relative of the max.
std::pair<double, Word> jsr_lower_bound(const Mat2& a, const Mat2& b,
                                        unsigned max_len,
                                        const SearchLimits& limits = {});

// (max over |w| = n of l1_norm(w(A,B)))^(1/n); valid since the entrywise
// l1 norm is submultiplicative.
double jsr_upper_bound(const Mat2& a, const Mat2& b, unsigned n,
                       const SearchLimits& limits = {});

// lower = jsr_lower_bound(max_len), upper = best (smallest) length-n upper
// bound over n <= max_len.
JsrEstimate jsr_estimate(const Mat2& a, const Mat2& b, unsigned max_len,
                         const SearchLimits& limits = {});

struct AlternationReport {
  Rational k, m;
  unsigned n_max = 0;
  bool hypothesis_met = false;
  bool forced = false;
  bool verified = false;
  struct Counterexample {
    unsigned n = 0;
    Word lex_least_maximizer;
    Rational max_value;
    Rational alternating_value;
  };
  std::optional<Counterexample> counterexample;
};

// For A = [[1,k],[0,1]], B = [[1,0],[m,1]] checks that (AB)^(n/2) and
// (BA)^(n/2) sit in the maximizer set at every even n <= n_max. The
// hypothesis is k,m >= 2 or k = m = 1; outside it the check runs only when
// force is set.
AlternationReport verify_alternation_optimality(const Rational& k,
                                                const Rational& m,
                                                unsigned n_max,
                                                bool force = false,
                                                const SearchLimits& limits = {});

struct ProbeRow {
  unsigned n = 0;
  Rational max_value;
  Word lex_least;
  std::size_t tie_count = 0;
};

struct PeriodProbe {
  unsigned max_len = 0;
  std::vector<ProbeRow> rows;  // rows[i] covers length i+1
  // Smallest r whose length-r lex-least maximizer v satisfies
  // lex_least(t*r) == v^t for every multiple t*r <= max_len. Needs at least
  // three multiples in range, hence r <= max_len / 3.
  std::optional<std::pair<unsigned, Word>> period;
};

PeriodProbe periodicity_probe(const Mat2& a, const Mat2& b, unsigned max_len,
                              const SearchLimits& limits = {});

struct CandidateRate {
  std::vector<std::pair<Word, double>> rates;  // fixed candidate order
  Word best_word;
  double best_rate = 0.0;
  bool in_sl2z_nonneg = false;  // advisory flag, not enforced
};

// Rates rho(w)^(1/|w|) for the short candidate list A, B, AB, AAB, ABB.
CandidateRate candidate_set_rate(const Mat2& a, const Mat2& b);

}  // namespace matgrowth::fastest
