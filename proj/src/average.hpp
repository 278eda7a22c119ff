#pragma once

#include <cstdint>

#include "mat2.hpp"

namespace matgrowth::average {

struct Caps {
  unsigned long max_power = 10000;
  unsigned long max_exact_check_len = 60;
  unsigned long min_check_trials = 100;
};

// rho of the mean matrix (A + B) / 2. This is the growth rate of the
// expected entries under fair coin choices, not the expectation of the
// growth rate.
double average_growth_rate(const Mat2& a, const Mat2& b);

// Entries of mean^n satisfy e_n = trace * e_(n-1) - det * e_(n-2) with
// trace and det taken from the mean matrix.
struct RecurrenceSpec {
  Rational trace;
  Rational det;
};

RecurrenceSpec recurrence_spec(const Mat2& a, const Mat2& b);

// Exact expectation of the random length-n product, i.e. mean^n.
Mat2 expected_entries(const Mat2& a, const Mat2& b, unsigned long n,
                      const Caps& caps = {});

struct MeanCheck {
  unsigned long n = 0;
  unsigned long trials = 0;
  std::uint64_t seed = 0;
  Rational expected_a;     // exact (1,1) entry of mean^n
  Rational sample_mean_a;  // exact average of the sampled (1,1) entries
  bool expected_is_zero = false;
  // |sample - expected| / |expected|; absolute deviation when the
  // expectation is exactly zero (expected_is_zero flags that case).
  double relative_deviation = 0.0;
  double standard_error = 0.0;  // sample sd / sqrt(trials)
};

// Draws `trials` random words of length n (fair letters, seeded stream per
// trial), keeps the products exact, and compares the sample mean of the
// (1,1) entry against mean^n.
MeanCheck empirical_mean_check(const Mat2& a, const Mat2& b, unsigned long n,
                               unsigned long trials, std::uint64_t seed,
                               const Caps& caps = {});

}  // namespace matgrowth::average
