#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mat2.hpp"
#include "word.hpp"

namespace matgrowth::lyapunov {

enum class Norm { l1, max_abs };

struct McParams {
  std::uint64_t n = 1'000'000;  // letters per trial
  unsigned trials = 16;
  std::uint64_t seed = 0;
  Norm norm = Norm::l1;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct Estimate {
  double lambda_mean = 0.0;
  double lambda_stderr = 0.0;  // 0 when trials == 1
  double s_gen = 0.0;          // exp(lambda_mean)
  std::vector<double> trial_lambdas;
  std::uint64_t n = 0;
  unsigned trials = 0;
  std::uint64_t seed = 0;
  Norm norm = Norm::l1;
  std::string rng_algorithm;
};

// Monte-Carlo Lyapunov exponent: per trial, multiply n fair random letters
// in doubles, renormalizing after every step and accumulating the step
// logs. Deterministic for fixed (seed, n, trials) regardless of threads.
Estimate mc_estimate(const Mat2& a, const Mat2& b, const McParams& params = {});

// Same renormalized accumulation along a fixed word; telescopes to
// log norm(w(A,B)) exactly, so an exact-arithmetic oracle can check it.
double renormalized_log_norm(const Mat2& a, const Mat2& b, const Word& w,
                             Norm norm = Norm::l1);

// lambda <= log rho((A+B)/2) for nonnegative pairs.
double ave_upper_bound(const Mat2& a, const Mat2& b);

// Shear-pair bound on lambda for A = [[1,k],[0,1]], B = [[1,0],[m,1]],
// k, m > 0.
double sturman_thiffeault_bound(double k, double m);

struct BoundsReport {
  Estimate mc;
  double s_ave = 0.0;
  std::optional<double> ave_bound;  // present when both matrices nonnegative
  std::optional<double> st_bound;   // present for positive shear pairs
  bool nonnegative_entries = false;
  bool shear_shape = false;
  std::optional<bool> ave_bound_respected;  // lambda <= bound + 3 stderr
  std::optional<bool> st_tighter;           // st_bound < ave_bound
  bool s_gen_above_s_ave = false;
};

BoundsReport bounds_report(const Mat2& a, const Mat2& b,
                           const McParams& params = {});

}  // namespace matgrowth::lyapunov
