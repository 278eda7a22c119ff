#include "average.hpp"

#include <cmath>
#include <vector>

#include "error.hpp"
#include "rng.hpp"

namespace matgrowth::average {

double average_growth_rate(const Mat2& a, const Mat2& b) {
  return spectral_radius(mean_matrix(a, b));
}

RecurrenceSpec recurrence_spec(const Mat2& a, const Mat2& b) {
  Mat2 mean = mean_matrix(a, b);
  return {mean.trace(), mean.det()};
}

Mat2 expected_entries(const Mat2& a, const Mat2& b, unsigned long n,
                      const Caps& caps) {
  if (n > caps.max_power)
    throw Error::cap("power " + std::to_string(n) + " exceeds cap " +
                     std::to_string(caps.max_power));
  return mean_matrix(a, b).pow(n);
}

MeanCheck empirical_mean_check(const Mat2& a, const Mat2& b, unsigned long n,
                               unsigned long trials, std::uint64_t seed,
                               const Caps& caps) {
  if (n > caps.max_exact_check_len)
    throw Error::cap("exact sampling capped at length " +
                     std::to_string(caps.max_exact_check_len));
  if (trials < caps.min_check_trials)
    throw Error::domain("need at least " + std::to_string(caps.min_check_trials) +
                        " trials for a meaningful check");

  MeanCheck out;
  out.n = n;
  out.trials = trials;
  out.seed = seed;
  out.expected_a = expected_entries(a, b, n, caps).a;
  out.expected_is_zero = out.expected_a.is_zero();

  Rational sum;
  std::vector<double> samples;
  samples.reserve(trials);
  for (unsigned long t = 0; t < trials; ++t) {
    Xoshiro256pp g = Xoshiro256pp::for_trial(seed, t);
    Mat2 prod = Mat2::identity();
    for (unsigned long i = 0; i < n; ++i) prod = prod * (g.next_bit() ? b : a);
    sum += prod.a;
    samples.push_back(prod.a.to_double());
  }
  out.sample_mean_a = sum / Rational(static_cast<long>(trials));

  Rational dev = (out.sample_mean_a - out.expected_a).abs();
  out.relative_deviation = out.expected_is_zero
                               ? dev.to_double()
                               : (dev / out.expected_a.abs()).to_double();

  double mean_d = out.sample_mean_a.to_double();
  double var = 0.0;
  for (double x : samples) var += (x - mean_d) * (x - mean_d);
  var /= static_cast<double>(trials - 1);
  out.standard_error = std::sqrt(var / static_cast<double>(trials));
  return out;
}

}  // namespace matgrowth::average
