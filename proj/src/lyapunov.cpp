#include "lyapunov.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "error.hpp"
#include "rng.hpp"

namespace matgrowth::lyapunov {

namespace {

struct D2 {
  double a, b, c, d;
};

D2 mul(const D2& x, const D2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

double norm_of(const D2& m, Norm norm) {
  double aa = std::fabs(m.a), ab = std::fabs(m.b);
  double ac = std::fabs(m.c), ad = std::fabs(m.d);
  if (norm == Norm::l1) return aa + ab + ac + ad;
  return std::max(std::max(aa, ab), std::max(ac, ad));
}

D2 to_d2(const Mat2& m) {
  D2 r{m.a.to_double(), m.b.to_double(), m.c.to_double(), m.d.to_double()};
  if (!std::isfinite(r.a) || !std::isfinite(r.b) || !std::isfinite(r.c) ||
      !std::isfinite(r.d))
    throw Error::nonfinite("matrix entry overflows double");
  return r;
}

// One renormalized multiply. Returns log of the step norm.
double step(D2& m, const D2& next, Norm norm) {
  m = mul(m, next);
  double nrm = norm_of(m, norm);
  if (!(nrm > 0.0) || !std::isfinite(nrm))
    throw Error::nonfinite("renormalization norm is zero or not finite");
  m.a /= nrm;
  m.b /= nrm;
  m.c /= nrm;
  m.d /= nrm;
  return std::log(nrm);
}

double run_trial(const D2& da, const D2& db, std::uint64_t n, std::uint64_t seed,
                 std::uint64_t trial, Norm norm) {
  Xoshiro256pp g = Xoshiro256pp::for_trial(seed, trial);
  D2 m{1.0, 0.0, 0.0, 1.0};
  double acc = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) acc += step(m, g.next_bit() ? db : da, norm);
  return acc / static_cast<double>(n);
}

}  // namespace

Estimate mc_estimate(const Mat2& a, const Mat2& b, const McParams& params) {
  if (params.n < 1) throw Error::domain("need at least one step per trial");
  if (params.trials < 1) throw Error::domain("need at least one trial");
  if (a.det().is_zero() || b.det().is_zero())
    throw Error::domain("Lyapunov sampling needs nonsingular matrices");

  D2 da = to_d2(a), db = to_d2(b);
  std::vector<double> lambdas(params.trials, 0.0);

  unsigned hw = std::thread::hardware_concurrency();
  unsigned want = params.threads != 0 ? params.threads : (hw != 0 ? hw : 1);
  unsigned nthreads = std::min<unsigned>(want, params.trials);

  // Each trial owns its RNG stream and result slot; threading only changes
  // who computes which slot.
  std::atomic<unsigned> next_trial{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    try {
      for (;;) {
        unsigned t = next_trial.fetch_add(1);
        if (t >= params.trials) return;
        lambdas[t] = run_trial(da, db, params.n, params.seed, t, params.norm);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  };
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  Estimate est;
  est.trial_lambdas = std::move(lambdas);
  est.n = params.n;
  est.trials = params.trials;
  est.seed = params.seed;
  est.norm = params.norm;
  est.rng_algorithm = rng_algorithm_name;

  double sum = 0.0;
  for (double l : est.trial_lambdas) sum += l;
  est.lambda_mean = sum / static_cast<double>(params.trials);
  if (params.trials > 1) {
    double var = 0.0;
    for (double l : est.trial_lambdas)
      var += (l - est.lambda_mean) * (l - est.lambda_mean);
    var /= static_cast<double>(params.trials - 1);
    est.lambda_stderr = std::sqrt(var / static_cast<double>(params.trials));
  }
  est.s_gen = std::exp(est.lambda_mean);
  if (!std::isfinite(est.lambda_mean) || !std::isfinite(est.s_gen))
    throw Error::nonfinite("Lyapunov estimate is not finite");
  return est;
}

double renormalized_log_norm(const Mat2& a, const Mat2& b, const Word& w, Norm norm) {
  if (w.empty()) throw Error::domain("need a nonempty word");
  D2 da = to_d2(a), db = to_d2(b);
  D2 m{1.0, 0.0, 0.0, 1.0};
  double acc = 0.0;
  for (Letter l : w) acc += step(m, l == Letter::A ? da : db, norm);
  return acc;
}

double ave_upper_bound(const Mat2& a, const Mat2& b) {
  if (!a.is_nonnegative() || !b.is_nonnegative())
    throw Error::domain("mean-matrix bound needs nonnegative entries");
  double rho = spectral_radius(mean_matrix(a, b));
  if (!(rho > 0.0)) throw Error::domain("mean matrix has zero spectral radius");
  return std::log(rho);
}

double sturman_thiffeault_bound(double k, double m) {
  double km = k * m;
  if (!(km > 0.0)) throw Error::domain("shear bound needs k*m > 0");
  constexpr double c = 1.0157;
  double s = std::sqrt(km);
  return 0.25 * (c + std::log(s + 1.0 / s) + 0.5 * std::log(1.0 + km));
}

BoundsReport bounds_report(const Mat2& a, const Mat2& b, const McParams& params) {
  BoundsReport rep;
  rep.mc = mc_estimate(a, b, params);
  rep.s_ave = spectral_radius(mean_matrix(a, b));
  rep.nonnegative_entries = a.is_nonnegative() && b.is_nonnegative();
  if (rep.nonnegative_entries) rep.ave_bound = ave_upper_bound(a, b);

  bool a_shear = a.a == Rational(1) && a.d == Rational(1) && a.c == Rational(0);
  bool b_shear = b.a == Rational(1) && b.d == Rational(1) && b.b == Rational(0);
  rep.shear_shape = a_shear && b_shear;
  if (rep.shear_shape && a.b.sign() > 0 && b.c.sign() > 0)
    rep.st_bound = sturman_thiffeault_bound(a.b.to_double(), b.c.to_double());

  if (rep.ave_bound)
    rep.ave_bound_respected =
        rep.mc.lambda_mean <= *rep.ave_bound + 3.0 * rep.mc.lambda_stderr;
  if (rep.ave_bound && rep.st_bound) rep.st_tighter = *rep.st_bound < *rep.ave_bound;
  rep.s_gen_above_s_ave = rep.mc.s_gen > rep.s_ave;
  return rep;
}

}  // namespace matgrowth::lyapunov
