#pragma once

// Independent reference computations for the tests. Nothing here calls the
// quadrature, payoff, or root-finding code under test.

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

namespace normdyn::oracle {

/// CDF of Beta(2, 2): 3x^2 - 2x^3.
inline double beta22_cdf(double x) { return 3 * x * x - 2 * x * x * x; }

/// Closed form E[c | c > t] for Beta(a, b): the truncated first moment is
/// mean * P_{Beta(a+1, b)}(c > t).
inline double conditional_mean_above(double a, double b, double t) {
  const double tail = boost::math::ibetac(a, b, t);
  return a / (a + b) * boost::math::ibetac(a + 1, b, t) / tail;
}

inline double conditional_mean_below(double a, double b, double t) {
  const double head = boost::math::ibeta(a, b, t);
  return a / (a + b) * boost::math::ibeta(a + 1, b, t) / head;
}

/// Truncated moment int_lo^hi x f(x) dx in closed form.
inline double partial_moment(double a, double b, double lo, double hi) {
  return a / (a + b) * (boost::math::ibeta(a + 1, b, hi) - boost::math::ibeta(a + 1, b, lo));
}

/// Plain bisection for a sign change of f on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iters = 200) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Monte Carlo estimate of P(c <= x) for Beta(a, b) with its standard error.
struct McCdf {
  double estimate;
  double standard_error;
};

inline McCdf monte_carlo_cdf(double a, double b, double x, std::uint64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::gamma_distribution<double> ga(a, 1.0);
  std::gamma_distribution<double> gb(b, 1.0);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double u = ga(rng);
    const double v = gb(rng);
    hits += u / (u + v) <= x;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  return {p, std::sqrt(std::max(p * (1 - p), 1e-300) / static_cast<double>(n))};
}

/// Payoffs written out term by term from the first-author-bias form
/// (chi = 0) of the Model 1 credit functions.
struct OraclePayoffs {
  double junior;
  double senior;
};

inline OraclePayoffs epsilon_only_payoffs(double pj, double ps, double wj, double bj, double bs,
                                          double eps, double c_hat) {
  const double pc = 1 - pj * (1 - ps);
  double mj = 0.0;
  if (!(pj == 1.0 && ps == 0.0)) {
    mj = pc * wj / (pc * wj + (pj * ps + 0.5 * (1 - pj) * ps) * (1 - wj));
  }
  const double fj = wj * pc + (1 - wj) * (pj * ps + (1 - pj) * ps / 2);
  const double fs = (1 - wj) * ((1 - pj) * (1 - ps) + (1 - pj) * ps / 2);
  const double mu = wj * bj + (1 - wj) * (1 - bs);
  const double v = 1 + c_hat;
  const double junior = fj * ((1 - eps) * (mj * bj + (1 - mj) * (1 - bs)) + eps) * v +
                        fs * (1 - eps) * (1 - bs) * v + pj * (1 - ps) * mu;
  const double senior = fj * ((1 - eps) * (mj * (1 - bj) + (1 - mj) * bs)) * v +
                        fs * ((1 - eps) * bs + eps) * v + pj * (1 - ps) * (1 - mu);
  return {junior, senior};
}

}  // namespace normdyn::oracle
