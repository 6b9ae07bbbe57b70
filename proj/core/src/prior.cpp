#include "normdyn/prior.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <string>

#include "normdyn/errors.hpp"
#include "normdyn/quadrature.hpp"

namespace normdyn {
namespace {

// Conditional means are resolved to this absolute accuracy.
constexpr double kMeanTolerance = 1e-10;

void check_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0, 1], got " + std::to_string(x));
  }
}

bool in_open(double x, double lo, double hi) { return x > lo && x < hi; }

}  // namespace

BetaPrior::BetaPrior(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(std::isfinite(alpha) && alpha > 0.0) || !(std::isfinite(beta) && beta > 0.0)) {
    throw DomainError("Beta shapes must be finite and positive, got alpha=" + std::to_string(alpha) +
                      ", beta=" + std::to_string(beta));
  }
}

std::string_view to_string(WjMode mode) {
  return mode == WjMode::exact ? "exact" : "paper-mean";
}

WjMode parse_wj_mode(std::string_view text) {
  if (text == "exact") return WjMode::exact;
  if (text == "paper-mean") return WjMode::paper_mean;
  throw DomainError("unknown wj_mode '" + std::string(text) + "' (expected exact or paper-mean)");
}

ContributionStats::ContributionStats(double w_j, double b_j, double b_s,
                                     std::optional<BetaPrior> prior)
    : w_j_(w_j),
      b_j_(b_j),
      b_s_(b_s),
      mu_j_(w_j * b_j + (1.0 - w_j) * (1.0 - b_s)),
      prior_(std::move(prior)) {}

const BetaPrior& ContributionStats::require_prior() const {
  if (!prior_) {
    throw DistributionRequiredError(
        "operation needs a Beta prior; explicit (w_j, b_j, b_s) stats carry no density");
  }
  return *prior_;
}

double beta_pdf(const BetaPrior& prior, double x) {
  check_unit(x, "x");
  return boost::math::ibeta_derivative(prior.alpha(), prior.beta(), x);
}

double beta_cdf(const BetaPrior& prior, double x) {
  check_unit(x, "x");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  return boost::math::ibeta(prior.alpha(), prior.beta(), x);
}

double beta_sf(const BetaPrior& prior, double x) {
  check_unit(x, "x");
  if (x == 0.0) return 1.0;
  if (x == 1.0) return 0.0;
  return boost::math::ibetac(prior.alpha(), prior.beta(), x);
}

double beta_mass(const BetaPrior& prior, double lo, double hi) {
  check_unit(lo, "lo");
  check_unit(hi, "hi");
  if (hi <= lo) return 0.0;
  // Difference of whichever tail is smaller keeps precision far from the bulk.
  if (beta_sf(prior, lo) < beta_cdf(prior, hi)) return beta_sf(prior, lo) - beta_sf(prior, hi);
  return beta_cdf(prior, hi) - beta_cdf(prior, lo);
}

double partial_moment(const BetaPrior& prior, double lo, double hi) {
  check_unit(lo, "lo");
  check_unit(hi, "hi");
  if (hi <= lo) return 0.0;

  const double upper_tail = beta_sf(prior, lo);
  const double lower_tail = beta_cdf(prior, hi);
  QuadratureOptions options;
  options.abs_tol = kMeanTolerance * std::max(std::min(upper_tail, lower_tail), kDegenerateMass);

  if (upper_tail < lower_tail) {
    // int x f = [-x S(x)]_lo^hi + int S
    auto tail = integrate_adaptive([&](double x) { return beta_sf(prior, x); }, lo, hi, options);
    return lo * upper_tail - hi * beta_sf(prior, hi) + tail.value;
  }
  // int x f = [x F(x)]_lo^hi - int F
  auto head = integrate_adaptive([&](double x) { return beta_cdf(prior, x); }, lo, hi, options);
  return hi * lower_tail - lo * beta_cdf(prior, lo) - head.value;
}

double conditional_mean_above(const BetaPrior& prior, double t) {
  check_unit(t, "t");
  const double mass = beta_sf(prior, t);
  if (mass < kDegenerateMass) {
    throw DegenerateError("P(c_j > " + std::to_string(t) + ") = " + std::to_string(mass) +
                          " under Beta(" + std::to_string(prior.alpha()) + ", " +
                          std::to_string(prior.beta()) + ") is below the degeneracy threshold");
  }
  return partial_moment(prior, t, 1.0) / mass;
}

double conditional_mean_below(const BetaPrior& prior, double t) {
  check_unit(t, "t");
  const double mass = beta_cdf(prior, t);
  if (mass < kDegenerateMass) {
    throw DegenerateError("P(c_j < " + std::to_string(t) + ") = " + std::to_string(mass) +
                          " under Beta(" + std::to_string(prior.alpha()) + ", " +
                          std::to_string(prior.beta()) + ") is below the degeneracy threshold");
  }
  return partial_moment(prior, 0.0, t) / mass;
}

ContributionStats derive_contribution_stats(const BetaPrior& prior, WjMode mode) {
  const double b_j = conditional_mean_above(prior, 0.5);
  const double b_s = 1.0 - conditional_mean_below(prior, 0.5);
  const double w_j = mode == WjMode::exact ? beta_sf(prior, 0.5) : prior.mean();
  return ContributionStats(w_j, b_j, b_s, prior);
}

ContributionStats stats_from_explicit(double w_j, double b_j, double b_s) {
  if (!in_open(w_j, 0.0, 1.0)) throw DomainError("w_j must lie in (0, 1), got " + std::to_string(w_j));
  if (!in_open(b_j, 0.5, 1.0)) throw DomainError("b_j must lie in (0.5, 1), got " + std::to_string(b_j));
  if (!in_open(b_s, 0.5, 1.0)) throw DomainError("b_s must lie in (0.5, 1), got " + std::to_string(b_s));
  return ContributionStats(w_j, b_j, b_s, std::nullopt);
}

}  // namespace normdyn
