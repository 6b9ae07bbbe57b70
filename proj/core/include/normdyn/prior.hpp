#pragma once

#include <optional>
#include <string_view>

namespace normdyn {

/// Beta(alpha, beta) distribution over Junior's contribution share c_j.
class BetaPrior {
 public:
  /// Throws DomainError unless both shapes are finite and positive.
  BetaPrior(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double mean() const noexcept { return alpha_ / (alpha_ + beta_); }

  friend bool operator==(const BetaPrior&, const BetaPrior&) = default;

 private:
  double alpha_;
  double beta_;
};

/// How w_j (probability that Junior is the larger contributor) is derived
/// from a Beta prior.
///
/// `exact` uses P(c_j > 0.5). `paper_mean` uses alpha / (alpha + beta), the
/// Beta mean, which reproduces the published parameter sweeps literally.
enum class WjMode { exact, paper_mean };

std::string_view to_string(WjMode mode);
WjMode parse_wj_mode(std::string_view text);

/// Summary statistics of the contribution distribution used by both models.
///
///   w_j   P(Junior contributes more)
///   b_j   E[c_j | Junior contributes more]
///   b_s   E[1 - c_j | Senior contributes more]
///   mu_j  w_j * b_j + (1 - w_j) * (1 - b_s)
class ContributionStats {
 public:
  double w_j() const noexcept { return w_j_; }
  double b_j() const noexcept { return b_j_; }
  double b_s() const noexcept { return b_s_; }
  double mu_j() const noexcept { return mu_j_; }
  double mu_s() const noexcept { return 1.0 - mu_j_; }

  /// Source density, absent for stats built from explicit numbers.
  const std::optional<BetaPrior>& prior() const noexcept { return prior_; }

  /// Throws DistributionRequiredError when no density is attached.
  const BetaPrior& require_prior() const;

 private:
  friend ContributionStats stats_from_explicit(double, double, double);
  friend ContributionStats derive_contribution_stats(const BetaPrior&, WjMode);

  ContributionStats(double w_j, double b_j, double b_s, std::optional<BetaPrior> prior);

  double w_j_;
  double b_j_;
  double b_s_;
  double mu_j_;
  std::optional<BetaPrior> prior_;
};

/// Probability mass below which a conditioning event counts as degenerate.
inline constexpr double kDegenerateMass = 1e-12;

double beta_pdf(const BetaPrior& prior, double x);

/// P(c_j <= x). Throws DomainError if x is outside [0, 1].
double beta_cdf(const BetaPrior& prior, double x);

/// P(c_j > x), computed without cancellation in the upper tail.
double beta_sf(const BetaPrior& prior, double x);

/// Prior mass of [lo, hi] (endpoints carry no mass).
double beta_mass(const BetaPrior& prior, double lo, double hi);

/// Truncated first moment: integral of x * f(x) over [lo, hi].
///
/// Evaluated by adaptive quadrature on the integrated-by-parts form, which
/// replaces the (possibly singular) density by the bounded CDF or survival
/// function.
double partial_moment(const BetaPrior& prior, double lo, double hi);

/// E[c_j | c_j > t]. Throws DegenerateError when P(c_j > t) < kDegenerateMass.
double conditional_mean_above(const BetaPrior& prior, double t);

/// E[c_j | c_j < t]. Throws DegenerateError when P(c_j < t) < kDegenerateMass.
double conditional_mean_below(const BetaPrior& prior, double t);

ContributionStats derive_contribution_stats(const BetaPrior& prior, WjMode mode = WjMode::exact);

/// Builds stats directly; throws DomainError unless w_j in (0,1) and
/// b_j, b_s in (0.5, 1).
ContributionStats stats_from_explicit(double w_j, double b_j, double b_s);

}  // namespace normdyn
