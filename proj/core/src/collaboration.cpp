#include "normdyn/collaboration.hpp"

#include <cmath>
#include <random>
#include <string>

#include "normdyn/errors.hpp"

namespace normdyn {
namespace {

constexpr Interval kCaseJuniorMore{0.5, 1.0, true, true};  // c_j = 0.5 belongs here
constexpr Interval kCaseSeniorMore{0.0, 0.5, true, false};

void check_c_hat(double c_hat) {
  if (!(std::isfinite(c_hat) && c_hat >= 0.0)) {
    throw DomainError("c_hat must be finite and non-negative, got " + std::to_string(c_hat));
  }
}

// Refuse where c_j > t.
IntervalSet above(double t) { return IntervalSet({t, 1.0, false, true}); }
// Refuse where c_j < t.
IntervalSet below(double t) { return IntervalSet({0.0, t, true, false}); }

double partial_moment(const BetaPrior& prior, const IntervalSet& set) {
  double total = 0.0;
  for (const auto& part : set.intervals()) total += normdyn::partial_moment(prior, part.lo, part.hi);
  return total;
}

}  // namespace

std::string_view to_string(Norm norm) { return norm == Norm::c_norm ? "C-norm" : "I-norm"; }

Norm parse_norm(std::string_view text) {
  if (text == "C-norm" || text == "c-norm" || text == "C") return Norm::c_norm;
  if (text == "I-norm" || text == "i-norm" || text == "I") return Norm::i_norm;
  throw DomainError("unknown norm '" + std::string(text) + "' (expected C-norm or I-norm)");
}

RefusalRegions inorm_refusal_regions(double mu_j, double c_hat) {
  if (!(mu_j > 0.0 && mu_j < 1.0)) throw DomainError("mu_j must lie in (0, 1)");
  check_c_hat(c_hat);
  const double value = 1.0 + c_hat;
  return {above(mu_j * value), below(mu_j - (1.0 - mu_j) * c_hat)};
}

RefusalRegions cnorm_refusal_regions(const ContributionStats& stats, double c_hat) {
  check_c_hat(c_hat);
  const double value = 1.0 + c_hat;
  RefusalRegions regions;
  regions.junior = above(stats.b_j() * value).intersected(kCaseJuniorMore);
  regions.junior = regions.junior.united(
      above((1.0 - stats.b_s()) * value).intersected(kCaseSeniorMore));
  regions.senior = below(stats.b_j() - (1.0 - stats.b_j()) * c_hat).intersected(kCaseJuniorMore);
  regions.senior = regions.senior.united(
      below(1.0 - stats.b_s() - stats.b_s() * c_hat).intersected(kCaseSeniorMore));
  return regions;
}

RefusalRegions refusal_regions(Norm norm, const ContributionStats& stats, double c_hat) {
  return norm == Norm::i_norm ? inorm_refusal_regions(stats.mu_j(), c_hat)
                              : cnorm_refusal_regions(stats, c_hat);
}

bool junior_refuses(Norm norm, const ContributionStats& stats, double c_hat, double c_j) {
  const double value = 1.0 + c_hat;
  if (norm == Norm::i_norm) return c_j > stats.mu_j() * value;
  if (c_j >= 0.5) return c_j > stats.b_j() * value;
  return c_j > (1.0 - stats.b_s()) * value;
}

bool senior_refuses(Norm norm, const ContributionStats& stats, double c_hat, double c_j) {
  if (norm == Norm::i_norm) return c_j < stats.mu_j() - (1.0 - stats.mu_j()) * c_hat;
  if (c_j >= 0.5) return c_j < stats.b_j() - (1.0 - stats.b_j()) * c_hat;
  return c_j < 1.0 - stats.b_s() - stats.b_s() * c_hat;
}

double prior_mass(const BetaPrior& prior, const IntervalSet& set) {
  double total = 0.0;
  for (const auto& part : set.intervals()) total += beta_mass(prior, part.lo, part.hi);
  return total;
}

FailureReport failure_report(Norm norm, const ContributionStats& stats, double c_hat) {
  const BetaPrior& prior = stats.require_prior();
  auto regions = refusal_regions(norm, stats, c_hat);
  FailureReport report;
  report.norm = norm;
  report.success = regions.junior.united(regions.senior).complement();
  report.junior_refuses = std::move(regions.junior);
  report.senior_refuses = std::move(regions.senior);
  // Via the success set so that c_hat = 0 (success is a null set) gives exactly 1.
  report.failure_probability = 1.0 - prior_mass(prior, report.success);
  report.public_good_loss = c_hat * report.failure_probability;
  return report;
}

FailureReport failure_report(Norm norm, const BetaPrior& prior, double c_hat, WjMode wj_mode) {
  return failure_report(norm, derive_contribution_stats(prior, wj_mode), c_hat);
}

MonteCarloEstimate monte_carlo_failure(Norm norm, const BetaPrior& prior, double c_hat,
                                       std::uint64_t n, std::uint64_t seed, WjMode wj_mode) {
  if (n == 0) throw DomainError("Monte Carlo sample count must be at least 1");
  check_c_hat(c_hat);
  const auto stats = derive_contribution_stats(prior, wj_mode);
  std::mt19937_64 rng(seed);
  std::gamma_distribution<double> draw_a(prior.alpha(), 1.0);
  std::gamma_distribution<double> draw_b(prior.beta(), 1.0);
  std::uint64_t failures = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double x = draw_a(rng);
    const double y = draw_b(rng);
    const double c_j = x / (x + y);
    failures += junior_refuses(norm, stats, c_hat, c_j) || senior_refuses(norm, stats, c_hat, c_j);
  }
  const double p = static_cast<double>(failures) / static_cast<double>(n);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n};
}

double ex_ante_player_payoff(Norm norm, Player player, const BetaPrior& prior, double c_hat,
                             WjMode wj_mode) {
  const auto stats = derive_contribution_stats(prior, wj_mode);
  const auto report = failure_report(norm, stats, c_hat);
  const double value = 1.0 + c_hat;
  const bool junior = player == Player::junior;

  double joint = 0.0;
  if (norm == Norm::i_norm) {
    const double share = junior ? stats.mu_j() : stats.mu_s();
    joint = share * value * prior_mass(prior, report.success);
  } else {
    const double junior_first = prior_mass(prior, report.success.intersected(kCaseJuniorMore));
    const double senior_first = prior_mass(prior, report.success.intersected(kCaseSeniorMore));
    joint = junior ? value * (junior_first * stats.b_j() + senior_first * (1.0 - stats.b_s()))
                   : value * (junior_first * (1.0 - stats.b_j()) + senior_first * stats.b_s());
  }

  const IntervalSet failed = report.junior_refuses.united(report.senior_refuses);
  const double junior_solo = partial_moment(prior, failed);
  const double solo = junior ? junior_solo : prior_mass(prior, failed) - junior_solo;
  return joint + solo;
}

void GridSpec::validate() const {
  if (mu_values.empty() || c_hat_values.empty()) throw DomainError("grid axes must be non-empty");
  if (!(std::isfinite(prior_sum) && prior_sum > 0.0)) {
    throw DomainError("prior_sum must be positive");
  }
  for (double mu : mu_values) {
    if (!(mu > 0.0 && mu < 1.0)) throw DomainError("grid mu_j values must lie in (0, 1)");
  }
  for (double c : c_hat_values) check_c_hat(c);
}

std::vector<ComparisonCell> norm_comparison_grid(const GridSpec& grid) {
  grid.validate();
  std::vector<ComparisonCell> cells;
  cells.reserve(grid.mu_values.size() * grid.c_hat_values.size());
  for (double c_hat : grid.c_hat_values) {
    for (double mu : grid.mu_values) {
      ComparisonCell cell{mu, c_hat, {}, {}, {}, {}};
      try {
        const BetaPrior prior(mu * grid.prior_sum, (1.0 - mu) * grid.prior_sum);
        const auto stats = derive_contribution_stats(prior, grid.wj_mode);
        const double fail_c = failure_report(Norm::c_norm, stats, c_hat).failure_probability;
        const double fail_i = failure_report(Norm::i_norm, stats, c_hat).failure_probability;
        cell.fail_c = fail_c;
        cell.fail_i = fail_i;
        cell.fail_diff = fail_c - fail_i;
        cell.loss_diff = c_hat * fail_c - c_hat * fail_i;
      } catch (const DegenerateError&) {
        // recorded as a missing cell
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

std::vector<PreferenceCell> preference_grid(const GridSpec& grid) {
  grid.validate();
  std::vector<PreferenceCell> cells;
  cells.reserve(grid.mu_values.size() * grid.c_hat_values.size());
  for (double c_hat : grid.c_hat_values) {
    for (double mu : grid.mu_values) {
      PreferenceCell cell{mu, c_hat, {}, {}};
      try {
        const BetaPrior prior(mu * grid.prior_sum, (1.0 - mu) * grid.prior_sum);
        auto pay = [&](Norm norm, Player player) {
          return ex_ante_player_payoff(norm, player, prior, c_hat, grid.wj_mode);
        };
        cell.junior_pref = pay(Norm::c_norm, Player::junior) - pay(Norm::i_norm, Player::junior);
        cell.senior_pref = pay(Norm::c_norm, Player::senior) - pay(Norm::i_norm, Player::senior);
      } catch (const DegenerateError&) {
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw DomainError("linspace needs at least one point");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  }
  if (count > 1) out.back() = hi;
  return out;
}

}  // namespace normdyn
