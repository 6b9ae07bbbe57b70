#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "normdyn/interval_set.hpp"
#include "normdyn/prior.hpp"

namespace normdyn {

/// Established authorship norm.
///   c_norm: the larger contributor is listed first.
///   i_norm: Junior is listed first regardless of contribution.
enum class Norm { c_norm, i_norm };
enum class Player { junior, senior };

std::string_view to_string(Norm norm);
Norm parse_norm(std::string_view text);

struct RefusalRegions {
  IntervalSet junior;
  IntervalSet senior;
};

/// Under the I-norm a joint paper pays Junior mu_j (1 + c_hat) whatever c_j
/// is. Junior refuses where c_j > mu_j (1 + c_hat); Senior refuses where
/// 1 - c_j > (1 - mu_j)(1 + c_hat). Ties collaborate.
RefusalRegions inorm_refusal_regions(double mu_j, double c_hat);

/// C-norm refusal sets. For c_j >= 0.5 Junior is first author and is paid
/// b_j (1 + c_hat), Senior (1 - b_j)(1 + c_hat); for c_j < 0.5 Senior is
/// first and is paid b_s (1 + c_hat), Junior (1 - b_s)(1 + c_hat). Each
/// player refuses where the solo share beats the joint credit.
RefusalRegions cnorm_refusal_regions(const ContributionStats& stats, double c_hat);

RefusalRegions refusal_regions(Norm norm, const ContributionStats& stats, double c_hat);

/// Pointwise refusal predicates matching refusal_regions.
bool junior_refuses(Norm norm, const ContributionStats& stats, double c_hat, double c_j);
bool senior_refuses(Norm norm, const ContributionStats& stats, double c_hat, double c_j);

/// Prior mass of a set of contribution shares.
double prior_mass(const BetaPrior& prior, const IntervalSet& set);

struct FailureReport {
  Norm norm = Norm::c_norm;
  IntervalSet junior_refuses;
  IntervalSet senior_refuses;
  IntervalSet success;
  double failure_probability = 0.0;
  double public_good_loss = 0.0;  ///< c_hat * failure_probability
};

FailureReport failure_report(Norm norm, const BetaPrior& prior, double c_hat,
                             WjMode wj_mode = WjMode::exact);

/// Throws DistributionRequiredError when `stats` carries no Beta prior.
FailureReport failure_report(Norm norm, const ContributionStats& stats, double c_hat);

struct MonteCarloEstimate {
  double estimate;
  double standard_error;
  std::uint64_t samples;
};

/// Draws n shares from the prior with a seeded mt19937_64 and applies the
/// refusal predicates pointwise. Identical seeds give identical estimates.
MonteCarloEstimate monte_carlo_failure(Norm norm, const BetaPrior& prior, double c_hat,
                                       std::uint64_t n, std::uint64_t seed,
                                       WjMode wj_mode = WjMode::exact);

/// Expected realized credit of `player` before contributions are known:
/// joint-paper credit on the success set, solo share on the refusal sets.
double ex_ante_player_payoff(Norm norm, Player player, const BetaPrior& prior, double c_hat,
                             WjMode wj_mode = WjMode::exact);

/// Grid over (mu_j, c_hat) with priors Beta(mu_j * s, (1 - mu_j) * s).
struct GridSpec {
  std::vector<double> mu_values;
  std::vector<double> c_hat_values;
  double prior_sum = 7.0;
  WjMode wj_mode = WjMode::exact;

  void validate() const;
};

/// Norm comparison for one cell. Differences are C-norm minus I-norm, so a
/// negative value means the C-norm loses less.
struct ComparisonCell {
  double mu_j;
  double c_hat;
  std::optional<double> fail_c;
  std::optional<double> fail_i;
  std::optional<double> fail_diff;
  std::optional<double> loss_diff;
};

std::vector<ComparisonCell> norm_comparison_grid(const GridSpec& grid);

/// Payoff under the C-norm minus payoff under the I-norm, per player;
/// positive means the player prefers the C-norm.
struct PreferenceCell {
  double mu_j;
  double c_hat;
  std::optional<double> junior_pref;
  std::optional<double> senior_pref;
};

std::vector<PreferenceCell> preference_grid(const GridSpec& grid);

/// `count` evenly spaced values from lo to hi inclusive (count == 1 gives lo).
std::vector<double> linspace(double lo, double hi, int count);

}  // namespace normdyn
