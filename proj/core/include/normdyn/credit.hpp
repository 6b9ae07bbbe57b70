#pragma once

#include <string_view>

#include "normdyn/prior.hpp"

namespace normdyn {

/// Community misattribution probabilities.
///
/// epsilon: the whole paper is credited to the first-listed author.
/// chi:     the whole paper is credited to Senior (Matthew effect).
class BiasParams {
 public:
  /// Throws DomainError unless epsilon, chi >= 0 and epsilon + chi < 1.
  BiasParams(double epsilon = 0.0, double chi = 0.0);

  double epsilon() const noexcept { return epsilon_; }
  double chi() const noexcept { return chi_; }

 private:
  double epsilon_;
  double chi_;
};

struct GameParams {
  ContributionStats stats;
  BiasParams bias;
  double c_hat = 1.0;

  /// Throws DomainError if c_hat is negative or not finite.
  void validate() const;
};

/// Frequencies of I-norm play among juniors (p_j) and seniors (p_s).
struct PopulationState {
  double p_j = 0.0;
  double p_s = 0.0;

  /// Throws DomainError unless both coordinates lie in [0, 1].
  void validate() const;
  friend bool operator==(const PopulationState&, const PopulationState&) = default;
};

/// Probabilities of the three credit-attribution rules.
struct CreditMixture {
  double p_correct;  ///< Bayesian expected credit
  double p_first;    ///< everything to the first author
  double p_matthew;  ///< everything to Senior
};

struct Payoffs {
  double junior;
  double senior;
};

/// Expected payoffs of each player when committing to each pure norm.
struct PureStrategyPayoffs {
  double junior_inorm;
  double junior_cnorm;
  double senior_inorm;
  double senior_cnorm;
};

/// How the community's posterior m_j reacts when a player's strategy is
/// substituted by a pure one.
///
/// `substitution`: m_j is recomputed at the substituted state.
/// `fixed_belief`: m_j stays at the population state for all four payoffs.
enum class PayoffMode { substitution, fixed_belief };

std::string_view to_string(PayoffMode mode);
PayoffMode parse_payoff_mode(std::string_view text);

/// P(norm demands are compatible) = 1 - p_j (1 - p_s).
double collaboration_probability(const PopulationState& state);

/// Posterior that Junior contributed more, given a joint paper with Junior
/// listed first. Defined as 0 at the measure-zero state (1, 0).
double posterior_junior_greater(const PopulationState& state, double w_j);

struct ListingProbabilities {
  double junior_first;  ///< f_j
  double senior_first;  ///< f_s
};

ListingProbabilities listing_probabilities(const PopulationState& state, double w_j);

/// Throws DomainError for an invalid (epsilon, chi) pair.
CreditMixture bias_mixture(const BiasParams& bias);

Payoffs expected_payoffs(const PopulationState& state, const GameParams& params);

/// Same as expected_payoffs but with the community posterior m_j supplied
/// by the caller instead of derived from `state`.
Payoffs expected_payoffs_with_belief(const PopulationState& state, const GameParams& params,
                                     double m_j);

PureStrategyPayoffs pure_strategy_payoffs(const PopulationState& state, const GameParams& params,
                                          PayoffMode mode = PayoffMode::substitution);

}  // namespace normdyn
