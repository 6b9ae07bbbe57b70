#include "normdyn/credit.hpp"

#include <cmath>
#include <string>

#include "normdyn/errors.hpp"

namespace normdyn {

BiasParams::BiasParams(double epsilon, double chi) : epsilon_(epsilon), chi_(chi) {
  if (!(epsilon >= 0.0) || !(chi >= 0.0)) {
    throw DomainError("bias probabilities must be non-negative, got epsilon=" +
                      std::to_string(epsilon) + ", chi=" + std::to_string(chi));
  }
  if (!(epsilon + chi < 1.0)) {
    throw DomainError("epsilon + chi must be below 1, got " + std::to_string(epsilon + chi));
  }
}

void GameParams::validate() const {
  if (!(std::isfinite(c_hat) && c_hat >= 0.0)) {
    throw DomainError("c_hat must be finite and non-negative, got " + std::to_string(c_hat));
  }
}

void PopulationState::validate() const {
  if (!(p_j >= 0.0 && p_j <= 1.0 && p_s >= 0.0 && p_s <= 1.0)) {
    throw DomainError("population state must lie in [0,1]^2, got (" + std::to_string(p_j) + ", " +
                      std::to_string(p_s) + ")");
  }
}

std::string_view to_string(PayoffMode mode) {
  return mode == PayoffMode::substitution ? "substitution" : "fixed-belief";
}

PayoffMode parse_payoff_mode(std::string_view text) {
  if (text == "substitution") return PayoffMode::substitution;
  if (text == "fixed-belief") return PayoffMode::fixed_belief;
  throw DomainError("unknown payoff mode '" + std::string(text) +
                    "' (expected substitution or fixed-belief)");
}

double collaboration_probability(const PopulationState& state) {
  return 1.0 - state.p_j * (1.0 - state.p_s);
}

double posterior_junior_greater(const PopulationState& state, double w_j) {
  if (state.p_j == 1.0 && state.p_s == 0.0) return 0.0;
  const double junior_greater = collaboration_probability(state) * w_j;
  // Junior listed first although Senior did more: (I, I), or (C, I) after a coin flip.
  const double junior_lesser =
      (state.p_j * state.p_s + 0.5 * (1.0 - state.p_j) * state.p_s) * (1.0 - w_j);
  return junior_greater / (junior_greater + junior_lesser);
}

ListingProbabilities listing_probabilities(const PopulationState& state, double w_j) {
  const double pj = state.p_j;
  const double ps = state.p_s;
  return {
      w_j * (1.0 - pj * (1.0 - ps)) + (1.0 - w_j) * (pj * ps + (1.0 - pj) * ps / 2.0),
      (1.0 - w_j) * ((1.0 - pj) * (1.0 - ps) + (1.0 - pj) * ps / 2.0),
  };
}

CreditMixture bias_mixture(const BiasParams& bias) {
  const double e = bias.epsilon();
  const double x = bias.chi();
  const double norm = 1.0 - e * x;
  return {(1.0 - e) * (1.0 - x) / norm, e * (1.0 - x) / norm, (1.0 - e) * x / norm};
}

Payoffs expected_payoffs_with_belief(const PopulationState& state, const GameParams& params,
                                     double m_j) {
  const auto& st = params.stats;
  const auto [p_correct, p_first, p_matthew] = bias_mixture(params.bias);
  const auto [f_j, f_s] = listing_probabilities(state, st.w_j());
  const double value = 1.0 + params.c_hat;
  const double solo = state.p_j * (1.0 - state.p_s);

  // Junior listed first: Bayesian share, plus first-author windfall; Senior
  // collects the Matthew share whatever the order.
  const double junior_when_first = m_j * st.b_j() + (1.0 - m_j) * (1.0 - st.b_s());
  const double senior_when_second = m_j * (1.0 - st.b_j()) + (1.0 - m_j) * st.b_s();

  const double junior = f_j * value * (p_correct * junior_when_first + p_first) +
                        f_s * value * (p_correct * (1.0 - st.b_s())) + solo * st.mu_j();
  const double senior = f_j * value * (p_correct * senior_when_second + p_matthew) +
                        f_s * value * (p_correct * st.b_s() + p_first + p_matthew) +
                        solo * st.mu_s();
  return {junior, senior};
}

Payoffs expected_payoffs(const PopulationState& state, const GameParams& params) {
  return expected_payoffs_with_belief(state, params,
                                      posterior_junior_greater(state, params.stats.w_j()));
}

PureStrategyPayoffs pure_strategy_payoffs(const PopulationState& state, const GameParams& params,
                                          PayoffMode mode) {
  const PopulationState junior_i{1.0, state.p_s};
  const PopulationState junior_c{0.0, state.p_s};
  const PopulationState senior_i{state.p_j, 1.0};
  const PopulationState senior_c{state.p_j, 0.0};

  if (mode == PayoffMode::substitution) {
    return {
        expected_payoffs(junior_i, params).junior,
        expected_payoffs(junior_c, params).junior,
        expected_payoffs(senior_i, params).senior,
        expected_payoffs(senior_c, params).senior,
    };
  }
  const double m_j = posterior_junior_greater(state, params.stats.w_j());
  return {
      expected_payoffs_with_belief(junior_i, params, m_j).junior,
      expected_payoffs_with_belief(junior_c, params, m_j).junior,
      expected_payoffs_with_belief(senior_i, params, m_j).senior,
      expected_payoffs_with_belief(senior_c, params, m_j).senior,
  };
}

}  // namespace normdyn
