#include "normdyn/credit.hpp"

#include <gtest/gtest.h>

#include <random>

#include "normdyn/errors.hpp"
#include "oracles.hpp"

namespace normdyn {
namespace {

GameParams symmetric(double eps = 0.0, double chi = 0.0, double c_hat = 1.0) {
  return {stats_from_explicit(0.5, 0.6875, 0.6875), BiasParams(eps, chi), c_hat};
}

TEST(BiasParams, Validation) {
  EXPECT_NO_THROW(BiasParams(0.0, 0.0));
  EXPECT_NO_THROW(BiasParams(0.6, 0.39));
  EXPECT_THROW(BiasParams(0.6, 0.5), DomainError);
  EXPECT_THROW(BiasParams(-0.1, 0.0), DomainError);
  EXPECT_THROW(BiasParams(0.0, 1.0), DomainError);
}

TEST(CollaborationProbability, Examples) {
  EXPECT_EQ(collaboration_probability({0, 0}), 1.0);
  EXPECT_EQ(collaboration_probability({1, 0}), 0.0);
  EXPECT_EQ(collaboration_probability({0.5, 0.5}), 0.75);
}

TEST(Posterior, Examples) {
  EXPECT_EQ(posterior_junior_greater({1, 0}, 0.3), 0.0);
  EXPECT_EQ(posterior_junior_greater({1, 0}, 0.9), 0.0);
  EXPECT_EQ(posterior_junior_greater({0, 0}, 0.3), 1.0);
  EXPECT_NEAR(posterior_junior_greater({0.5, 0.5}, 0.5), 0.375 / 0.5625, 1e-15);
}

TEST(Posterior, InUnitIntervalAndReducesToPriorUnderFullIdNorm) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const PopulationState s{u(rng), u(rng)};
    const double w = 0.01 + 0.98 * u(rng);
    const double m = posterior_junior_greater(s, w);
    EXPECT_GE(m, 0.0);
    EXPECT_LE(m, 1.0);
    EXPECT_NEAR(posterior_junior_greater({1.0, s.p_s}, w), w, 1e-14);
  }
}

TEST(Listing, Examples) {
  const auto cnorm = listing_probabilities({0, 0}, 0.5);
  EXPECT_EQ(cnorm.junior_first, 0.5);
  EXPECT_EQ(cnorm.senior_first, 0.5);
  const auto inorm = listing_probabilities({1, 1}, 0.5);
  EXPECT_EQ(inorm.junior_first, 1.0);
  EXPECT_EQ(inorm.senior_first, 0.0);
  const auto mid = listing_probabilities({0.5, 0.5}, 0.5);
  EXPECT_DOUBLE_EQ(mid.junior_first, 0.5625);
  EXPECT_DOUBLE_EQ(mid.senior_first, 0.1875);
}

TEST(Listing, SumsToCollaborationProbability) {
  for (int i = 0; i <= 20; ++i) {
    for (int k = 0; k <= 20; ++k) {
      const PopulationState s{i / 20.0, k / 20.0};
      for (double w : {0.1, 0.5, 0.93}) {
        const auto f = listing_probabilities(s, w);
        EXPECT_NEAR(f.junior_first + f.senior_first, collaboration_probability(s), 1e-12);
      }
    }
  }
}

TEST(BiasMixture, Examples) {
  const auto none = bias_mixture(BiasParams(0, 0));
  EXPECT_EQ(none.p_correct, 1.0);
  EXPECT_EQ(none.p_first, 0.0);
  EXPECT_EQ(none.p_matthew, 0.0);

  const auto both = bias_mixture(BiasParams(0.1, 0.05));
  EXPECT_NEAR(both.p_correct, 0.855 / 0.995, 1e-15);
  EXPECT_NEAR(both.p_correct, 0.859296, 1e-6);
  EXPECT_NEAR(both.p_first, 0.095477, 1e-6);
  EXPECT_NEAR(both.p_matthew, 0.045226, 1e-6);

  const auto first_only = bias_mixture(BiasParams(0.1, 0.0));
  EXPECT_DOUBLE_EQ(first_only.p_correct, 0.9);
  EXPECT_DOUBLE_EQ(first_only.p_first, 0.1);
  EXPECT_EQ(first_only.p_matthew, 0.0);
}

TEST(BiasMixture, SumsToOne) {
  for (int i = 0; i < 20; ++i) {
    for (int k = 0; i + k < 20; ++k) {
      const auto m = bias_mixture(BiasParams(i / 20.0, k / 20.0));
      EXPECT_NEAR(m.p_correct + m.p_first + m.p_matthew, 1.0, 1e-12);
      EXPECT_GE(m.p_first, 0.0);
      EXPECT_GE(m.p_matthew, 0.0);
    }
  }
}

TEST(ExpectedPayoffs, Examples) {
  const auto p = expected_payoffs({0, 0}, symmetric(0, 0, 1));
  EXPECT_NEAR(p.junior, 1.0, 1e-14);
  EXPECT_NEAR(p.senior, 1.0, 1e-14);

  const GameParams skewed{stats_from_explicit(0.8, 0.9, 0.6), BiasParams(0.1, 0.05), 0.7};
  const auto solo = expected_payoffs({1, 0}, skewed);
  EXPECT_DOUBLE_EQ(solo.junior, skewed.stats.mu_j());
  EXPECT_DOUBLE_EQ(solo.senior, skewed.stats.mu_s());

  const auto inorm = expected_payoffs({1, 1}, symmetric(0, 0, 1));
  EXPECT_NEAR(inorm.junior, 1.0, 1e-14);
  EXPECT_NEAR(inorm.senior, 1.0, 1e-14);
}

TEST(ExpectedPayoffs, MatchFirstAuthorBiasFormulasWhenChiIsZero) {
  const auto stats = stats_from_explicit(0.63, 0.71, 0.82);
  for (double eps : {0.0, 0.1, 0.4}) {
    const GameParams params{stats, BiasParams(eps, 0.0), 0.8};
    for (int i = 0; i <= 10; ++i) {
      for (int k = 0; k <= 10; ++k) {
        const double pj = i / 10.0;
        const double ps = k / 10.0;
        const auto got = expected_payoffs({pj, ps}, params);
        const auto want = oracle::epsilon_only_payoffs(pj, ps, 0.63, 0.71, 0.82, eps, 0.8);
        EXPECT_NEAR(got.junior, want.junior, 1e-14);
        EXPECT_NEAR(got.senior, want.senior, 1e-14);
      }
    }
  }
}

TEST(ExpectedPayoffs, ConserveTotalCredit) {
  const GameParams sets[] = {
      symmetric(0.1, 0.05, 1.0),
      {stats_from_explicit(0.8, 0.9, 0.6), BiasParams(0.3, 0.2), 0.25},
      {stats_from_explicit(0.2, 0.55, 0.95), BiasParams(0.0, 0.5), 3.0},
  };
  for (const auto& params : sets) {
    for (int i = 0; i <= 20; ++i) {
      for (int k = 0; k <= 20; ++k) {
        const PopulationState s{i / 20.0, k / 20.0};
        const auto pay = expected_payoffs(s, params);
        const double pc = collaboration_probability(s);
        EXPECT_NEAR(pay.junior + pay.senior, pc * (1 + params.c_hat) + (1 - pc), 1e-10);
      }
    }
  }
}

TEST(ExpectedPayoffs, ExAnteEquivalenceOfPureNorms) {
  const auto stats = stats_from_explicit(0.37, 0.74, 0.66);
  const GameParams params{stats, BiasParams(0, 0), 1.3};
  // Both pure-norm states guarantee collaboration, so the credit per paper
  // is the payoff divided by the paper value.
  EXPECT_NEAR(expected_payoffs({0, 0}, params).junior / 2.3, stats.mu_j(), 1e-14);
  EXPECT_NEAR(expected_payoffs({1, 1}, params).junior / 2.3, stats.mu_j(), 1e-14);
}

TEST(ExpectedPayoffs, ComparativeStaticsWithoutBias) {
  const double h = 1e-5;
  for (double c_hat : {0.1, 1.0}) {
    const GameParams params{stats_from_explicit(0.44, 0.68, 0.71), BiasParams(0, 0), c_hat};
    for (int i = 1; i < 10; ++i) {
      for (int k = 1; k < 10; ++k) {
        const double pj = i / 10.0;
        const double ps = k / 10.0;
        const double dj = (expected_payoffs({pj + h, ps}, params).junior -
                           expected_payoffs({pj - h, ps}, params).junior) / (2 * h);
        const double ds = (expected_payoffs({pj, ps + h}, params).senior -
                           expected_payoffs({pj, ps - h}, params).senior) / (2 * h);
        EXPECT_LT(dj, 0.0) << pj << "," << ps;
        EXPECT_GT(ds, 0.0) << pj << "," << ps;
      }
    }
  }
}

TEST(PureStrategyPayoffs, IndifferenceOnGuaranteedCollaborationEdges) {
  const auto params = symmetric(0, 0, 1);
  const auto junior_side = pure_strategy_payoffs({0.5, 1.0}, params);
  EXPECT_NEAR(junior_side.junior_inorm, junior_side.junior_cnorm, 1e-14);
  const auto senior_side = pure_strategy_payoffs({0.0, 0.5}, params);
  EXPECT_NEAR(senior_side.senior_inorm, senior_side.senior_cnorm, 1e-14);
}

TEST(PureStrategyPayoffs, InteriorSigns) {
  const auto pay = pure_strategy_payoffs({0.5, 0.5}, symmetric(0, 0, 1), PayoffMode::substitution);
  EXPECT_LT(pay.junior_inorm, pay.junior_cnorm);
  EXPECT_GT(pay.senior_inorm, pay.senior_cnorm);
}

TEST(PureStrategyPayoffs, FixedBeliefHoldsPosteriorAtPopulationState) {
  const GameParams params{stats_from_explicit(0.6, 0.7, 0.8), BiasParams(0.1, 0.05), 1.0};
  const PopulationState s{0.3, 0.6};
  const double m = posterior_junior_greater(s, 0.6);
  const auto pay = pure_strategy_payoffs(s, params, PayoffMode::fixed_belief);
  EXPECT_DOUBLE_EQ(pay.junior_inorm, expected_payoffs_with_belief({1.0, 0.6}, params, m).junior);
  EXPECT_DOUBLE_EQ(pay.junior_cnorm, expected_payoffs_with_belief({0.0, 0.6}, params, m).junior);
  EXPECT_DOUBLE_EQ(pay.senior_inorm, expected_payoffs_with_belief({0.3, 1.0}, params, m).senior);
  EXPECT_DOUBLE_EQ(pay.senior_cnorm, expected_payoffs_with_belief({0.3, 0.0}, params, m).senior);

  const auto sub = pure_strategy_payoffs(s, params, PayoffMode::substitution);
  EXPECT_NE(sub.junior_cnorm, pay.junior_cnorm);
}

TEST(PayoffMode, Parsing) {
  EXPECT_EQ(parse_payoff_mode("substitution"), PayoffMode::substitution);
  EXPECT_EQ(parse_payoff_mode("fixed-belief"), PayoffMode::fixed_belief);
  EXPECT_THROW(parse_payoff_mode("fixed"), DomainError);
}

}  // namespace
}  // namespace normdyn
