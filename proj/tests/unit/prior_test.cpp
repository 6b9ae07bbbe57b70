#include "normdyn/prior.hpp"

#include <gtest/gtest.h>

#include <random>

#include "normdyn/errors.hpp"
#include "oracles.hpp"

namespace normdyn {
namespace {

TEST(BetaPrior, RejectsNonPositiveShapes) {
  EXPECT_THROW(BetaPrior(0.0, 1.0), DomainError);
  EXPECT_THROW(BetaPrior(1.0, -2.0), DomainError);
  EXPECT_THROW(BetaPrior(std::nan(""), 1.0), DomainError);
  EXPECT_NO_THROW(BetaPrior(0.5, 0.5));
}

TEST(BetaCdf, Examples) {
  EXPECT_DOUBLE_EQ(beta_cdf(BetaPrior(2, 2), 0.5), 0.5);
  EXPECT_NEAR(beta_cdf(BetaPrior(2, 2), 0.35), 0.28175, 1e-14);
  EXPECT_NEAR(beta_cdf(BetaPrior(1, 1), 0.7), 0.7, 1e-14);
}

TEST(BetaCdf, EndpointsAndDomain) {
  const BetaPrior p(0.7, 3.2);
  EXPECT_EQ(beta_cdf(p, 0.0), 0.0);
  EXPECT_EQ(beta_cdf(p, 1.0), 1.0);
  EXPECT_THROW(beta_cdf(p, -0.01), DomainError);
  EXPECT_THROW(beta_cdf(p, 1.01), DomainError);
}

TEST(BetaCdf, MatchesBeta22ClosedFormAndIsMonotone) {
  const BetaPrior p(2, 2);
  double last = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    const double f = beta_cdf(p, x);
    EXPECT_NEAR(f, oracle::beta22_cdf(x), 1e-14);
    EXPECT_GE(f, last);
    last = f;
  }
}

TEST(BetaCdf, AgreesWithMonteCarloWithinFourStandardErrors) {
  const BetaPrior p(3.5, 1.7);
  const double xs[] = {0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95};
  std::uint64_t seed = 7;
  for (double x : xs) {
    const auto mc = oracle::monte_carlo_cdf(p.alpha(), p.beta(), x, 1'000'000, seed++);
    EXPECT_LT(std::abs(beta_cdf(p, x) - mc.estimate), 4 * mc.standard_error) << "x=" << x;
  }
}

TEST(ConditionalMeanAbove, Examples) {
  EXPECT_NEAR(conditional_mean_above(BetaPrior(2, 2), 0.5), 0.6875, 1e-12);
  EXPECT_NEAR(conditional_mean_above(BetaPrior(1, 1), 0.5), 0.75, 1e-12);
  EXPECT_NEAR(conditional_mean_above(BetaPrior(2, 2), 0.0), 0.5, 1e-12);
}

TEST(ConditionalMeanAbove, MatchesClosedFormAcrossShapes) {
  const double shapes[][2] = {{0.5, 0.5}, {0.5, 20}, {20, 0.5}, {3, 7}, {8, 2}, {1.3, 1.3}, {45, 55}};
  for (const auto& s : shapes) {
    const BetaPrior p(s[0], s[1]);
    for (double t : {0.1, 0.5, 0.8}) {
      if (beta_sf(p, t) < 1e-9) continue;
      EXPECT_NEAR(conditional_mean_above(p, t), oracle::conditional_mean_above(s[0], s[1], t), 1e-9)
          << s[0] << "," << s[1] << " t=" << t;
    }
  }
}

TEST(ConditionalMeanAbove, MonotoneInThresholdAndInsideRange) {
  const BetaPrior p(2.5, 4.0);
  double last = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double t = i / 100.0;
    const double m = conditional_mean_above(p, t);
    EXPECT_GE(m, last - 1e-12);
    EXPECT_GT(m, t);
    EXPECT_LT(m, 1.0);
    last = m;
  }
}

TEST(ConditionalMeanAbove, DegenerateConditionThrows) {
  // P(c > 0.5) for Beta(10, 90) is about 3e-18.
  EXPECT_THROW(conditional_mean_above(BetaPrior(10, 90), 0.5), DegenerateError);
  EXPECT_THROW(conditional_mean_below(BetaPrior(90, 10), 0.5), DegenerateError);
  EXPECT_THROW(derive_contribution_stats(BetaPrior(90, 10)), DegenerateError);
}

TEST(PartialMoment, MatchesClosedFormOnSubintervals) {
  const double shapes[][2] = {{0.5, 3}, {2, 2}, {6.65, 0.35}, {0.35, 6.65}, {20, 80}};
  for (const auto& s : shapes) {
    const BetaPrior p(s[0], s[1]);
    for (auto [lo, hi] : {std::pair{0.0, 1.0}, {0.0, 0.3}, {0.2, 0.7}, {0.6, 1.0}, {0.45, 0.55}}) {
      EXPECT_NEAR(partial_moment(p, lo, hi), oracle::partial_moment(s[0], s[1], lo, hi), 1e-10)
          << s[0] << "," << s[1] << " [" << lo << "," << hi << "]";
    }
  }
}

TEST(DeriveStats, SymmetricExamples) {
  const auto s22 = derive_contribution_stats(BetaPrior(2, 2));
  EXPECT_NEAR(s22.w_j(), 0.5, 1e-14);
  EXPECT_NEAR(s22.b_j(), 0.6875, 1e-10);
  EXPECT_NEAR(s22.b_s(), 0.6875, 1e-10);
  EXPECT_NEAR(s22.mu_j(), 0.5, 1e-10);

  const auto s11 = derive_contribution_stats(BetaPrior(1, 1));
  EXPECT_NEAR(s11.w_j(), 0.5, 1e-14);
  EXPECT_NEAR(s11.b_j(), 0.75, 1e-10);
  EXPECT_NEAR(s11.b_s(), 0.75, 1e-10);
  EXPECT_NEAR(s11.mu_j(), 0.5, 1e-10);
}

TEST(DeriveStats, PaperMeanModeUsesBetaMean) {
  const auto s = derive_contribution_stats(BetaPrior(8, 2), WjMode::paper_mean);
  EXPECT_DOUBLE_EQ(s.w_j(), 0.8);
  EXPECT_NEAR(s.mu_j(), 0.8 * s.b_j() + 0.2 * (1 - s.b_s()), 1e-15);

  const auto exact = derive_contribution_stats(BetaPrior(8, 2), WjMode::exact);
  EXPECT_NEAR(exact.w_j(), boost::math::ibetac(8.0, 2.0, 0.5), 1e-15);
  EXPECT_EQ(exact.b_j(), s.b_j());
  EXPECT_EQ(exact.b_s(), s.b_s());
}

TEST(DeriveStats, ExactModeReconstructsBetaMean) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> shape(0.5, 20.0);
  for (int i = 0; i < 50; ++i) {
    const BetaPrior p(shape(rng), shape(rng));
    const auto s = derive_contribution_stats(p);
    EXPECT_NEAR(s.mu_j(), p.mean(), 1e-8) << p.alpha() << "," << p.beta();
    EXPECT_GT(s.w_j(), 0.0);
    EXPECT_LT(s.w_j(), 1.0);
    EXPECT_GT(s.b_j(), 0.5);
    EXPECT_LT(s.b_j(), 1.0);
    EXPECT_GT(s.b_s(), 0.5);
    EXPECT_LT(s.b_s(), 1.0);
  }
}

TEST(DeriveStats, SymmetricPriorsGiveEqualConditionalShares) {
  for (double a : {0.5, 1.0, 3.0, 12.5, 40.0}) {
    const auto s = derive_contribution_stats(BetaPrior(a, a));
    EXPECT_NEAR(s.w_j(), 0.5, 1e-8);
    EXPECT_NEAR(s.b_j(), s.b_s(), 1e-8);
  }
}

TEST(DeriveStats, NarrowFamilyMemberStaysAccurate) {
  // P(c > 0.5) ~ 2e-10 under Beta(20, 80); b_j must still be resolved.
  const auto s = derive_contribution_stats(BetaPrior(20, 80));
  EXPECT_NEAR(s.b_j(), oracle::conditional_mean_above(20, 80, 0.5), 1e-9);
  EXPECT_NEAR(s.mu_j(), 0.2, 1e-8);
}

TEST(StatsFromExplicit, Examples) {
  EXPECT_DOUBLE_EQ(stats_from_explicit(0.5, 0.75, 0.75).mu_j(), 0.5);
  EXPECT_NEAR(stats_from_explicit(0.8, 0.9, 0.6).mu_j(), 0.80, 1e-15);
  EXPECT_THROW(stats_from_explicit(0.5, 0.4, 0.75), DomainError);
  EXPECT_THROW(stats_from_explicit(0.0, 0.7, 0.75), DomainError);
  EXPECT_THROW(stats_from_explicit(0.5, 0.7, 1.0), DomainError);
}

TEST(StatsFromExplicit, CarriesNoDensity) {
  const auto s = stats_from_explicit(0.5, 0.75, 0.75);
  EXPECT_FALSE(s.prior().has_value());
  EXPECT_THROW(s.require_prior(), DistributionRequiredError);
}

TEST(WjMode, ParsesBothSpellings) {
  EXPECT_EQ(parse_wj_mode("exact"), WjMode::exact);
  EXPECT_EQ(parse_wj_mode("paper-mean"), WjMode::paper_mean);
  EXPECT_EQ(to_string(WjMode::paper_mean), "paper-mean");
  EXPECT_THROW(parse_wj_mode("mean"), DomainError);
}

}  // namespace
}  // namespace normdyn
