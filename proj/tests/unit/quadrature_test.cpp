#include "normdyn/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace normdyn {
namespace {

TEST(Quadrature, IntegratesPolynomialsExactly) {
  // The Kronrod rule is exact through degree 22.
  const auto r = integrate_adaptive([](double x) { return 7 * std::pow(x, 6) - 3 * x * x + 1; }, -1.0, 2.0);
  EXPECT_NEAR(r.value, (128.0 + 1.0) - (8.0 + 1.0) + 3.0, 1e-12);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.intervals, 1);
}

TEST(Quadrature, ResolvesIntegrableEndpointSingularity) {
  // int_0^1 x^{-1/2} dx = 2
  QuadratureOptions opt;
  opt.abs_tol = 1e-9;
  opt.max_intervals = 2000;
  const auto r = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
  EXPECT_NEAR(r.value, 2.0, 1e-8);
}

TEST(Quadrature, OscillatoryIntegrand) {
  const auto r = integrate_adaptive([](double x) { return std::sin(20 * x); }, 0.0, M_PI);
  EXPECT_NEAR(r.value, (1 - std::cos(20 * M_PI)) / 20, 1e-10);
}

TEST(Quadrature, EmptyIntervalIsZero) {
  const auto r = integrate_adaptive([](double) { return 1.0; }, 0.3, 0.3);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_TRUE(r.converged);
}

TEST(Quadrature, ReportsBudgetExhaustion) {
  QuadratureOptions opt;
  opt.abs_tol = 1e-15;
  opt.max_intervals = 3;
  const auto r = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
  EXPECT_FALSE(r.converged);
}

}  // namespace
}  // namespace normdyn
