#include <benchmark/benchmark.h>

#include "normdyn/collaboration.hpp"
#include "normdyn/dynamics.hpp"
#include "normdyn/prior.hpp"

using namespace normdyn;

namespace {

GameParams default_game() {
  return {derive_contribution_stats(BetaPrior(2, 2)), BiasParams(0.1, 0.05), 1.0};
}

void BM_DeriveStats(benchmark::State& state) {
  const BetaPrior prior(static_cast<double>(state.range(0)), static_cast<double>(100 - state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(derive_contribution_stats(prior));
}
BENCHMARK(BM_DeriveStats)->Arg(20)->Arg(50);

void BM_ReplicatorField(benchmark::State& state) {
  const auto params = default_game();
  const auto mode = static_cast<PayoffMode>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(replicator_field({0.3, 0.6}, params, mode));
}
BENCHMARK(BM_ReplicatorField)->Arg(0)->Arg(1);

void BM_Trajectory(benchmark::State& state) {
  const auto params = default_game();
  const IntegratorConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(integrate_outcome({0.05, 0.05}, params, cfg));
}
BENCHMARK(BM_Trajectory)->Unit(benchmark::kMillisecond);

void BM_Basin(benchmark::State& state) {
  const auto params = default_game();
  const IntegratorConfig cfg;
  const int resolution = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(basin_fractions(params, resolution, cfg));
}
BENCHMARK(BM_Basin)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_FailureReport(benchmark::State& state) {
  const auto norm = static_cast<Norm>(state.range(0));
  const BetaPrior prior(2.1, 4.9);
  for (auto _ : state) benchmark::DoNotOptimize(failure_report(norm, prior, 0.2));
}
BENCHMARK(BM_FailureReport)->Arg(0)->Arg(1);

void BM_ComparisonGrid(benchmark::State& state) {
  GridSpec grid;
  grid.mu_values = linspace(0.05, 0.95, 19);
  grid.c_hat_values = linspace(0.01, 0.5, 19);
  for (auto _ : state) benchmark::DoNotOptimize(norm_comparison_grid(grid));
}
BENCHMARK(BM_ComparisonGrid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
