#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "normdyn/cli/errors.hpp"
#include "normdyn/collaboration.hpp"
#include "normdyn/credit.hpp"
#include "normdyn/dynamics.hpp"
#include "normdyn/prior.hpp"

namespace normdyn::cli {

enum class ModelKind { phase, basin, basin_sweep, m2_failure, m2_compare, m2_preference, derive_prior };

std::string_view to_string(ModelKind kind);

struct ExplicitStats {
  double w_j;
  double b_j;
  double b_s;
};

/// Fully resolved run description. Defaults:
/// Beta(2, 2), epsilon = 0.1, chi = 0.05, c_hat = 1, and alpha + beta = 7
/// for Model 2 grids.
struct RunConfig {
  ModelKind model = ModelKind::phase;

  double alpha = 2.0;
  double beta = 2.0;
  std::optional<ExplicitStats> explicit_stats;

  double epsilon = 0.1;
  double chi = 0.05;
  double c_hat = 1.0;

  WjMode wj_mode = WjMode::exact;
  PayoffMode payoff_mode = PayoffMode::substitution;

  IntegratorConfig integrator;
  int resolution = 21;        ///< basin lattice
  int field_resolution = 21;  ///< phase-plane sample lattice
  int trajectory_stride = 100;
  std::vector<PopulationState> trajectory_starts{{0.05, 0.05}, {0.95, 0.95}, {0.5, 0.5}};

  std::vector<double> a_values{10, 20, 30, 40, 50, 60, 70, 80, 90};

  std::vector<Norm> norms{Norm::i_norm, Norm::c_norm};
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 20240601;

  double mu_min = 0.05;
  double mu_max = 0.95;
  int mu_steps = 19;
  double c_hat_min = 0.01;
  double c_hat_max = 0.5;
  int c_hat_steps = 19;
  double prior_sum = 7.0;

  unsigned threads = 0;
  bool svg = true;
  std::string output_prefix;  ///< empty: the model name
  std::filesystem::path out_dir = ".";

  /// Prior used by the run; throws DistributionRequiredError when the run
  /// was configured with explicit statistics.
  BetaPrior prior() const;
  ContributionStats stats() const;
  GameParams game() const;
  GridSpec grid() const;

  std::string prefix() const;

  /// Re-checks every constraint; throws ConfigValidationError.
  void validate() const;

  /// Ordered (key, value) pairs describing the resolved configuration.
  std::vector<std::pair<std::string, std::string>> describe() const;
};

/// Parses a flat `key: value` document (YAML syntax, `#` comments).
RunConfig parse_config(std::string_view text);

/// Throws IoError if the file cannot be read, otherwise as parse_config.
RunConfig load_config(const std::filesystem::path& path);

/// Renders with 12 significant digits, the precision used in every output.
std::string format_number(double value);

}  // namespace normdyn::cli
