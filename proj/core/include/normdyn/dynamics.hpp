#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normdyn/credit.hpp"
#include "normdyn/prior.hpp"

namespace normdyn {

struct IntegratorConfig {
  double step = 0.01;              ///< RK4 step
  double max_time = 2000.0;
  double convergence_tol = 1e-7;   ///< stop once the field norm falls below this
  double corner_tol = 1e-3;        ///< radius for classifying terminal states

  /// Throws DomainError unless all fields are positive and corner_tol < 0.5.
  void validate() const;
};

enum class OutcomeLabel { c_norm, i_norm, no_collaboration, other };

std::string_view to_string(OutcomeLabel label);

struct Outcome {
  OutcomeLabel label = OutcomeLabel::other;
  PopulationState terminal;
  double time = 0.0;
  bool converged = false;
};

struct FieldVector {
  double dp_j = 0.0;
  double dp_s = 0.0;

  double norm() const;
};

struct TrajectoryPoint {
  double time;
  PopulationState state;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  Outcome outcome;
};

struct FieldSample {
  PopulationState state;
  FieldVector field;
};

struct BasinReport {
  int grid_resolution = 0;
  double fraction_c = 0.0;
  double fraction_i = 0.0;
  double fraction_other = 0.0;
  /// Outcome per start point, row-major with p_j as the slow index.
  std::vector<OutcomeLabel> labels;
};

/// Two-population replicator field:
///   dp_j = p_j (1 - p_j) (pi_j(I) - pi_j(C)),  dp_s likewise for Senior.
FieldVector replicator_field(const PopulationState& state, const GameParams& params,
                             PayoffMode mode = PayoffMode::substitution);

OutcomeLabel classify_terminal(const PopulationState& state, double corner_tol);

/// Fixed-step RK4 from `start`, clamping every stage to the unit square.
///
/// Records every `record_stride`-th step plus the final state. Hitting
/// max_time is not an error; the outcome then carries converged == false.
Trajectory integrate_trajectory(const PopulationState& start, const GameParams& params,
                                const IntegratorConfig& cfg,
                                PayoffMode mode = PayoffMode::substitution, int record_stride = 1);

/// integrate_trajectory without storing the path.
Outcome integrate_outcome(const PopulationState& start, const GameParams& params,
                          const IntegratorConfig& cfg, PayoffMode mode = PayoffMode::substitution);

/// Field on the uniform resolution x resolution lattice over [0,1]^2
/// (p_j slow index). Throws DomainError if resolution < 2.
std::vector<FieldSample> stream_field_grid(const GameParams& params, int resolution,
                                           PayoffMode mode = PayoffMode::substitution);

/// Isolated interior root of the payoff-difference system, if one exists.
///
/// Damped Newton from a 9x9 seed lattice; a candidate is accepted when the
/// residual is below 1e-9 and the Jacobian is nonsingular there. Without
/// bias (epsilon = chi = 0) the rest points form continua on the edges
/// p_j = 0 and p_s = 1 instead, and nothing is returned.
std::optional<PopulationState> find_interior_equilibrium(
    const GameParams& params, PayoffMode mode = PayoffMode::substitution);

/// Integrates from the cell midpoints ((i + 0.5)/R, (k + 0.5)/R) and tallies
/// terminal outcomes; no-collaboration outcomes count towards fraction_other.
///
/// `threads` == 0 picks the hardware concurrency. Results do not depend on
/// the thread count.
BasinReport basin_fractions(const GameParams& params, int resolution, const IntegratorConfig& cfg,
                            PayoffMode mode = PayoffMode::substitution, unsigned threads = 0);

struct SweepRow {
  double a = 0.0;
  double delta = 0.0;  ///< 1 - 2 mu_j
  double mu_j = 0.0;
  double fraction_i = 0.0;
  double fraction_c = 0.0;
  double fraction_other = 0.0;
};

struct SweepGap {
  double a;
  std::string reason;
};

struct SweepResult {
  std::vector<SweepRow> rows;  ///< ordered by delta
  std::vector<SweepGap> gaps;  ///< family members whose prior was degenerate
};

struct SweepSettings {
  BiasParams bias;
  double c_hat = 1.0;
  int resolution = 21;
  IntegratorConfig integrator;
  PayoffMode mode = PayoffMode::substitution;
  WjMode wj_mode = WjMode::exact;
  unsigned threads = 0;
};

/// Basin fractions over the family Beta(a, 100 - a).
SweepResult basin_sweep(std::span<const double> a_values, const SweepSettings& settings);

}  // namespace normdyn
