#include "normdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "normdyn/errors.hpp"

namespace normdyn {
namespace {

PopulationState clamp_unit(double p_j, double p_s) {
  return {std::clamp(p_j, 0.0, 1.0), std::clamp(p_s, 0.0, 1.0)};
}

PopulationState advance(const PopulationState& x, const FieldVector& k, double h) {
  return clamp_unit(x.p_j + h * k.dp_j, x.p_s + h * k.dp_s);
}

struct Residual {
  double junior;
  double senior;
  double norm() const { return std::hypot(junior, senior); }
};

Residual payoff_gap(const PopulationState& state, const GameParams& params, PayoffMode mode) {
  const auto pay = pure_strategy_payoffs(state, params, mode);
  return {pay.junior_inorm - pay.junior_cnorm, pay.senior_inorm - pay.senior_cnorm};
}

template <typename OnStep>
Outcome run_rk4(const PopulationState& start, const GameParams& params,
                const IntegratorConfig& cfg, PayoffMode mode, OnStep&& on_step) {
  cfg.validate();
  start.validate();
  auto field = [&](const PopulationState& x) { return replicator_field(x, params, mode); };

  const auto max_steps = static_cast<long long>(std::ceil(cfg.max_time / cfg.step));
  PopulationState x = start;
  Outcome out;
  long long n = 0;
  for (;; ++n) {
    const FieldVector k1 = field(x);
    if (k1.norm() < cfg.convergence_tol) {
      out.converged = true;
      break;
    }
    if (n >= max_steps) break;
    const FieldVector k2 = field(advance(x, k1, cfg.step / 2));
    const FieldVector k3 = field(advance(x, k2, cfg.step / 2));
    const FieldVector k4 = field(advance(x, k3, cfg.step));
    x = clamp_unit(x.p_j + cfg.step / 6 * (k1.dp_j + 2 * k2.dp_j + 2 * k3.dp_j + k4.dp_j),
                   x.p_s + cfg.step / 6 * (k1.dp_s + 2 * k2.dp_s + 2 * k3.dp_s + k4.dp_s));
    on_step(n + 1, static_cast<double>(n + 1) * cfg.step, x);
  }
  out.terminal = x;
  out.time = static_cast<double>(n) * cfg.step;
  out.label = classify_terminal(x, cfg.corner_tol);
  return out;
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(step > 0.0 && max_time > 0.0 && convergence_tol > 0.0 && corner_tol > 0.0)) {
    throw DomainError("integrator settings must all be positive");
  }
  if (!(corner_tol < 0.5)) {
    throw DomainError("corner_tol must be below 0.5, got " + std::to_string(corner_tol));
  }
}

std::string_view to_string(OutcomeLabel label) {
  switch (label) {
    case OutcomeLabel::c_norm: return "C-norm";
    case OutcomeLabel::i_norm: return "I-norm";
    case OutcomeLabel::no_collaboration: return "no-collaboration";
    case OutcomeLabel::other: break;
  }
  return "other";
}

double FieldVector::norm() const { return std::hypot(dp_j, dp_s); }

FieldVector replicator_field(const PopulationState& state, const GameParams& params,
                             PayoffMode mode) {
  const auto gap = payoff_gap(state, params, mode);
  return {state.p_j * (1.0 - state.p_j) * gap.junior, state.p_s * (1.0 - state.p_s) * gap.senior};
}

OutcomeLabel classify_terminal(const PopulationState& state, double corner_tol) {
  auto near = [&](double pj, double ps) {
    return std::hypot(state.p_j - pj, state.p_s - ps) <= corner_tol;
  };
  if (near(0.0, 0.0)) return OutcomeLabel::c_norm;
  if (near(1.0, 1.0)) return OutcomeLabel::i_norm;
  if (near(1.0, 0.0)) return OutcomeLabel::no_collaboration;
  return OutcomeLabel::other;
}

Trajectory integrate_trajectory(const PopulationState& start, const GameParams& params,
                                const IntegratorConfig& cfg, PayoffMode mode, int record_stride) {
  if (record_stride < 1) throw DomainError("record_stride must be at least 1");
  Trajectory traj;
  traj.points.push_back({0.0, start});
  traj.outcome = run_rk4(start, params, cfg, mode,
                         [&](long long n, double t, const PopulationState& x) {
                           if (n % record_stride == 0) traj.points.push_back({t, x});
                         });
  if (traj.points.back().time != traj.outcome.time) {
    traj.points.push_back({traj.outcome.time, traj.outcome.terminal});
  }
  return traj;
}

Outcome integrate_outcome(const PopulationState& start, const GameParams& params,
                          const IntegratorConfig& cfg, PayoffMode mode) {
  return run_rk4(start, params, cfg, mode, [](long long, double, const PopulationState&) {});
}

std::vector<FieldSample> stream_field_grid(const GameParams& params, int resolution,
                                           PayoffMode mode) {
  if (resolution < 2) throw DomainError("stream grid resolution must be at least 2");
  std::vector<FieldSample> samples;
  samples.reserve(static_cast<std::size_t>(resolution) * resolution);
  const double spacing = 1.0 / (resolution - 1);
  for (int i = 0; i < resolution; ++i) {
    for (int k = 0; k < resolution; ++k) {
      // Pin the last lattice line to exactly 1.
      const PopulationState s{i == resolution - 1 ? 1.0 : i * spacing,
                              k == resolution - 1 ? 1.0 : k * spacing};
      samples.push_back({s, replicator_field(s, params, mode)});
    }
  }
  return samples;
}

std::optional<PopulationState> find_interior_equilibrium(const GameParams& params,
                                                         PayoffMode mode) {
  constexpr int kSeeds = 9;
  constexpr int kMaxIterations = 100;
  constexpr double kRootTol = 1e-9;
  constexpr double kEdge = 1e-9;
  constexpr double kDiff = 1e-7;
  constexpr double kInteriorMargin = 1e-6;

  auto residual = [&](const PopulationState& s) { return payoff_gap(s, params, mode); };

  for (int a = 0; a < kSeeds; ++a) {
    for (int b = 0; b < kSeeds; ++b) {
      PopulationState x{(a + 1.0) / (kSeeds + 1), (b + 1.0) / (kSeeds + 1)};
      Residual r = residual(x);
      for (int it = 0; it < kMaxIterations && r.norm() >= kRootTol * 1e-3; ++it) {
        // Central-difference Jacobian.
        const auto rjp = residual({x.p_j + kDiff, x.p_s});
        const auto rjm = residual({x.p_j - kDiff, x.p_s});
        const auto rsp = residual({x.p_j, x.p_s + kDiff});
        const auto rsm = residual({x.p_j, x.p_s - kDiff});
        const double j11 = (rjp.junior - rjm.junior) / (2 * kDiff);
        const double j12 = (rsp.junior - rsm.junior) / (2 * kDiff);
        const double j21 = (rjp.senior - rjm.senior) / (2 * kDiff);
        const double j22 = (rsp.senior - rsm.senior) / (2 * kDiff);
        const double det = j11 * j22 - j12 * j21;
        if (!std::isfinite(det) || std::abs(det) < 1e-14) break;
        const double step_j = -(j22 * r.junior - j12 * r.senior) / det;
        const double step_s = -(-j21 * r.junior + j11 * r.senior) / det;

        // Backtrack until the residual shrinks while staying strictly inside.
        double scale = 1.0;
        bool improved = false;
        for (int halving = 0; halving < 40; ++halving, scale /= 2) {
          const PopulationState trial{x.p_j + scale * step_j, x.p_s + scale * step_s};
          if (trial.p_j <= kEdge || trial.p_j >= 1 - kEdge || trial.p_s <= kEdge ||
              trial.p_s >= 1 - kEdge) {
            continue;
          }
          const Residual rt = residual(trial);
          if (rt.norm() < r.norm()) {
            x = trial;
            r = rt;
            improved = true;
            break;
          }
        }
        if (!improved) break;
      }
      if (r.norm() >= kRootTol) continue;
      // Newton can creep onto an edge rest point; those are not interior.
      if (std::min({x.p_j, 1 - x.p_j, x.p_s, 1 - x.p_s}) < kInteriorMargin) continue;

      // Reject points on a continuum of rest points (singular Jacobian).
      const auto rjp = residual({x.p_j + kDiff, x.p_s});
      const auto rjm = residual({x.p_j - kDiff, x.p_s});
      const auto rsp = residual({x.p_j, x.p_s + kDiff});
      const auto rsm = residual({x.p_j, x.p_s - kDiff});
      const double det = ((rjp.junior - rjm.junior) * (rsp.senior - rsm.senior) -
                          (rsp.junior - rsm.junior) * (rjp.senior - rjm.senior)) /
                         (4 * kDiff * kDiff);
      if (std::abs(det) < 1e-10) continue;
      return x;
    }
  }
  return std::nullopt;
}

BasinReport basin_fractions(const GameParams& params, int resolution, const IntegratorConfig& cfg,
                            PayoffMode mode, unsigned threads) {
  if (resolution < 2) throw DomainError("basin grid resolution must be at least 2");
  cfg.validate();
  params.validate();

  const std::size_t total = static_cast<std::size_t>(resolution) * resolution;
  std::vector<OutcomeLabel> labels(total, OutcomeLabel::other);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const auto i = static_cast<double>(idx / resolution);
      const auto k = static_cast<double>(idx % resolution);
      const PopulationState start{(i + 0.5) / resolution, (k + 0.5) / resolution};
      labels[idx] = integrate_outcome(start, params, cfg, mode).label;
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  if (threads <= 1) {
    work(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }

  BasinReport report;
  report.grid_resolution = resolution;
  std::size_t c = 0;
  std::size_t i = 0;
  for (auto label : labels) {
    c += label == OutcomeLabel::c_norm;
    i += label == OutcomeLabel::i_norm;
  }
  report.fraction_c = static_cast<double>(c) / total;
  report.fraction_i = static_cast<double>(i) / total;
  report.fraction_other = static_cast<double>(total - c - i) / total;
  report.labels = std::move(labels);
  return report;
}

SweepResult basin_sweep(std::span<const double> a_values, const SweepSettings& settings) {
  SweepResult result;
  for (double a : a_values) {
    if (!(a > 0.0 && a < 100.0)) {
      throw DomainError("family parameter a must lie in (0, 100), got " + std::to_string(a));
    }
    try {
      const auto stats = derive_contribution_stats(BetaPrior(a, 100.0 - a), settings.wj_mode);
      const GameParams params{stats, settings.bias, settings.c_hat};
      const auto basin = basin_fractions(params, settings.resolution, settings.integrator,
                                         settings.mode, settings.threads);
      result.rows.push_back({a, 1.0 - 2.0 * stats.mu_j(), stats.mu_j(), basin.fraction_i,
                             basin.fraction_c, basin.fraction_other});
    } catch (const DegenerateError& e) {
      result.gaps.push_back({a, e.what()});
    }
  }
  std::stable_sort(result.rows.begin(), result.rows.end(),
                   [](const SweepRow& x, const SweepRow& y) { return x.delta < y.delta; });
  return result;
}

}  // namespace normdyn
