#include "normdyn/cli/runner.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "normdyn/cli/result_table.hpp"
#include "normdyn/cli/svg.hpp"
#include "normdyn/collaboration.hpp"
#include "normdyn/dynamics.hpp"
#include "normdyn/errors.hpp"

namespace normdyn::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double label_code(OutcomeLabel label) {
  switch (label) {
    case OutcomeLabel::c_norm: return 0;
    case OutcomeLabel::i_norm: return 1;
    case OutcomeLabel::no_collaboration: return 2;
    case OutcomeLabel::other: break;
  }
  return 3;
}

constexpr const char* kLabelLegend = "0=C-norm 1=I-norm 2=no-collaboration 3=other";
constexpr const char* kNormLegend = "0=C-norm 1=I-norm";

double norm_code(Norm norm) { return norm == Norm::c_norm ? 0 : 1; }

// splitmix64 finaliser; gives each stream index its own generator seed.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double or_nan(const std::optional<double>& v) { return v.value_or(kNaN); }

class Emitter {
 public:
  explicit Emitter(const RunConfig& config) : config_(config) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + config.out_dir.string() + ": " + ec.message());
    summary_["model"] = std::string(to_string(config.model));
    summary_["version"] = kArtifactVersion;
    nlohmann::json cfg = nlohmann::json::object();
    for (const auto& [key, value] : config.describe()) cfg[key] = value;
    summary_["config"] = cfg;
    summary_["tables"] = nlohmann::json::array();
  }

  ResultTable table(const std::string& suffix, std::vector<std::string> columns) const {
    ResultTable t;
    t.name = config_.prefix() + (suffix.empty() ? "" : "_" + suffix);
    t.columns = std::move(columns);
    t.metadata = config_.describe();
    return t;
  }

  void csv(const ResultTable& t) {
    const auto path = config_.out_dir / (t.name + ".csv");
    emit_csv(t, path);
    result_.files.push_back(path);
    summary_["tables"].push_back(to_json(t));
  }

  void svg(SvgKind kind, const ResultTable& t, const std::string& suffix, const SvgOptions& options) {
    if (!config_.svg) return;
    const auto path = config_.out_dir / (config_.prefix() + "_" + suffix + ".svg");
    emit_svg(kind, t, path, options);
    result_.files.push_back(path);
  }

  nlohmann::json& summary() { return summary_["summary"]; }

  RunResult finish() {
    const auto path = config_.out_dir / (config_.prefix() + ".json");
    emit_json(summary_, path);
    result_.files.push_back(path);
    return std::move(result_);
  }

 private:
  const RunConfig& config_;
  nlohmann::json summary_;
  RunResult result_;
};

void run_derive_prior(const RunConfig& config, Emitter& emit) {
  const auto stats = config.stats();
  auto t = emit.table("", {"alpha", "beta", "w_j", "b_j", "b_s", "mu_j", "delta"});
  const double alpha = config.explicit_stats ? kNaN : config.alpha;
  const double beta = config.explicit_stats ? kNaN : config.beta;
  t.add_row({alpha, beta, stats.w_j(), stats.b_j(), stats.b_s(), stats.mu_j(), 1.0 - 2.0 * stats.mu_j()});
  emit.csv(t);
}

void run_phase(const RunConfig& config, Emitter& emit) {
  const auto params = config.game();

  auto field = emit.table("field", {"p_j", "p_s", "dp_j", "dp_s"});
  for (const auto& s : stream_field_grid(params, config.field_resolution, config.payoff_mode)) {
    field.add_row({s.state.p_j, s.state.p_s, s.field.dp_j, s.field.dp_s});
  }
  emit.csv(field);
  emit.svg(SvgKind::vector_field, field, "field", {.title = "Replicator field"});

  auto paths = emit.table("trajectories", {"start", "time", "p_j", "p_s"});
  auto outcomes = emit.table("outcomes", {"start", "p_j0", "p_s0", "label", "p_j", "p_s", "time", "converged"});
  outcomes.metadata.emplace_back("label_codes", kLabelLegend);
  for (std::size_t i = 0; i < config.trajectory_starts.size(); ++i) {
    const auto& start = config.trajectory_starts[i];
    const auto traj = integrate_trajectory(start, params, config.integrator, config.payoff_mode,
                                           config.trajectory_stride);
    for (const auto& p : traj.points) {
      paths.add_row({static_cast<double>(i), p.time, p.state.p_j, p.state.p_s});
    }
    const auto& o = traj.outcome;
    outcomes.add_row({static_cast<double>(i), start.p_j, start.p_s, label_code(o.label),
                      o.terminal.p_j, o.terminal.p_s, o.time, o.converged ? 1.0 : 0.0});
  }
  emit.csv(paths);
  emit.csv(outcomes);

  auto eq = emit.table("equilibrium", {"p_j", "p_s"});
  if (const auto root = find_interior_equilibrium(params, config.payoff_mode)) {
    eq.add_row({root->p_j, root->p_s});
  }
  emit.csv(eq);
}

void run_basin(const RunConfig& config, Emitter& emit) {
  const auto report = basin_fractions(config.game(), config.resolution, config.integrator,
                                      config.payoff_mode, config.threads);
  auto t = emit.table("", {"resolution", "fraction_I", "fraction_C", "fraction_other"});
  t.add_row({static_cast<double>(report.grid_resolution), report.fraction_i, report.fraction_c,
             report.fraction_other});
  emit.csv(t);

  auto labels = emit.table("labels", {"p_j", "p_s", "label"});
  labels.metadata.emplace_back("label_codes", kLabelLegend);
  const int r = report.grid_resolution;
  for (std::size_t idx = 0; idx < report.labels.size(); ++idx) {
    labels.add_row({(static_cast<double>(idx / r) + 0.5) / r, (static_cast<double>(idx % r) + 0.5) / r,
                    label_code(report.labels[idx])});
  }
  emit.csv(labels);
  emit.svg(SvgKind::heatmap, labels, "labels",
           {.title = "Basin outcome by start state", .x = "p_j", .y = "p_s", .value = "label",
            .palette = Palette::categorical});
}

void run_basin_sweep(const RunConfig& config, Emitter& emit) {
  SweepSettings settings{BiasParams(config.epsilon, config.chi), config.c_hat, config.resolution,
                         config.integrator, config.payoff_mode, config.wj_mode, config.threads};
  const auto sweep = basin_sweep(config.a_values, settings);

  auto t = emit.table("", {"a", "delta", "fraction_I", "fraction_C", "fraction_other"});
  for (const auto& row : sweep.rows) {
    t.add_row({row.a, row.delta, row.fraction_i, row.fraction_c, row.fraction_other});
  }
  nlohmann::json gaps = nlohmann::json::array();
  for (const auto& gap : sweep.gaps) {
    t.metadata.emplace_back("gap_a_" + format_number(gap.a), gap.reason);
    gaps.push_back({{"a", gap.a}, {"reason", gap.reason}});
  }
  emit.summary()["gaps"] = gaps;
  emit.csv(t);
  emit.svg(SvgKind::line, t, "basins",
           {.title = "Basin size against delta = 1 - 2 mu_j", .x = "delta", .y = "basin fraction",
            .series = {"fraction_I", "fraction_C"}});
}

void run_m2_failure(const RunConfig& config, Emitter& emit) {
  const auto prior = config.prior();
  auto t = emit.table("", {"norm", "failure_probability", "public_good_loss", "mc_estimate",
                           "mc_standard_error"});
  t.metadata.emplace_back("norm_codes", kNormLegend);
  auto intervals = emit.table("intervals", {"band", "kind", "lo", "hi", "lo_closed", "hi_closed"});
  intervals.metadata.emplace_back("norm_codes", kNormLegend);
  intervals.metadata.emplace_back("kind_codes", "0=success 1=junior refuses 2=senior refuses");

  for (const auto norm : config.norms) {
    const auto report = failure_report(norm, prior, config.c_hat, config.wj_mode);
    double mc = kNaN;
    double se = kNaN;
    if (config.mc_samples > 0) {
      const auto est = monte_carlo_failure(norm, prior, config.c_hat, config.mc_samples,
                                           stream_seed(config.seed, static_cast<std::uint64_t>(norm_code(norm))),
                                           config.wj_mode);
      mc = est.estimate;
      se = est.standard_error;
    }
    t.add_row({norm_code(norm), report.failure_probability, report.public_good_loss, mc, se});

    auto dump = [&](const IntervalSet& set, double kind) {
      for (const auto& part : set.intervals()) {
        intervals.add_row({norm_code(norm), kind, part.lo, part.hi, part.lo_closed ? 1.0 : 0.0,
                           part.hi_closed ? 1.0 : 0.0});
      }
    };
    dump(report.success, 0);
    dump(report.junior_refuses, 1);
    dump(report.senior_refuses, 2);
  }
  emit.csv(t);
  emit.csv(intervals);
  emit.svg(SvgKind::interval_diagram, intervals, "intervals",
           {.title = "Refusal regions (blue: junior refuses, red: senior refuses)"});
}

void run_m2_compare(const RunConfig& config, Emitter& emit) {
  auto t = emit.table("", {"mu_j", "c_hat", "fail_C", "fail_I", "fail_diff", "loss_diff"});
  t.metadata.emplace_back("sign_convention", "diff = C-norm minus I-norm; negative means the C-norm does better");
  for (const auto& cell : norm_comparison_grid(config.grid())) {
    t.add_row({cell.mu_j, cell.c_hat, or_nan(cell.fail_c), or_nan(cell.fail_i), or_nan(cell.fail_diff),
               or_nan(cell.loss_diff)});
  }
  emit.csv(t);
  const SvgOptions base{.x = "mu_j", .y = "c_hat"};
  auto with = [&](std::string title, std::string value, Palette palette) {
    SvgOptions o = base;
    o.title = std::move(title);
    o.value = std::move(value);
    o.palette = palette;
    return o;
  };
  emit.svg(SvgKind::heatmap, t, "fail_C", with("Failure probability, C-norm", "fail_C", Palette::sequential));
  emit.svg(SvgKind::heatmap, t, "fail_I", with("Failure probability, I-norm", "fail_I", Palette::sequential));
  emit.svg(SvgKind::heatmap, t, "fail_diff",
           with("Failure probability, C-norm minus I-norm", "fail_diff", Palette::diverging));
  emit.svg(SvgKind::heatmap, t, "loss_diff",
           with("Public-good loss, C-norm minus I-norm", "loss_diff", Palette::diverging));
}

void run_m2_preference(const RunConfig& config, Emitter& emit) {
  auto t = emit.table("", {"mu_j", "c_hat", "junior_pref", "senior_pref"});
  t.metadata.emplace_back("sign_convention", "pref = payoff under C-norm minus payoff under I-norm");
  for (const auto& cell : preference_grid(config.grid())) {
    t.add_row({cell.mu_j, cell.c_hat, or_nan(cell.junior_pref), or_nan(cell.senior_pref)});
  }
  emit.csv(t);
  emit.svg(SvgKind::heatmap, t, "junior",
           {.title = "Junior: C-norm minus I-norm payoff", .x = "mu_j", .y = "c_hat", .value = "junior_pref"});
  emit.svg(SvgKind::heatmap, t, "senior",
           {.title = "Senior: C-norm minus I-norm payoff", .x = "mu_j", .y = "c_hat", .value = "senior_pref"});
}

}  // namespace

RunResult run_command(const RunConfig& config) {
  config.validate();
  Emitter emit(config);
  switch (config.model) {
    case ModelKind::derive_prior: run_derive_prior(config, emit); break;
    case ModelKind::phase: run_phase(config, emit); break;
    case ModelKind::basin: run_basin(config, emit); break;
    case ModelKind::basin_sweep: run_basin_sweep(config, emit); break;
    case ModelKind::m2_failure: run_m2_failure(config, emit); break;
    case ModelKind::m2_compare: run_m2_compare(config, emit); break;
    case ModelKind::m2_preference: run_m2_preference(config, emit); break;
  }
  return emit.finish();
}

ExitCode execute(const Invocation& invocation, std::ostream& out, std::ostream& err) {
  try {
    auto config = load_config(invocation.config_path);
    if (invocation.out_dir) config.out_dir = *invocation.out_dir;
    if (invocation.seed) config.seed = *invocation.seed;
    const auto result = run_command(config);
    for (const auto& file : result.files) out << file.string() << '\n';
    return ExitCode::ok;
  } catch (const ConfigParseError& e) {
    err << "config parse error: " << e.what() << '\n';
    return ExitCode::config_parse;
  } catch (const ConfigValidationError& e) {
    err << "config validation error: " << e.what() << '\n';
    return ExitCode::config_validation;
  } catch (const DomainError& e) {
    err << "config validation error: " << e.what() << '\n';
    return ExitCode::config_validation;
  } catch (const DistributionRequiredError& e) {
    err << "config validation error: " << e.what() << '\n';
    return ExitCode::config_validation;
  } catch (const DegenerateError& e) {
    err << "numeric degeneracy: " << e.what() << '\n';
    return ExitCode::numeric;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return ExitCode::io;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return ExitCode::internal;
  }
}

}  // namespace normdyn::cli
