#include "normdyn/cli/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "normdyn/errors.hpp"

namespace normdyn::cli {
namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out + "]";
}

ModelKind parse_model(const std::string& text) {
  static const std::map<std::string, ModelKind, std::less<>> kModels = {
      {"phase", ModelKind::phase},
      {"basin", ModelKind::basin},
      {"basin-sweep", ModelKind::basin_sweep},
      {"m2-failure", ModelKind::m2_failure},
      {"m2-compare", ModelKind::m2_compare},
      {"m2-preference", ModelKind::m2_preference},
      {"derive-prior", ModelKind::derive_prior},
  };
  const auto it = kModels.find(text);
  if (it == kModels.end()) {
    throw ConfigValidationError("model", "unknown model '" + text + "'");
  }
  return it->second;
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) {
    throw ConfigValidationError(key, "expected a scalar value (line " +
                                         std::to_string(node.Mark().line + 1) + ")");
  }
  try {
    return node.as<T>();
  } catch (const YAML::BadConversion&) {
    throw ConfigValidationError(key, "cannot read '" + node.Scalar() + "' (line " +
                                         std::to_string(node.Mark().line + 1) + ")");
  }
}

std::vector<double> number_list(const YAML::Node& node, const std::string& key) {
  if (!node.IsSequence()) throw ConfigValidationError(key, "expected a list of numbers");
  std::vector<double> out;
  for (const auto& item : node) out.push_back(scalar<double>(item, key));
  return out;
}

// Applies `fn` and turns a domain error from the model code into a
// validation error naming `field`.
template <typename Fn>
void check(const std::string& field, Fn&& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    throw ConfigValidationError(field, e.what());
  } catch (const DistributionRequiredError& e) {
    throw ConfigValidationError(field, e.what());
  }
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::phase: return "phase";
    case ModelKind::basin: return "basin";
    case ModelKind::basin_sweep: return "basin-sweep";
    case ModelKind::m2_failure: return "m2-failure";
    case ModelKind::m2_compare: return "m2-compare";
    case ModelKind::m2_preference: return "m2-preference";
    case ModelKind::derive_prior: break;
  }
  return "derive-prior";
}

std::string format_number(double value) {
  if (std::isnan(value)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

BetaPrior RunConfig::prior() const {
  if (explicit_stats) {
    throw DistributionRequiredError("this run was configured with explicit w_j/b_j/b_s");
  }
  return BetaPrior(alpha, beta);
}

ContributionStats RunConfig::stats() const {
  if (explicit_stats) {
    return stats_from_explicit(explicit_stats->w_j, explicit_stats->b_j, explicit_stats->b_s);
  }
  return derive_contribution_stats(prior(), wj_mode);
}

GameParams RunConfig::game() const { return {stats(), BiasParams(epsilon, chi), c_hat}; }

GridSpec RunConfig::grid() const {
  return {linspace(mu_min, mu_max, mu_steps), linspace(c_hat_min, c_hat_max, c_hat_steps),
          prior_sum, wj_mode};
}

std::string RunConfig::prefix() const {
  return output_prefix.empty() ? std::string(to_string(model)) : output_prefix;
}

void RunConfig::validate() const {
  if (explicit_stats) {
    check("w_j", [&] { stats_from_explicit(explicit_stats->w_j, explicit_stats->b_j, explicit_stats->b_s); });
  } else {
    if (!(std::isfinite(alpha) && alpha > 0.0)) throw ConfigValidationError("alpha", "must be positive");
    if (!(std::isfinite(beta) && beta > 0.0)) throw ConfigValidationError("beta", "must be positive");
  }
  check("epsilon/chi", [&] { BiasParams(epsilon, chi); });
  if (!(std::isfinite(c_hat) && c_hat >= 0.0)) {
    throw ConfigValidationError("c_hat", "must be finite and non-negative");
  }
  check("integrator", [&] { integrator.validate(); });
  if (resolution < 2) throw ConfigValidationError("resolution", "must be at least 2");
  if (field_resolution < 2) throw ConfigValidationError("field_resolution", "must be at least 2");
  if (trajectory_stride < 1) throw ConfigValidationError("trajectory_stride", "must be at least 1");
  for (const auto& s : trajectory_starts) {
    if (!(s.p_j > 0.0 && s.p_j < 1.0 && s.p_s > 0.0 && s.p_s < 1.0)) {
      throw ConfigValidationError("trajectory_starts", "starts must lie in the open unit square");
    }
  }
  for (double a : a_values) {
    if (!(a > 0.0 && a < 100.0)) throw ConfigValidationError("a_values", "each a must lie in (0, 100)");
  }
  if (model == ModelKind::basin_sweep && a_values.empty()) {
    throw ConfigValidationError("a_values", "must not be empty");
  }
  if (norms.empty()) throw ConfigValidationError("norm", "no norm selected");
  if (mu_steps < 1) throw ConfigValidationError("mu_steps", "must be at least 1");
  if (c_hat_steps < 1) throw ConfigValidationError("c_hat_steps", "must be at least 1");
  if (!(mu_min > 0.0 && mu_max < 1.0 && mu_min <= mu_max)) {
    throw ConfigValidationError("mu_min/mu_max", "need 0 < mu_min <= mu_max < 1");
  }
  if (!(c_hat_min >= 0.0 && c_hat_min <= c_hat_max && std::isfinite(c_hat_max))) {
    throw ConfigValidationError("c_hat_min/c_hat_max", "need 0 <= c_hat_min <= c_hat_max");
  }
  if (!(std::isfinite(prior_sum) && prior_sum > 0.0)) {
    throw ConfigValidationError("prior_sum", "must be positive");
  }
  const bool model2 = model == ModelKind::m2_failure || model == ModelKind::m2_compare ||
                      model == ModelKind::m2_preference;
  if (model2 && explicit_stats) {
    throw ConfigValidationError(
        "w_j", "Model 2 runs need a Beta prior (alpha/beta), not explicit statistics");
  }
}

std::vector<std::pair<std::string, std::string>> RunConfig::describe() const {
  std::vector<std::pair<std::string, std::string>> out;
  auto put = [&](std::string key, std::string value) { out.emplace_back(std::move(key), std::move(value)); };
  auto list = [](const std::vector<double>& xs) {
    std::vector<std::string> parts;
    for (double x : xs) parts.push_back(format_number(x));
    return join(parts);
  };

  put("model", std::string(to_string(model)));
  if (explicit_stats) {
    put("w_j", format_number(explicit_stats->w_j));
    put("b_j", format_number(explicit_stats->b_j));
    put("b_s", format_number(explicit_stats->b_s));
  } else {
    put("alpha", format_number(alpha));
    put("beta", format_number(beta));
  }
  put("epsilon", format_number(epsilon));
  put("chi", format_number(chi));
  put("c_hat", format_number(c_hat));
  put("wj_mode", std::string(to_string(wj_mode)));
  put("payoff_mode", std::string(to_string(payoff_mode)));
  put("step", format_number(integrator.step));
  put("max_time", format_number(integrator.max_time));
  put("convergence_tol", format_number(integrator.convergence_tol));
  put("corner_tol", format_number(integrator.corner_tol));
  put("resolution", std::to_string(resolution));
  put("field_resolution", std::to_string(field_resolution));
  put("trajectory_stride", std::to_string(trajectory_stride));
  std::vector<std::string> starts;
  for (const auto& s : trajectory_starts) {
    starts.push_back("[" + format_number(s.p_j) + ", " + format_number(s.p_s) + "]");
  }
  put("trajectory_starts", join(starts));
  put("a_values", list(a_values));
  std::vector<std::string> norm_names;
  for (auto n : norms) norm_names.emplace_back(to_string(n));
  put("norm", join(norm_names));
  put("mc_samples", std::to_string(mc_samples));
  put("seed", std::to_string(seed));
  put("mu_min", format_number(mu_min));
  put("mu_max", format_number(mu_max));
  put("mu_steps", std::to_string(mu_steps));
  put("c_hat_min", format_number(c_hat_min));
  put("c_hat_max", format_number(c_hat_max));
  put("c_hat_steps", std::to_string(c_hat_steps));
  put("prior_sum", format_number(prior_sum));
  put("svg", svg ? "true" : "false");
  put("output_prefix", prefix());
  return out;
}

RunConfig parse_config(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigParseError(e.msg, e.mark.line + 1);
  }
  if (root.IsNull()) throw ConfigParseError("empty config document", 1);
  if (!root.IsMap()) {
    throw ConfigParseError("config must be a flat list of 'key: value' lines", root.Mark().line + 1);
  }

  RunConfig cfg;
  bool has_model = false;
  std::optional<double> w_j, b_j, b_s;
  bool has_shape = false;

  using Handler = std::function<void(const YAML::Node&, const std::string&)>;
  const std::map<std::string, Handler, std::less<>> handlers = {
      {"model", [&](auto& n, auto& k) { cfg.model = parse_model(scalar<std::string>(n, k)); has_model = true; }},
      {"alpha", [&](auto& n, auto& k) { cfg.alpha = scalar<double>(n, k); has_shape = true; }},
      {"beta", [&](auto& n, auto& k) { cfg.beta = scalar<double>(n, k); has_shape = true; }},
      {"w_j", [&](auto& n, auto& k) { w_j = scalar<double>(n, k); }},
      {"b_j", [&](auto& n, auto& k) { b_j = scalar<double>(n, k); }},
      {"b_s", [&](auto& n, auto& k) { b_s = scalar<double>(n, k); }},
      {"epsilon", [&](auto& n, auto& k) { cfg.epsilon = scalar<double>(n, k); }},
      {"chi", [&](auto& n, auto& k) { cfg.chi = scalar<double>(n, k); }},
      {"c_hat", [&](auto& n, auto& k) { cfg.c_hat = scalar<double>(n, k); }},
      {"wj_mode", [&](auto& n, auto& k) {
         check(k, [&] { cfg.wj_mode = parse_wj_mode(scalar<std::string>(n, k)); });
       }},
      {"payoff_mode", [&](auto& n, auto& k) {
         check(k, [&] { cfg.payoff_mode = parse_payoff_mode(scalar<std::string>(n, k)); });
       }},
      {"step", [&](auto& n, auto& k) { cfg.integrator.step = scalar<double>(n, k); }},
      {"max_time", [&](auto& n, auto& k) { cfg.integrator.max_time = scalar<double>(n, k); }},
      {"convergence_tol", [&](auto& n, auto& k) { cfg.integrator.convergence_tol = scalar<double>(n, k); }},
      {"corner_tol", [&](auto& n, auto& k) { cfg.integrator.corner_tol = scalar<double>(n, k); }},
      {"resolution", [&](auto& n, auto& k) { cfg.resolution = scalar<int>(n, k); }},
      {"field_resolution", [&](auto& n, auto& k) { cfg.field_resolution = scalar<int>(n, k); }},
      {"trajectory_stride", [&](auto& n, auto& k) { cfg.trajectory_stride = scalar<int>(n, k); }},
      {"trajectory_starts", [&](auto& n, auto& k) {
         if (!n.IsSequence()) throw ConfigValidationError(k, "expected a list of [p_j, p_s] pairs");
         cfg.trajectory_starts.clear();
         for (const auto& item : n) {
           const auto pair = number_list(item, k);
           if (pair.size() != 2) throw ConfigValidationError(k, "each start needs exactly two numbers");
           cfg.trajectory_starts.push_back({pair[0], pair[1]});
         }
       }},
      {"a_values", [&](auto& n, auto& k) { cfg.a_values = number_list(n, k); }},
      {"norm", [&](auto& n, auto& k) {
         const auto name = scalar<std::string>(n, k);
         if (name == "both") {
           cfg.norms = {Norm::i_norm, Norm::c_norm};
         } else {
           check(k, [&] { cfg.norms = {parse_norm(name)}; });
         }
       }},
      {"mc_samples", [&](auto& n, auto& k) { cfg.mc_samples = scalar<std::uint64_t>(n, k); }},
      {"seed", [&](auto& n, auto& k) { cfg.seed = scalar<std::uint64_t>(n, k); }},
      {"mu_min", [&](auto& n, auto& k) { cfg.mu_min = scalar<double>(n, k); }},
      {"mu_max", [&](auto& n, auto& k) { cfg.mu_max = scalar<double>(n, k); }},
      {"mu_steps", [&](auto& n, auto& k) { cfg.mu_steps = scalar<int>(n, k); }},
      {"c_hat_min", [&](auto& n, auto& k) { cfg.c_hat_min = scalar<double>(n, k); }},
      {"c_hat_max", [&](auto& n, auto& k) { cfg.c_hat_max = scalar<double>(n, k); }},
      {"c_hat_steps", [&](auto& n, auto& k) { cfg.c_hat_steps = scalar<int>(n, k); }},
      {"prior_sum", [&](auto& n, auto& k) { cfg.prior_sum = scalar<double>(n, k); }},
      {"threads", [&](auto& n, auto& k) { cfg.threads = scalar<unsigned>(n, k); }},
      {"svg", [&](auto& n, auto& k) { cfg.svg = scalar<bool>(n, k); }},
      {"output_prefix", [&](auto& n, auto& k) { cfg.output_prefix = scalar<std::string>(n, k); }},
      {"out_dir", [&](auto& n, auto& k) { cfg.out_dir = scalar<std::string>(n, k); }},
  };

  for (const auto& entry : root) {
    const auto key = entry.first.as<std::string>();
    if (entry.second.IsMap()) {
      throw ConfigParseError("nested mappings are not supported (key '" + key + "')",
                             entry.second.Mark().line + 1);
    }
    const auto it = handlers.find(key);
    if (it == handlers.end()) {
      throw ConfigValidationError(key, "unknown key (line " +
                                           std::to_string(entry.first.Mark().line + 1) + ")");
    }
    it->second(entry.second, key);
  }

  if (!has_model) throw ConfigValidationError("model", "required key missing");
  if (w_j || b_j || b_s) {
    if (!(w_j && b_j && b_s)) {
      throw ConfigValidationError("w_j", "explicit statistics need all of w_j, b_j and b_s");
    }
    if (has_shape) {
      throw ConfigValidationError("alpha", "give either alpha/beta or explicit w_j/b_j/b_s, not both");
    }
    cfg.explicit_stats = ExplicitStats{*w_j, *b_j, *b_s};
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace normdyn::cli
