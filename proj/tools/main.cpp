#include <CLI11.hpp>

#include <iostream>

#include "normdyn/cli/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Replicator dynamics and collaboration-failure analysis of authorship norms"};
  app.set_version_flag("--version", "norm-dynamics 0.1.0");

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  app.add_option("config", config_path, "Run configuration (flat key: value file)")->required();
  auto* out_opt = app.add_option("--out-dir", out_dir, "Directory for CSV/JSON/SVG outputs");
  auto* seed_opt = app.add_option("--seed", seed, "Overrides the config seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(normdyn::cli::ExitCode::usage);
  }

  normdyn::cli::Invocation invocation{config_path, {}, {}};
  if (*out_opt) invocation.out_dir = out_dir;
  if (*seed_opt) invocation.seed = seed;
  return static_cast<int>(normdyn::cli::execute(invocation, std::cout, std::cerr));
}
