#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include "normdyn/cli/config.hpp"
#include "normdyn/cli/errors.hpp"

namespace normdyn::cli {

struct RunResult {
  std::vector<std::filesystem::path> files;
};

/// Runs the configured model and writes its tables into config.out_dir
/// (created if missing). Module errors propagate unchanged; file errors
/// surface as IoError.
RunResult run_command(const RunConfig& config);

struct Invocation {
  std::filesystem::path config_path;
  std::optional<std::filesystem::path> out_dir;
  std::optional<std::uint64_t> seed;
};

/// Loads, overrides, runs, and maps every failure onto an ExitCode with a
/// one-line diagnostic on `err`.
ExitCode execute(const Invocation& invocation, std::ostream& out, std::ostream& err);

}  // namespace normdyn::cli
