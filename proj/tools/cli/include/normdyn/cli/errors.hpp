#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace normdyn::cli {

/// Process exit codes of the norm-dynamics tool.
enum class ExitCode : int {
  ok = 0,
  usage = 1,
  config_parse = 2,
  config_validation = 3,
  numeric = 4,
  io = 5,
  internal = 6,
};

/// Config text is malformed; carries the 1-based line of the problem.
class ConfigParseError : public std::runtime_error {
 public:
  ConfigParseError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A config value violates a model constraint; `field()` names the key.
class ConfigValidationError : public std::runtime_error {
 public:
  ConfigValidationError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Table columns do not match what a renderer expects.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace normdyn::cli
