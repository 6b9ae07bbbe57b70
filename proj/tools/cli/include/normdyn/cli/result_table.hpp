#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace normdyn::cli {

inline constexpr std::string_view kArtifactVersion = "0.1.0";

/// Named numeric table plus the metadata needed to reproduce it.
/// Missing values are NaN and render as empty CSV fields / JSON null.
struct ResultTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;

  /// Throws std::invalid_argument if the row width differs from the header.
  void add_row(std::vector<double> row);
  std::size_t column_index(std::string_view column) const;  ///< throws SchemaError
  bool has_column(std::string_view column) const;
};

/// `#`-prefixed `key: value` metadata lines, header row, then one line per
/// record with numbers at 12 significant digits. Every line ends in '\n'.
std::string render_csv(const ResultTable& table);
ResultTable parse_csv(std::string_view text);

nlohmann::json to_json(const ResultTable& table);

/// Writers throw IoError when the file cannot be written.
void emit_csv(const ResultTable& table, const std::filesystem::path& path);
void emit_json(const nlohmann::json& document, const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace normdyn::cli
