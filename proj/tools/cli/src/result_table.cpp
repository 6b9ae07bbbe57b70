#include "normdyn/cli/result_table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "normdyn/cli/config.hpp"
#include "normdyn/cli/errors.hpp"

namespace normdyn::cli {
namespace {

std::string quote_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Splits one CSV record, honouring RFC 4180 quoting.
std::vector<std::string> split_record(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  return fields;
}

std::string single_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  std::replace(text.begin(), text.end(), '\r', ' ');
  return text;
}

}  // namespace

void ResultTable::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("row has " + std::to_string(row.size()) + " values but table '" +
                                name + "' has " + std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

bool ResultTable::has_column(std::string_view column) const {
  return std::find(columns.begin(), columns.end(), column) != columns.end();
}

std::size_t ResultTable::column_index(std::string_view column) const {
  const auto it = std::find(columns.begin(), columns.end(), column);
  if (it == columns.end()) {
    throw SchemaError("table '" + name + "' has no column '" + std::string(column) + "'");
  }
  return static_cast<std::size_t>(it - columns.begin());
}

std::string render_csv(const ResultTable& table) {
  std::string out;
  out += "# table: " + single_line(table.name) + "\n";
  out += "# version: " + std::string(kArtifactVersion) + "\n";
  for (const auto& [key, value] : table.metadata) {
    out += "# " + single_line(key) + ": " + single_line(value) + "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += quote_field(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

ResultTable parse_csv(std::string_view text) {
  ResultTable table;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!header_seen && !line.empty() && line.front() == '#') {
      line.remove_prefix(1);
      if (!line.empty() && line.front() == ' ') line.remove_prefix(1);
      const auto colon = line.find(": ");
      std::string key(line.substr(0, colon));
      std::string value = colon == std::string_view::npos ? "" : std::string(line.substr(colon + 2));
      if (key == "table") {
        table.name = value;
      } else if (key != "version") {
        table.metadata.emplace_back(std::move(key), std::move(value));
      }
      continue;
    }
    if (!header_seen) {
      table.columns = split_record(line);
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    std::vector<double> row;
    for (const auto& field : split_record(line)) {
      row.push_back(field.empty() ? std::numeric_limits<double>::quiet_NaN() : std::stod(field));
    }
    table.add_row(std::move(row));
  }
  return table;
}

nlohmann::json to_json(const ResultTable& table) {
  nlohmann::json doc;
  doc["table"] = table.name;
  doc["version"] = kArtifactVersion;
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [key, value] : table.metadata) meta[key] = value;
  doc["metadata"] = meta;
  doc["columns"] = table.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json record = nlohmann::json::array();
    for (double v : row) {
      if (std::isfinite(v)) {
        record.push_back(v);
      } else {
        record.push_back(nullptr);
      }
    }
    rows.push_back(std::move(record));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

void emit_csv(const ResultTable& table, const std::filesystem::path& path) {
  write_text(path, render_csv(table));
}

void emit_json(const nlohmann::json& document, const std::filesystem::path& path) {
  write_text(path, document.dump(2) + "\n");
}

}  // namespace normdyn::cli
