// Copyright 2026 The thermomachine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Result tables and their CSV / JSON serialisations.
//
// CSV layout:
//   # key: value            metadata, one line per entry, in insertion order
//   col_a,col_b,...         header
//   0.25,2.0000000000000004 rows in %.17g, empty field for an undefined value
//
// JSON layout: {"meta": {...}, "columns": [...], "rows": [[...], ...]} with
// null for an undefined value. Both writers are byte-deterministic.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace thermomachine {

inline constexpr const char* kArtifactVersion = "thermomachine 1.0.0";

/// Raised for I/O failures; the message carries the offending path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cell = std::optional<double>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> meta;

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
      throw std::logic_error("ResultTable: row has " + std::to_string(row.size()) +
                             " cells, expected " + std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
  }

  void set_meta(const std::string& key, const std::string& value) {
    for (auto& [k, v] : meta) {
      if (k == key) {
        v = value;
        return;
      }
    }
    meta.emplace_back(key, value);
  }

  [[nodiscard]] std::optional<std::string> meta_value(const std::string& key) const {
    for (const auto& [k, v] : meta) {
      if (k == key) return v;
    }
    return std::nullopt;
  }

  [[nodiscard]] std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == name) return i;
    }
    throw std::out_of_range("ResultTable: no column '" + name + "'");
  }

  /// Appends the rows of another table with identical columns.
  void append(const ResultTable& other) {
    if (other.columns != columns) throw std::logic_error("ResultTable: column mismatch on append");
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  }
};

inline std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

inline std::string format_number(std::int64_t value) { return std::to_string(value); }

inline std::string to_csv(const ResultTable& table) {
  std::string out;
  for (const auto& [key, value] : table.meta) {
    out += "# " + key + ": " + value + "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (row[i]) out += format_number(*row[i]);
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::ordered_json to_json_value(const ResultTable& table) {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.meta) meta[key] = value;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const Cell& cell : row) {
      if (cell) {
        r.push_back(*cell);
      } else {
        r.push_back(nullptr);
      }
    }
    rows.push_back(std::move(r));
  }
  nlohmann::ordered_json out;
  out["meta"] = std::move(meta);
  out["columns"] = table.columns;
  out["rows"] = std::move(rows);
  return out;
}

inline std::string to_json(const ResultTable& table) { return to_json_value(table).dump(1) + "\n"; }

enum class ExportFormat { csv, json };

inline std::string serialize(const ResultTable& table, ExportFormat format) {
  return format == ExportFormat::csv ? to_csv(table) : to_json(table);
}

inline void export_table(const ResultTable& table, ExportFormat format, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  const std::string text = serialize(table, format);
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace detail

/// Parses the CSV written by to_csv.
inline ResultTable parse_csv(const std::string& text) {
  ResultTable table;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!have_header && line.rfind("# ", 0) == 0) {
      const auto colon = line.find(": ", 2);
      if (colon == std::string::npos) throw std::runtime_error("csv: malformed metadata line");
      table.meta.emplace_back(line.substr(2, colon - 2), line.substr(colon + 2));
      continue;
    }
    if (!have_header) {
      table.columns = detail::split_fields(line);
      have_header = true;
      continue;
    }
    std::vector<Cell> row;
    for (const std::string& f : detail::split_fields(line)) {
      if (f.empty()) {
        row.emplace_back(std::nullopt);
      } else {
        char* end = nullptr;
        const double value = std::strtod(f.c_str(), &end);
        if (end != f.c_str() + f.size()) throw std::runtime_error("csv: bad number '" + f + "'");
        row.emplace_back(value);
      }
    }
    table.add_row(std::move(row));
  }
  return table;
}

inline ResultTable read_csv(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_csv(buffer.str());
}

}  // namespace thermomachine
