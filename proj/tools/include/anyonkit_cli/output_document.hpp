// Copyright 2026 The anyonkit Authors
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

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "anyonkit/rational.hpp"

namespace anyonkit::cli {

inline constexpr const char* kSchemaVersion = "anyonkit/1";

enum class ColumnType { kString, kInteger, kRational, kReal, kComplex };

const char* to_string(ColumnType type);
ColumnType parse_column_type(const std::string& name);

/** An empty cell (std::monostate) renders as "-" in text and null in JSON. */
using Cell = std::variant<std::monostate, std::string, long long, Rational, double, std::complex<double>>;

struct Column {
  std::string name;
  ColumnType type = ColumnType::kString;
  friend bool operator==(const Column&, const Column&) = default;
};

struct Section {
  std::string name;
  std::string title;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;
  friend bool operator==(const Section&, const Section&) = default;
};

/**
 * Everything a command produces. Text, CSV and JSON are all rendered from
 * this one structure; JSON parses back to an equal document.
 */
struct OutputDocument {
  std::string schema_version = kSchemaVersion;
  std::string command;
  std::string group_spec;
  std::vector<Section> sections;

  Section& add_section(std::string name, std::string title, std::vector<Column> columns);
  const Section* find(const std::string& name) const;
  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

/** Throws std::invalid_argument if a cell does not match its column type. */
void check_types(const OutputDocument& doc);

std::string to_json(const OutputDocument& doc, int indent = 2);
/** Throws std::invalid_argument on schema mismatch or malformed input. */
OutputDocument from_json(const std::string& text);

std::string render_text(const OutputDocument& doc, bool decimal = false);
std::string render_csv(const OutputDocument& doc, bool decimal = false);

std::string format_cell_text(const Cell& cell, bool decimal = false);
std::string csv_quote(const std::string& field);

}  // namespace anyonkit::cli
