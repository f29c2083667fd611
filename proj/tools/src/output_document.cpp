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


#include "anyonkit_cli/output_document.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "anyonkit/errors.hpp"
#include "json.hpp"

namespace anyonkit::cli {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool cell_matches(const Cell& cell, ColumnType type) {
  switch (type) {
    case ColumnType::kString: return std::holds_alternative<std::string>(cell);
    case ColumnType::kInteger: return std::holds_alternative<long long>(cell);
    case ColumnType::kRational: return std::holds_alternative<Rational>(cell);
    case ColumnType::kReal: return std::holds_alternative<double>(cell);
    case ColumnType::kComplex: return std::holds_alternative<std::complex<double>>(cell);
  }
  return false;
}

std::string format_real(double x, int digits) {
  if (std::abs(x) < 5e-13) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string format_complex(std::complex<double> z, int digits) {
  std::string re = format_real(z.real(), digits);
  std::string im = format_real(z.imag(), digits);
  if (im == "0") return re;
  std::string sign = im.front() == '-' ? "-" : "+";
  if (im.front() == '-') im.erase(0, 1);
  if (im == "1") im.clear();
  if (re == "0") return (sign == "-" ? "-" : "") + im + "i";
  return re + sign + im + "i";
}

std::string format_cell(const Cell& cell, bool decimal, int digits) {
  return std::visit(Overloaded{
                        [](std::monostate) -> std::string { return "-"; },
                        [](const std::string& s) { return s; },
                        [](long long v) { return std::to_string(v); },
                        [&](const Rational& r) {
                          return decimal ? format_real(to_double(r), digits) : anyonkit::to_string(r);
                        },
                        [&](double v) { return format_real(v, digits); },
                        [&](std::complex<double> z) { return format_complex(z, digits); },
                    },
                    cell);
}

json cell_to_json(const Cell& cell) {
  return std::visit(Overloaded{
                        [](std::monostate) -> json { return nullptr; },
                        [](const std::string& s) -> json { return s; },
                        [](long long v) -> json { return v; },
                        [](const Rational& r) -> json { return anyonkit::to_string(r); },
                        [](double v) -> json { return v; },
                        [](std::complex<double> z) -> json { return json::array({z.real(), z.imag()}); },
                    },
                    cell);
}

Cell cell_from_json(const json& j, ColumnType type) {
  if (j.is_null()) return std::monostate{};
  switch (type) {
    case ColumnType::kString:
      return j.get<std::string>();
    case ColumnType::kInteger:
      return j.get<long long>();
    case ColumnType::kRational:
      return parse_rational(j.get<std::string>());
    case ColumnType::kReal:
      return j.get<double>();
    case ColumnType::kComplex:
      if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex cell must be [re, im]");
      return std::complex<double>(j[0].get<double>(), j[1].get<double>());
  }
  throw std::invalid_argument("bad column type");
}

}  // namespace

const char* to_string(ColumnType type) {
  switch (type) {
    case ColumnType::kString: return "string";
    case ColumnType::kInteger: return "integer";
    case ColumnType::kRational: return "rational";
    case ColumnType::kReal: return "real";
    case ColumnType::kComplex: return "complex";
  }
  return "string";
}

ColumnType parse_column_type(const std::string& name) {
  for (auto t : {ColumnType::kString, ColumnType::kInteger, ColumnType::kRational, ColumnType::kReal,
                 ColumnType::kComplex})
    if (name == to_string(t)) return t;
  throw std::invalid_argument("unknown column type '" + name + "'");
}

Section& OutputDocument::add_section(std::string name, std::string title, std::vector<Column> columns) {
  sections.push_back(Section{std::move(name), std::move(title), std::move(columns), {}, {}});
  return sections.back();
}

const Section* OutputDocument::find(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

void check_types(const OutputDocument& doc) {
  for (const auto& s : doc.sections)
    for (const auto& row : s.rows) {
      if (row.size() != s.columns.size())
        throw std::invalid_argument("row width mismatch in section '" + s.name + "'");
      for (std::size_t c = 0; c < row.size(); ++c)
        if (!std::holds_alternative<std::monostate>(row[c]) && !cell_matches(row[c], s.columns[c].type))
          throw std::invalid_argument("cell type mismatch in column '" + s.columns[c].name + "'");
    }
}

std::string to_json(const OutputDocument& doc, int indent) {
  check_types(doc);
  json j;
  j["schema"] = doc.schema_version;
  j["command"] = doc.command;
  j["group"] = doc.group_spec;
  j["sections"] = json::array();
  for (const auto& s : doc.sections) {
    json js;
    js["name"] = s.name;
    js["title"] = s.title;
    js["columns"] = json::array();
    for (const auto& c : s.columns) js["columns"].push_back({{"name", c.name}, {"type", to_string(c.type)}});
    js["rows"] = json::array();
    for (const auto& row : s.rows) {
      json jr = json::array();
      for (const auto& cell : row) jr.push_back(cell_to_json(cell));
      js["rows"].push_back(std::move(jr));
    }
    js["notes"] = s.notes;
    j["sections"].push_back(std::move(js));
  }
  return j.dump(indent);
}

OutputDocument from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  try {
    OutputDocument doc;
    doc.schema_version = j.at("schema").get<std::string>();
    if (doc.schema_version != kSchemaVersion)
      throw std::invalid_argument("unsupported schema '" + doc.schema_version + "'");
    doc.command = j.at("command").get<std::string>();
    doc.group_spec = j.at("group").get<std::string>();
    for (const auto& js : j.at("sections")) {
      Section s;
      s.name = js.at("name").get<std::string>();
      s.title = js.at("title").get<std::string>();
      for (const auto& jc : js.at("columns"))
        s.columns.push_back({jc.at("name").get<std::string>(), parse_column_type(jc.at("type").get<std::string>())});
      for (const auto& jr : js.at("rows")) {
        if (jr.size() != s.columns.size()) throw std::invalid_argument("row width mismatch");
        std::vector<Cell> row;
        for (std::size_t c = 0; c < jr.size(); ++c) row.push_back(cell_from_json(jr[c], s.columns[c].type));
        s.rows.push_back(std::move(row));
      }
      s.notes = js.at("notes").get<std::vector<std::string>>();
      doc.sections.push_back(std::move(s));
    }
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("schema violation: ") + e.what());
  } catch (const AnyonError& e) {
    throw std::invalid_argument(std::string("bad rational: ") + e.what());
  }
}

std::string format_cell_text(const Cell& cell, bool decimal) { return format_cell(cell, decimal, 6); }

std::string render_text(const OutputDocument& doc, bool decimal) {
  check_types(doc);
  std::ostringstream out;
  bool first = true;
  for (const auto& s : doc.sections) {
    if (!first) out << '\n';
    first = false;
    out << s.title << '\n';
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header;
    for (const auto& c : s.columns) header.push_back(c.name);
    grid.push_back(header);
    for (const auto& row : s.rows) {
      std::vector<std::string> line;
      for (const auto& cell : row) line.push_back(format_cell_text(cell, decimal));
      grid.push_back(std::move(line));
    }
    std::vector<std::size_t> width(s.columns.size(), 0);
    for (const auto& line : grid)
      for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    for (std::size_t r = 0; r < grid.size(); ++r) {
      std::string line;
      for (std::size_t c = 0; c < grid[r].size(); ++c) {
        std::string cell = grid[r][c];
        if (c + 1 < grid[r].size()) cell.resize(width[c], ' ');
        line += cell;
        if (c + 1 < grid[r].size()) line += "  ";
      }
      out << line << '\n';
      if (r == 0) {
        std::size_t total = 0;
        for (auto w : width) total += w + 2;
        out << std::string(total > 2 ? total - 2 : 0, '-') << '\n';
      }
    }
    for (const auto& note : s.notes) out << note << '\n';
  }
  return out.str();
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string render_csv(const OutputDocument& doc, bool decimal) {
  check_types(doc);
  std::ostringstream out;
  bool multi = doc.sections.size() > 1;
  bool first = true;
  for (const auto& s : doc.sections) {
    if (!first) out << "\r\n";
    first = false;
    if (multi) out << "# " << s.name << "\r\n";
    for (std::size_t c = 0; c < s.columns.size(); ++c) out << (c ? "," : "") << csv_quote(s.columns[c].name);
    out << "\r\n";
    for (const auto& row : s.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        std::string text = std::holds_alternative<std::monostate>(row[c]) ? "" : format_cell(row[c], decimal, 12);
        out << (c ? "," : "") << csv_quote(text);
      }
      out << "\r\n";
    }
  }
  return out.str();
}

}  // namespace anyonkit::cli
