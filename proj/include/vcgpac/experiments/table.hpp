// Copyright 2026 The vcgpac Authors.
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

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <fmt/format.h>

#include "json.hpp"
#include "vcgpac/experiments/config.hpp"

namespace vcgpac {

using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string>;

/// A rectangular result set with free-form metadata.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::json meta = nlohmann::json::object();

  void add(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
      throw std::logic_error("row has " + std::to_string(row.size()) + " cells, table has " +
                             std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
  }
};

inline Cell cell(std::size_t v) { return static_cast<std::uint64_t>(v); }

inline std::string format_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string q = "\"";
          for (char ch : v) {
            if (ch == '"') q += '"';
            q += ch;
          }
          return q + '"';
        } else {
          return fmt::format("{}", v);
        }
      },
      c);
}

inline void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << t.columns[i];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_cell(row[i]);
    }
    out << '\n';
  }
}

inline nlohmann::json to_json(const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
    }
    rows.push_back(std::move(obj));
  }
  return {{"meta", t.meta}, {"columns", t.columns}, {"rows", rows}};
}

inline void write_table(std::ostream& out, const Table& t, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    out << to_json(t).dump(2) << '\n';
  } else {
    write_csv(out, t);
  }
}

}  // namespace vcgpac
