// Copyright 2026 The normmax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "normmax/csv.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace normmax::csv {

std::string format_number(double value, const OutputSpec& spec) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::to_chars_result r;
  if (spec.decimals) {
    r = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed,
                      *spec.decimals);
  } else if (spec.digits >= 17) {
    r = std::to_chars(buf, buf + sizeof buf, value);
  } else {
    r = std::to_chars(buf, buf + sizeof buf, value,
                      std::chars_format::general, spec.digits);
  }
  if (r.ec != std::errc()) throw std::runtime_error("format_number failed");
  std::string out(buf, r.ptr);
  if (out == "-0") out = "0";
  return out;
}

namespace {

std::string quote_if_needed(const std::string& cell, char delimiter) {
  if (cell.find_first_of(std::string{delimiter, '"', '\n', '\r'}) ==
      std::string::npos) {
    return cell;
  }
  std::string out = "\"";
  for (const char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_row(std::ostream& out, const Row& row, char delimiter) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out << delimiter;
    out << quote_if_needed(row[i], delimiter);
  }
  out << '\n';
}

}  // namespace

void write(std::ostream& out, const Table& table, char delimiter) {
  write_row(out, table.header, delimiter);
  for (const Row& row : table.rows) write_row(out, row, delimiter);
}

std::string to_string(const Table& table, char delimiter) {
  std::ostringstream out;
  write(out, table, delimiter);
  return out.str();
}

Table parse(std::string_view text, char delimiter) {
  std::vector<Row> rows;
  Row row;
  std::string cell;
  bool in_quotes = false;
  bool row_open = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cell += c;
      }
      continue;
    }
    if (c == '"') {
      in_quotes = true;
      row_open = true;
    } else if (c == delimiter) {
      row.push_back(std::move(cell));
      cell.clear();
      row_open = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      row.push_back(std::move(cell));
      cell.clear();
      rows.push_back(std::move(row));
      row.clear();
      row_open = false;
    } else {
      cell += c;
      row_open = true;
    }
  }
  if (in_quotes) throw std::runtime_error("csv: unterminated quote");
  if (row_open) {
    row.push_back(std::move(cell));
    rows.push_back(std::move(row));
  }
  Table table;
  if (!rows.empty()) {
    table.header = std::move(rows.front());
    table.rows.assign(std::make_move_iterator(rows.begin() + 1),
                      std::make_move_iterator(rows.end()));
  }
  return table;
}

}  // namespace normmax::csv
