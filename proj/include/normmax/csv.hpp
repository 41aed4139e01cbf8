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

#ifndef NORMMAX_CSV_HPP_
#define NORMMAX_CSV_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace normmax::csv {

// How numbers are rendered. `digits` significant digits (17 = shortest
// representation that round-trips); `decimals`, when set, overrides with a
// fixed number of places after the point (table reproduction).
struct OutputSpec {
  int digits = 17;
  std::optional<int> decimals;
  char delimiter = ',';
};

std::string format_number(double value, const OutputSpec& spec);

using Row = std::vector<std::string>;

struct Table {
  Row header;
  std::vector<Row> rows;
};

// Cells containing the delimiter, quotes or newlines are quoted. LF endings.
void write(std::ostream& out, const Table& table, char delimiter = ',');
std::string to_string(const Table& table, char delimiter = ',');

// Parses what `write` produces (RFC 4180 quoting, LF or CRLF endings).
// The first line becomes the header.
Table parse(std::string_view text, char delimiter = ',');

}  // namespace normmax::csv

#endif  // NORMMAX_CSV_HPP_
