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

#ifndef NORMMAX_TOOLS_CLI_HPP_
#define NORMMAX_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "normmax/norming.hpp"

namespace normmax::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedCertificate = 1;
inline constexpr int kExitUsage = 2;

// Runs the tool on `args` (without the program name). CSV goes to `out`
// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Accepts "1000", "2.5", "1e30", "1E30" and "10^30". Powers of ten keep
// ln n exact, so "1e400" is valid. Throws DomainError otherwise.
LogSize parse_size(std::string_view text);

// "lo:hi:step" with step > 0 and lo < hi. Throws DomainError otherwise.
std::vector<double> parse_grid(std::string_view text);

}  // namespace normmax::cli

#endif  // NORMMAX_TOOLS_CLI_HPP_
