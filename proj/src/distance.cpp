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

#include "normmax/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "normmax/errors.hpp"
#include "normmax/optimize.hpp"
#include "normmax/parallel.hpp"
#include "normmax/specfn.hpp"

namespace normmax {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// -ln(1e-18): both CDFs are within 1e-18 of 0 or 1 beyond the bracket.
constexpr double kLogNegligible = -41.446531673892822312;
constexpr double kBracketMargin = 2.0;

// ln(-ln Phi(y)).
double log_neg_log_cdf(double y) {
  if (y >= 0.0) {
    const TailProbability s = std_normal_survival(y);
    if (s.value < 1e-200) return s.log_value;  // -ln(1-q) = q (1 + q/2 + ...)
    return std::log(-std::log1p(-s.value));
  }
  return std::log(-std_normal_survival(-y).log_value);
}

// ln Phi(y)^m given ln m.
double log_power_cdf(double log_multiplier, double y) {
  if (log_multiplier == -kInf) return 0.0;
  return -std::exp(log_multiplier + log_neg_log_cdf(y));
}

void require_valid(const NormingPair& pair) {
  if (!(pair.scale > 0.0) || !std::isfinite(pair.scale) ||
      !std::isfinite(pair.location)) {
    throw InvalidPairError("norming pair needs finite location and scale > 0");
  }
}

}  // namespace

double log_max_cdf(LogSize n, const NormingPair& pair, double x) {
  return log_power_cdf(n.log(), pair.scale * x + pair.location);
}

double diff(LogSize n, const NormingPair& pair, double x) {
  return std::exp(log_max_cdf(n, pair, x)) - gumbel_cdf(x);
}

Bracket distance_bracket(LogSize n, const NormingPair& pair) {
  require_valid(pair);
  const double a = pair.scale;
  const double b = pair.location;
  const double log_c = std::log(-kLogNegligible);

  // Lower end: Lambda(x) = 1e-18 and Phi^n(y) = 1e-18.
  const double gumbel_lo = -log_c;
  const double log_u = log_c - n.log();  // -ln Phi(y) = u
  double y_lo = 0.0;
  if (log_u >= std::log(kLogTwo)) {
    y_lo = -std_normal_quantile_upper(
        TailProbability::from_log(-std::exp(log_u)));
  } else {
    y_lo = std_normal_quantile_upper(
        TailProbability::from_log(log_one_minus_exp_neg(log_u)));
  }

  // Upper end: 1 - Lambda(x) = 1e-18 and n Q(y) = 1e-18.
  const double gumbel_hi = -kLogNegligible;
  const double y_hi = std_normal_quantile_upper(
      TailProbability::from_log(kLogNegligible - n.log()));

  Bracket out;
  out.lo = std::min(gumbel_lo, (y_lo - b) / a) - kBracketMargin;
  out.hi = std::max(gumbel_hi, (y_hi - b) / a) + kBracketMargin;
  return out;
}

DistanceReport sup_distance(LogSize n, const NormingPair& pair, double tol) {
  if (!(tol >= 1e-12 && tol <= 1e-3)) {
    throw DomainError("sup_distance: tol must lie in [1e-12, 1e-3]");
  }
  const Bracket bracket = distance_bracket(n, pair);
  ScanOptions options;
  options.value_tol = tol;
  const Maximum best = scan_and_refine_max(
      [&](double x) { return std::fabs(diff(n, pair, x)); }, bracket.lo,
      bracket.hi, options);

  DistanceReport report;
  report.n = n;
  report.pair = pair;
  report.sup = best.value;
  report.argmax = best.argmax;
  report.scaled = best.value * n.log();
  report.evaluations = best.evaluations;
  report.bracket = bracket;
  return report;
}

std::vector<std::vector<double>> scaled_distance_table(
    std::span<const LogSize> ns, std::span<const PairSpec> specs, double tol,
    unsigned jobs) {
  std::vector<std::vector<double>> table(specs.size(),
                                         std::vector<double>(ns.size()));
  const std::size_t cols = ns.size();
  parallel_for(specs.size() * cols, jobs, [&](std::size_t cell) {
    const std::size_t row = cell / cols;
    const std::size_t col = cell % cols;
    const NormingPair pair =
        norming_pair(specs[row].method, specs[row].aux, ns[col]);
    table[row][col] = sup_distance(ns[col], pair, tol).scaled;
  });
  return table;
}

double normalized_max_pdf(LogSize n, const NormingPair& pair, double x) {
  require_valid(pair);
  const double y = pair.scale * x + pair.location;
  double log_n_minus_one = n.log();
  if (n.value() == 1.0) {
    log_n_minus_one = -kInf;
  } else if (n.finite()) {
    log_n_minus_one = n.log() + std::log1p(-1.0 / n.value());
  }
  return std::exp(n.log() + std::log(pair.scale) + std_normal_log_pdf(y) +
                  log_power_cdf(log_n_minus_one, y));
}

}  // namespace normmax
