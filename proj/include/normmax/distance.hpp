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

#ifndef NORMMAX_DISTANCE_HPP_
#define NORMMAX_DISTANCE_HPP_

#include <span>
#include <utility>
#include <vector>

#include "normmax/norming.hpp"

namespace normmax {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct DistanceReport {
  LogSize n = LogSize::from_value(1.0);
  NormingPair pair;
  double sup = 0.0;
  double argmax = 0.0;
  double scaled = 0.0;  // sup * ln n
  long evaluations = 0;
  Bracket bracket;
};

// ln Phi^n(a x + b), evaluated through the survival function so that nothing
// underflows for n up to 10^100 and beyond.
double log_max_cdf(LogSize n, const NormingPair& pair, double x);

// Phi^n(a x + b) - Lambda(x).
double diff(LogSize n, const NormingPair& pair, double x);

// Interval outside which both Phi^n(a x + b) and Lambda(x) are within 1e-18
// of 0 (left) or 1 (right), widened by 2 on each side.
// Throws InvalidPairError for scale <= 0.
Bracket distance_bracket(LogSize n, const NormingPair& pair);

// sup_x |Phi^n(a x + b) - Lambda(x)| by scan-and-refine over the bracket.
// tol in [1e-12, 1e-3]; throws DomainError otherwise.
DistanceReport sup_distance(LogSize n, const NormingPair& pair,
                            double tol = 1e-8);

struct PairSpec {
  ApproxMethod method;
  AuxiliaryKind aux;
};

// Entry [row][col] = sup_distance(ns[col], pair(specs[row], ns[col])) * ln n.
// Cells are computed on up to `jobs` threads; the result does not depend on
// the thread count.
std::vector<std::vector<double>> scaled_distance_table(
    std::span<const LogSize> ns, std::span<const PairSpec> specs,
    double tol = 1e-8, unsigned jobs = 1);

// Density of (M_n - b) / a at x.
double normalized_max_pdf(LogSize n, const NormingPair& pair, double x);

}  // namespace normmax

#endif  // NORMMAX_DISTANCE_HPP_
