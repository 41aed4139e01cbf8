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

#ifndef NORMMAX_CALIBRATE_HPP_
#define NORMMAX_CALIBRATE_HPP_

#include <utility>
#include <vector>

#include "normmax/specfn.hpp"

namespace normmax {

inline constexpr double kDefaultCalibrationQ = -kLogTwoPi;

struct CalibrationResult {
  long m = 0;
  double q = kDefaultCalibrationQ;
  double p_hat = 0.0;
  std::vector<std::pair<long, double>> per_k;  // (k, p_k), k = 10..m
};

// The p for which B_k(p, q) equals the exact b_k. B_k is strictly increasing
// in p, so the root is unique; it is bracketed in [-5, 5] (widened once to
// [-20, 20]) and bisected to adjacent doubles. Throws NoRootError when no
// sign change exists, DomainError for k < 10.
double solve_p(double k, double q = kDefaultCalibrationQ);

// Mean of solve_p over k = 10..m (compensated sum). Roots are computed on up
// to `jobs` threads; the result does not depend on the thread count.
CalibrationResult p_hat(long m, double q = kDefaultCalibrationQ,
                        unsigned jobs = 1);

}  // namespace normmax

#endif  // NORMMAX_CALIBRATE_HPP_
