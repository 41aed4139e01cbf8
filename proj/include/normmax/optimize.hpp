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

#ifndef NORMMAX_OPTIMIZE_HPP_
#define NORMMAX_OPTIMIZE_HPP_

#include <functional>

namespace normmax {

struct Maximum {
  double argmax = 0.0;
  double value = 0.0;
  long evaluations = 0;
};

// Maximizes a unimodal f on [lo, hi] by golden-section search until the
// bracket is narrower than x_tol.
Maximum golden_section_max(const std::function<double(double)>& f, double lo,
                           double hi, double x_tol);

struct ScanOptions {
  int points = 4096;
  double x_tol = 1e-10;
  // Local maxima of the scan within this much of the best are refined.
  double value_tol = 1e-8;
};

// Global maximization without a unimodality assumption: evaluates f on an
// equally spaced grid over [lo, hi], then golden-section refines every grid
// local maximum that comes within value_tol of the best grid value.
Maximum scan_and_refine_max(const std::function<double(double)>& f, double lo,
                            double hi, const ScanOptions& options = {});

}  // namespace normmax

#endif  // NORMMAX_OPTIMIZE_HPP_
