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

#ifndef NORMMAX_QUADRATURE_HPP_
#define NORMMAX_QUADRATURE_HPP_

#include <functional>

namespace normmax {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long panels = 0;
};

// Globally adaptive bisection with a 15-point Gauss-Kronrod rule per panel
// (the embedded 7-point Gauss rule gives the error estimate), run until the
// summed estimate is below abs_tol. Reversed limits give the negated integral.
// Throws NumericalError when a panel must be split beyond max_depth.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol = 1e-10,
                           int max_depth = 40);

}  // namespace normmax

#endif  // NORMMAX_QUADRATURE_HPP_
