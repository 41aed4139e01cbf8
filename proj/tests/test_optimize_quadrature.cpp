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

#include <cmath>

#include "doctest.h"
#include "normmax/optimize.hpp"
#include "normmax/quadrature.hpp"
#include "normmax/specfn.hpp"

using namespace normmax;

TEST_CASE("golden section on a parabola") {
  const Maximum m =
      golden_section_max([](double x) { return -(x - 0.3) * (x - 0.3); }, -1.0,
                         2.0, 1e-10);
  CHECK(m.argmax == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(m.value <= 0.0);
  CHECK(m.evaluations > 10);
}

TEST_CASE("scan finds the global peak among several") {
  auto f = [](double x) {
    return std::exp(-(x + 2) * (x + 2)) + 1.2 * std::exp(-4 * (x - 3) * (x - 3));
  };
  const Maximum m = scan_and_refine_max(f, -10.0, 10.0);
  CHECK(m.argmax == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(m.value == doctest::Approx(1.2).epsilon(1e-10));
}

TEST_CASE("scan handles a maximum at the edge") {
  const Maximum m = scan_and_refine_max([](double x) { return x; }, 0.0, 1.0);
  CHECK(m.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("Gauss-Kronrod integrates smooth functions") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0).value ==
        doctest::Approx(9.0).epsilon(1e-14));
  CHECK(integrate(std_normal_pdf, -40.0, 40.0).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::sin(x); }, kPi, 0.0).value ==
        doctest::Approx(-2.0).epsilon(1e-12));
  const QuadratureResult r =
      integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0);
  CHECK(std::fabs(r.value - 2.0 / 3.0) < 1e-9);
  CHECK(r.panels > 1);
}

TEST_CASE("hazard integral equals the log survival drop") {
  // -ln Q(x) + ln Q(0) = integral_0^x V(t) dt.
  for (const double x : {0.5, 2.0, 10.0, 30.0}) {
    const double lhs = integrate(normal_hazard, 0.0, x).value;
    const double rhs =
        std_normal_survival(0.0).log_value - std_normal_survival(x).log_value;
    CAPTURE(x);
    CHECK(std::fabs(lhs - rhs) < 1e-9);
  }
}
