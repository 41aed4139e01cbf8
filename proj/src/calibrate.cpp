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

#include "normmax/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "normmax/errors.hpp"
#include "normmax/norming.hpp"
#include "normmax/parallel.hpp"

namespace normmax {
namespace {

// Bisection on g(p) = B_k(p, q)^2 - b_k^2, increasing in p, defined for
// ln(k^2) + p > 0. Returns false when [lo, hi] has no sign change.
bool bisect(LogSize k, double q, double target, double lo, double hi,
            double& root) {
  const double p_floor = -2.0 * k.log();
  lo = std::max(lo, std::nextafter(p_floor, INFINITY));
  if (!(hi > lo)) return false;
  auto g = [&](double p) { return b_general_squared(k, p, q) - target; };
  double g_lo = g(lo);
  const double g_hi = g(hi);
  if (g_lo > 0.0 || g_hi < 0.0) return false;
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = g(mid);
    if (g_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if (g_mid < 0.0) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  root = (std::fabs(g_lo) <= std::fabs(g(hi))) ? lo : hi;
  return true;
}

}  // namespace

double solve_p(double k, double q) {
  if (!(k >= 10.0)) throw DomainError("solve_p: requires k >= 10");
  const LogSize size = LogSize::from_value(k);
  if (!(2.0 * size.log() + q > 0.0)) {
    throw DomainError("solve_p: requires ln(k^2) + q > 0");
  }
  const double b = exact_b(size);
  const double target = b * b;
  double root = 0.0;
  if (bisect(size, q, target, -5.0, 5.0, root)) return root;
  if (bisect(size, q, target, -20.0, 20.0, root)) return root;
  throw NoRootError("solve_p: no root in [-20, 20] for k = " +
                    std::to_string(static_cast<long>(k)));
}

CalibrationResult p_hat(long m, double q, unsigned jobs) {
  if (m < 10) throw DomainError("p_hat: requires m >= 10");
  CalibrationResult out;
  out.m = m;
  out.q = q;
  const std::size_t count = static_cast<std::size_t>(m - 9);
  std::vector<double> roots(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    roots[i] = solve_p(static_cast<double>(10 + static_cast<long>(i)), q);
  });
  // Neumaier summation in index order.
  double sum = 0.0;
  double carry = 0.0;
  out.per_k.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double v = roots[i];
    const double t = sum + v;
    carry += (std::fabs(sum) >= std::fabs(v)) ? (sum - t) + v : (v - t) + sum;
    sum = t;
    out.per_k.emplace_back(10 + static_cast<long>(i), v);
  }
  out.p_hat = (sum + carry) / static_cast<double>(count);
  return out;
}

}  // namespace normmax
