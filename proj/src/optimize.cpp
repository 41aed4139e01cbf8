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

#include "normmax/optimize.hpp"

#include <cmath>
#include <vector>

#include "normmax/errors.hpp"

namespace normmax {

Maximum golden_section_max(const std::function<double(double)>& f, double lo,
                           double hi, double x_tol) {
  constexpr double kInvPhi = 0.6180339887498948482045868343656;
  Maximum out;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  out.evaluations = 2;
  while (b - a > x_tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    ++out.evaluations;
    // Converged to adjacent doubles.
    if (c >= d) break;
  }
  if (fc >= fd) {
    out.argmax = c;
    out.value = fc;
  } else {
    out.argmax = d;
    out.value = fd;
  }
  return out;
}

Maximum scan_and_refine_max(const std::function<double(double)>& f, double lo,
                            double hi, const ScanOptions& options) {
  if (!(hi > lo) || options.points < 3) {
    throw NumericalError("scan_and_refine_max: empty interval");
  }
  const int count = options.points;
  const double step = (hi - lo) / (count - 1);
  std::vector<double> xs(count);
  std::vector<double> fs(count);
  Maximum best;
  best.value = -INFINITY;
  for (int i = 0; i < count; ++i) {
    xs[i] = (i == count - 1) ? hi : lo + i * step;
    fs[i] = f(xs[i]);
    if (fs[i] > best.value) {
      best.value = fs[i];
      best.argmax = xs[i];
    }
  }
  long evaluations = count;
  const double threshold = best.value - options.value_tol;
  for (int i = 0; i < count; ++i) {
    const bool left_ok = (i == 0) || fs[i] >= fs[i - 1];
    const bool right_ok = (i == count - 1) || fs[i] >= fs[i + 1];
    if (!left_ok || !right_ok || fs[i] < threshold) continue;
    const double a = xs[i > 0 ? i - 1 : 0];
    const double b = xs[i < count - 1 ? i + 1 : count - 1];
    const Maximum local = golden_section_max(f, a, b, options.x_tol);
    evaluations += local.evaluations;
    if (local.value > best.value) {
      best.value = local.value;
      best.argmax = local.argmax;
    }
  }
  best.evaluations = evaluations;
  return best;
}

}  // namespace normmax
