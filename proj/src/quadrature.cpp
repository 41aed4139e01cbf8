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

#include "normmax/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "normmax/errors.hpp"

namespace normmax {
namespace {

// Kronrod nodes on [0, 1); odd indices are the Gauss-7 nodes.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kKronrod[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGauss[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double kronrod;
  double gauss;
};

Panel gauss_kronrod_15(const std::function<double(double)>& f, double a,
                       double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f_center = f(center);
  double kronrod = kKronrod[7] * f_center;
  double gauss = kGauss[3] * f_center;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kKronrod[i] * sum;
    if (i % 2 == 1) gauss += kGauss[i / 2] * sum;
  }
  return {kronrod * half, gauss * half};
}

struct Segment {
  double a;
  double b;
  double value;
  double error;
  int depth;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment make_segment(const std::function<double(double)>& f, double a,
                     double b, int depth) {
  const Panel p = gauss_kronrod_15(f, a, b);
  return {a, b, p.kronrod, std::fabs(p.kronrod - p.gauss), depth};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, int max_depth) {
  QuadratureResult out;
  if (a == b) return out;
  if (a > b) {
    out = integrate(f, b, a, abs_tol, max_depth);
    out.value = -out.value;
    return out;
  }
  // Global adaptive bisection: always split the panel with the largest error.
  std::priority_queue<Segment> heap;
  heap.push(make_segment(f, a, b, 0));
  double total_error = heap.top().error;
  while (total_error > abs_tol) {
    Segment worst = heap.top();
    if (worst.error <= 64.0 * std::numeric_limits<double>::epsilon() *
                           std::fabs(worst.value)) {
      break;
    }
    if (worst.depth >= max_depth) {
      throw NumericalError("integrate: tolerance not met at maximum depth");
    }
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = make_segment(f, worst.a, mid, worst.depth + 1);
    const Segment right = make_segment(f, mid, worst.b, worst.depth + 1);
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Neumaier summation in left-to-right order for reproducibility.
  std::vector<Segment> segments;
  segments.reserve(heap.size());
  while (!heap.empty()) {
    segments.push_back(heap.top());
    heap.pop();
  }
  std::sort(segments.begin(), segments.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });
  double sum = 0.0;
  double comp = 0.0;
  double err = 0.0;
  for (const Segment& s : segments) {
    const double t = sum + s.value;
    comp += (std::fabs(sum) >= std::fabs(s.value)) ? (sum - t) + s.value
                                                   : (s.value - t) + sum;
    sum = t;
    err += s.error;
  }
  out.value = sum + comp;
  out.error_estimate = err;
  out.panels = static_cast<long>(segments.size());
  return out;
}

}  // namespace normmax
