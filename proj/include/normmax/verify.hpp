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

#ifndef NORMMAX_VERIFY_HPP_
#define NORMMAX_VERIFY_HPP_

#include <array>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "normmax/distance.hpp"
#include "normmax/norming.hpp"

namespace normmax {

// One strict inequality lhs < rhs, evaluated numerically.
struct BoundCertificate {
  std::string name;
  std::variant<double, LogSize> argument;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool pass = false;

  static BoundCertificate make(std::string name,
                               std::variant<double, LogSize> argument,
                               double lhs, double rhs);
};

struct DecompositionSample {
  LogSize n = LogSize::from_value(1.0);
  double x = 0.0;
  double i_n = 0.0;
  double c_n = 0.0;  // e^{-I_n} / n
  double s_n = 0.0;
  double s_n_bound = 0.0;  // C_n^2 / (2 (1 - C_n))
  double log_max_cdf = 0.0;
  bool inside = false;  // 0 < S_n < bound
};

// Lower/upper bounds on b_n^2: (2 ln n - ln(4 pi ln n), 2 ln n).
std::pair<double, double> hall_square_bounds(LogSize n);

// Both sides of the sandwich for exact_b(n)^2.
std::pair<BoundCertificate, BoundCertificate> check_prop4(LogSize n);

// K(n0) = b_{n0}^2 / ln n0, n0 >= 3.
double k_constant(LogSize n0);

// Rate constant for the (b_n, A_F(b_n)) pair: 1 for n0 < 16, otherwise
// (2/(3 b^2) + 1/(sqrt(e) n0)) ln n0. Requires n0 >= 5.
double theorem_constant(LogSize n0);
// Explicit upper bound of theorem_constant from the b_n^2 lower bound,
// n0 >= 16.
double theorem_constant_tilde(LogSize n0);

// Bounds on the x >= 0 half with A_F (cplus) and A_H (cbarplus), and on the
// x < 0 half with A_F (cminus). All require n0 >= 3.
double cplus(LogSize n0);
double cbarplus(LogSize n0);
double cminus(LogSize n0);

// I_n(x) = integral of V(t) from b to a x + b; the pair location must be
// exact_b(n). Quadrature to absolute tolerance 1e-10.
double i_n_integral(LogSize n, const NormingPair& pair, double x);

DecompositionSample decomposition_sample(LogSize n, const NormingPair& pair,
                                         double x);

struct ProofConstant {
  BoundCertificate bound;  // max < stated constant
  double argmax = 0.0;
  double interval_lo = 0.0;
  double interval_hi = 0.0;
  bool argmax_inside = false;
};

// The three elementary maxima used inside the rate proofs:
//   max_{y>=1} 25 y^2 ln y / (32 (y^2+1)^2) < 1/10, argmax in (2.16, 2.17)
//   max_{y>=1} P(y) < 0.66,                        argmax in (1.532, 1.533)
//   max_{x<0}  Q(x) < 0.63,                        argmax in (-1.051, -1.050)
std::array<ProofConstant, 3> proof_constants_check();

// The two proof functions, exposed for tests.
double proof_function_p(double y);
double proof_function_q(double x);

// sup_distance(n, Exact/A_F) * ln n < theorem_constant(n0) for each n.
std::vector<BoundCertificate> theorem1_certify(LogSize n0,
                                               std::span<const LogSize> ns,
                                               double tol = 1e-8);

// ---- Certificate suites ---------------------------------------------------

// `count` sizes with ln n equally spaced on [ln lo, ln hi].
std::vector<LogSize> log_grid(LogSize lo, LogSize hi, int count);

std::vector<BoundCertificate> prop4_suite(std::span<const LogSize> grid);
// Adjacent K values strictly increasing, and K(n0) ln n < b_n^2 for all
// grid pairs n0 < n drawn from `pair_grid`.
std::vector<BoundCertificate> prop5_suite(std::span<const LogSize> grid,
                                          std::span<const LogSize> pair_grid);
// sup_distance with Hall's constants times ln n below 3, and at least
// `lower` for n >= 10^3.
std::vector<BoundCertificate> hall_suite(std::span<const LogSize> ns,
                                         double lower = 0.33,
                                         double tol = 1e-8, unsigned jobs = 1);
// Identity and S_n sandwich at every (n, x).
std::vector<BoundCertificate> dife_suite(std::span<const LogSize> ns,
                                         std::span<const double> xs);
std::vector<BoundCertificate> proof_constants_suite();

struct RateSeries {
  std::string name;
  std::vector<double> scaled;  // one entry per grid point
};

// Scaled approximation errors (error * rate^{-1}) over the grid.
std::vector<RateSeries> rate_series(std::span<const LogSize> grid);
// Mean of the last quarter of `values` below the mean of the first quarter.
BoundCertificate trend_certificate(const std::string& name,
                                   std::span<const double> values);
// Trend certificates for |b - barbeta|, |b - b*| and |barbeta - barbeta*|.
// The remaining series saturate slowly from below, which the quartile rule
// would misread as growth.
std::vector<BoundCertificate> rates_suite(std::span<const LogSize> grid);

}  // namespace normmax

#endif  // NORMMAX_VERIFY_HPP_
