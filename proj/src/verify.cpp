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

#include "normmax/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "normmax/errors.hpp"
#include "normmax/optimize.hpp"
#include "normmax/parallel.hpp"
#include "normmax/quadrature.hpp"
#include "normmax/specfn.hpp"

namespace normmax {
namespace {

constexpr double kLogFourPi = 2.531024246969290792977891594269411;
constexpr double kE = 2.718281828459045235360287471352662;
constexpr double kSqrtE = 1.648721270700128146848650787814163;
constexpr double kSqrt2 = 1.414213562373095048801688724209698;

// 1 / n and 1 / (n - 1), through the logarithm once n leaves the double range.
double inverse(LogSize n) {
  return n.finite() ? 1.0 / n.value() : std::exp(-n.log());
}
double inverse_minus_one(LogSize n) {
  return n.finite() ? 1.0 / (n.value() - 1.0) : std::exp(-n.log());
}

void require_at_least(LogSize n, double lowest, const char* who) {
  if (!(n.value() >= lowest)) {
    throw DomainError(std::string(who) + ": requires n0 >= " +
                      std::to_string(static_cast<int>(lowest)));
  }
}

// Shared by theorem_constant and cminus.
double negative_half_constant(LogSize n0) {
  if (n0.value() < 16.0) return 1.0;
  const double b = exact_b(n0);
  return (2.0 / (3.0 * b * b) + inverse(n0) / kSqrtE) * n0.log();
}

double quarter_mean(std::span<const double> values, bool last) {
  const std::size_t q = std::max<std::size_t>(1, values.size() / 4);
  const auto first = last ? values.end() - static_cast<std::ptrdiff_t>(q)
                          : values.begin();
  return std::accumulate(first, first + static_cast<std::ptrdiff_t>(q), 0.0) /
         static_cast<double>(q);
}

}  // namespace

BoundCertificate BoundCertificate::make(std::string name,
                                        std::variant<double, LogSize> argument,
                                        double lhs, double rhs) {
  BoundCertificate c;
  c.name = std::move(name);
  c.argument = argument;
  c.lhs = lhs;
  c.rhs = rhs;
  c.margin = rhs - lhs;
  c.pass = c.margin > 0.0;
  return c;
}

std::pair<double, double> hall_square_bounds(LogSize n) {
  if (!(n.log() >= kLogTwo)) throw DomainError("hall_square_bounds: n >= 2");
  const double two_log = 2.0 * n.log();
  return {two_log - (kLogFourPi + std::log(n.log())), two_log};
}

std::pair<BoundCertificate, BoundCertificate> check_prop4(LogSize n) {
  const auto [lower, upper] = hall_square_bounds(n);
  const double b = exact_b(n);
  return {BoundCertificate::make("prop4_lower", n, lower, b * b),
          BoundCertificate::make("prop4_upper", n, b * b, upper)};
}

double k_constant(LogSize n0) {
  require_at_least(n0, 3.0, "k_constant");
  const double b = exact_b(n0);
  return b * b / n0.log();
}

double theorem_constant(LogSize n0) {
  require_at_least(n0, 5.0, "theorem_constant");
  return negative_half_constant(n0);
}

double theorem_constant_tilde(LogSize n0) {
  require_at_least(n0, 16.0, "theorem_constant_tilde");
  const double two_log = 2.0 * n0.log();
  const double ratio = (kLogFourPi + std::log(n0.log())) / two_log;
  if (!(ratio < 1.0)) {
    throw DomainError("theorem_constant_tilde: 2 ln n0 <= ln(4 pi ln n0)");
  }
  return (1.0 / 3.0) / (1.0 - ratio) + n0.log() * inverse(n0) / kSqrtE;
}

double cplus(LogSize n0) {
  require_at_least(n0, 3.0, "cplus");
  const double b = exact_b(n0);
  return (1.0 / (kE * b * b) + 0.5 * inverse_minus_one(n0)) * n0.log();
}

double cbarplus(LogSize n0) {
  require_at_least(n0, 3.0, "cbarplus");
  const double b = exact_b(n0);
  const double peak = (kSqrt2 + 1.0) / std::exp(kSqrt2);
  return peak * n0.log() / (b * b) + 0.5 * n0.log() * inverse_minus_one(n0);
}

double cminus(LogSize n0) {
  require_at_least(n0, 3.0, "cminus");
  return negative_half_constant(n0);
}

double i_n_integral(LogSize n, const NormingPair& pair, double x) {
  const double b = exact_b(n);
  if (std::fabs(pair.location - b) > 1e-12 * (1.0 + b)) {
    throw DomainError("i_n_integral: pair location must be exact_b(n)");
  }
  const double upper = pair.scale * x + pair.location;
  return integrate(normal_hazard, pair.location, upper, 1e-10).value;
}

DecompositionSample decomposition_sample(LogSize n, const NormingPair& pair,
                                         double x) {
  DecompositionSample s;
  s.n = n;
  s.x = x;
  s.i_n = i_n_integral(n, pair, x);
  s.log_max_cdf = log_max_cdf(n, pair, x);
  const double e_minus_i = std::exp(-s.i_n);
  s.c_n = std::exp(-s.i_n - n.log());
  s.s_n = (-s.log_max_cdf - e_minus_i) * inverse(n);
  s.s_n_bound = s.c_n * s.c_n / (2.0 * (1.0 - s.c_n));
  s.inside = s.s_n > 0.0 && s.s_n < s.s_n_bound;
  return s;
}

double proof_function_p(double y) {
  const double y2 = y * y;
  return 4.0 / (kE * kE) * y2 *
         std::exp((2.0 - 23.0 * y2) / (10.0 * (y2 + 1.0)) * std::log(y));
}

double proof_function_q(double x) {
  const double poly = -x + 0.5 * x * x;
  return poly * std::exp(-x - std::exp(-x) + poly * std::exp(0.6 * x));
}

std::array<ProofConstant, 3> proof_constants_check() {
  struct Spec {
    const char* name;
    double (*f)(double);
    double lo, hi, bound, argmax_lo, argmax_hi;
  };
  const Spec specs[3] = {
      {"f8_max",
       [](double y) {
         const double y2 = y * y;
         return 25.0 * y2 * std::log(y) / (32.0 * (y2 + 1.0) * (y2 + 1.0));
       },
       1.0, 50.0, 0.1, 2.16, 2.17},
      {"p_max", proof_function_p, 1.0, 50.0, 0.66, 1.532, 1.533},
      {"q_max", proof_function_q, -30.0, 0.0, 0.63, -1.051, -1.050},
  };
  std::array<ProofConstant, 3> out;
  for (int i = 0; i < 3; ++i) {
    const Spec& s = specs[i];
    const Maximum m = scan_and_refine_max(s.f, s.lo, s.hi);
    out[i].bound = BoundCertificate::make(s.name, m.argmax, m.value, s.bound);
    out[i].argmax = m.argmax;
    out[i].interval_lo = s.argmax_lo;
    out[i].interval_hi = s.argmax_hi;
    out[i].argmax_inside = m.argmax > s.argmax_lo && m.argmax < s.argmax_hi;
  }
  return out;
}

std::vector<BoundCertificate> theorem1_certify(LogSize n0,
                                               std::span<const LogSize> ns,
                                               double tol) {
  const double constant = theorem_constant(n0);
  std::vector<BoundCertificate> out;
  out.reserve(ns.size());
  for (const LogSize& n : ns) {
    if (n.log() < n0.log()) {
      throw DomainError("theorem1_certify: every n must be >= n0");
    }
    const NormingPair pair = norming_pair(
        ApproxMethod::of(ApproxMethod::Kind::Exact),
        AuxiliaryKind::FisherTippett, n);
    const DistanceReport r = sup_distance(n, pair, tol);
    out.push_back(BoundCertificate::make("theorem1", n, r.scaled, constant));
  }
  return out;
}

std::vector<LogSize> log_grid(LogSize lo, LogSize hi, int count) {
  std::vector<LogSize> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    if (i == 0) {
      out.push_back(lo);
    } else if (i == count - 1) {
      out.push_back(hi);
    } else {
      const double t = static_cast<double>(i) / (count - 1);
      out.push_back(LogSize::from_log(lo.log() + t * (hi.log() - lo.log())));
    }
  }
  return out;
}

std::vector<BoundCertificate> prop4_suite(std::span<const LogSize> grid) {
  std::vector<BoundCertificate> out;
  for (const LogSize& n : grid) {
    auto [lower, upper] = check_prop4(n);
    out.push_back(std::move(lower));
    out.push_back(std::move(upper));
  }
  return out;
}

std::vector<BoundCertificate> prop5_suite(std::span<const LogSize> grid,
                                          std::span<const LogSize> pair_grid) {
  std::vector<BoundCertificate> out;
  auto ratio = [](LogSize n) {
    const double b = exact_b(n);
    return b * b / n.log();
  };
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    out.push_back(BoundCertificate::make("prop5_increasing", grid[i + 1],
                                         ratio(grid[i]), ratio(grid[i + 1])));
  }
  std::vector<double> b2(pair_grid.size());
  for (std::size_t i = 0; i < pair_grid.size(); ++i) {
    const double b = exact_b(pair_grid[i]);
    b2[i] = b * b;
  }
  for (std::size_t i = 0; i < pair_grid.size(); ++i) {
    const double k = k_constant(pair_grid[i]);
    for (std::size_t j = i + 1; j < pair_grid.size(); ++j) {
      out.push_back(BoundCertificate::make(
          "prop5_k_bound", pair_grid[j], k * pair_grid[j].log(), b2[j]));
    }
  }
  return out;
}

std::vector<BoundCertificate> hall_suite(std::span<const LogSize> ns,
                                         double lower, double tol,
                                         unsigned jobs) {
  std::vector<double> scaled(ns.size());
  parallel_for(ns.size(), jobs, [&](std::size_t i) {
    const NormingPair pair =
        norming_pair(ApproxMethod::of(ApproxMethod::Kind::HallStar),
                     AuxiliaryKind::Hall, ns[i]);
    scaled[i] = sup_distance(ns[i], pair, tol).scaled;
  });
  std::vector<BoundCertificate> out;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    out.push_back(BoundCertificate::make("hall_upper", ns[i], scaled[i], 3.0));
    if (ns[i].log() >= 3.0 * kLogTen - 1e-9) {
      out.push_back(
          BoundCertificate::make("hall_lower", ns[i], lower, scaled[i]));
    }
  }
  return out;
}

std::vector<BoundCertificate> dife_suite(std::span<const LogSize> ns,
                                         std::span<const double> xs) {
  std::vector<BoundCertificate> out;
  for (const LogSize& n : ns) {
    const NormingPair pair =
        norming_pair(ApproxMethod::of(ApproxMethod::Kind::Exact),
                     AuxiliaryKind::FisherTippett, n);
    for (const double x : xs) {
      const DecompositionSample s = decomposition_sample(n, pair, x);
      const double log_n_q =
          n.log() +
          std_normal_survival(pair.scale * x + pair.location).log_value;
      out.push_back(BoundCertificate::make("dife_identity", n,
                                           std::fabs(s.i_n + log_n_q), 1e-8));
      out.push_back(BoundCertificate::make("dife_s_positive", n, 0.0, s.s_n));
      out.push_back(
          BoundCertificate::make("dife_s_bound", n, s.s_n, s.s_n_bound));
    }
  }
  return out;
}

std::vector<BoundCertificate> proof_constants_suite() {
  std::vector<BoundCertificate> out;
  for (const ProofConstant& c : proof_constants_check()) {
    out.push_back(c.bound);
    const std::string stem = c.bound.name.substr(0, c.bound.name.find('_'));
    out.push_back(BoundCertificate::make(stem + "_argmax_lo", c.argmax,
                                         c.interval_lo, c.argmax));
    out.push_back(BoundCertificate::make(stem + "_argmax_hi", c.argmax,
                                         c.argmax, c.interval_hi));
  }
  return out;
}

std::vector<RateSeries> rate_series(std::span<const LogSize> grid) {
  using Kind = ApproxMethod::Kind;
  auto loc = [](Kind k, LogSize n) {
    return approx_location(ApproxMethod::of(k), n);
  };
  std::vector<RateSeries> out = {
      {"barbeta_vs_exact", {}},          {"betafinal_vs_exact", {}},
      {"tildebeta_vs_exact", {}},        {"barbetastar_vs_hallstar", {}},
      {"tildebetastar_vs_hallstar", {}}, {"exact_vs_hallstar", {}},
      {"barbeta_vs_betastar", {}},       {"barbeta_vs_barbetastar", {}},
  };
  for (const LogSize& n : grid) {
    const double l = n.log();
    const double ll = std::log(l);
    // Reciprocals of the three rates.
    const double fast = std::pow(l, 2.5) / (ll * ll);
    const double slow = std::pow(l, 1.5);
    const double slow_log = slow / (ll * ll);
    const double b = loc(Kind::Exact, n);
    const double bs = loc(Kind::HallStar, n);
    const double bar = loc(Kind::BarBeta, n);
    out[0].scaled.push_back(std::fabs(b - bar) * fast);
    out[1].scaled.push_back(std::fabs(b - loc(Kind::BetaFinal, n)) * fast);
    out[2].scaled.push_back(std::fabs(b - loc(Kind::TildeBeta, n)) * fast);
    out[3].scaled.push_back(std::fabs(bs - loc(Kind::BarBetaStar, n)) * fast);
    out[4].scaled.push_back(std::fabs(bs - loc(Kind::TildeBetaStar, n)) *
                            fast);
    out[5].scaled.push_back(std::fabs(b - bs) * slow);
    out[6].scaled.push_back(std::fabs(bar - loc(Kind::BetaStar, n)) *
                            slow_log);
    out[7].scaled.push_back(std::fabs(bar - loc(Kind::BarBetaStar, n)) * slow);
  }
  return out;
}

BoundCertificate trend_certificate(const std::string& name,
                                   std::span<const double> values) {
  return BoundCertificate::make(name, static_cast<double>(values.size()),
                                quarter_mean(values, true),
                                quarter_mean(values, false));
}

std::vector<BoundCertificate> rates_suite(std::span<const LogSize> grid) {
  std::vector<BoundCertificate> out;
  for (const RateSeries& s : rate_series(grid)) {
    if (s.name == "barbeta_vs_exact" || s.name == "exact_vs_hallstar" ||
        s.name == "barbeta_vs_barbetastar") {
      out.push_back(trend_certificate("rate_" + s.name, s.scaled));
    }
  }
  return out;
}

}  // namespace normmax
