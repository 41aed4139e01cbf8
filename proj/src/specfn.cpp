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

#include "normmax/specfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "normmax/errors.hpp"

namespace normmax {
namespace {

constexpr double kInvSqrtTwoPi = 0.398942280401432677939946059934381868;
constexpr double kSqrtHalf = 0.707106781186547524400844362104849039;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Below this argument Q comes from erfc; the argument rounding of x/sqrt(2)
// costs at most x^2 * eps relative error there. Above it the continued
// fraction for the Mills ratio converges in a few dozen terms.
constexpr double kContinuedFractionFrom = 4.0;

// x^2 split as hi + lo with hi = fl(x*x), exact to double-double.
struct Square {
  double hi;
  double lo;
};

Square exact_square(double x) {
  const double hi = x * x;
  return {hi, std::fma(x, x, -hi)};
}

// Mills ratio by modified Lentz on 1/(x+ 1/(x+ 2/(x+ 3/(x+ ...)))).
double mills_continued_fraction(double x) {
  constexpr double kTiny = 1e-300;
  double f = x;
  double c = f;
  double d = 0.0;
  for (int k = 1; k < 5000; ++k) {
    d = x + k * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    c = x + k / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) <= 0.5 * kEps) break;
  }
  return 1.0 / f;
}

struct TailState {
  double q;      // Q(x), may underflow to 0
  double log_q;  // ln Q(x)
  double mills;  // Q(x) / phi(x)
};

// Valid for x >= 0.
TailState upper_tail(double x) {
  if (std::isinf(x)) {
    return {0.0, -std::numeric_limits<double>::infinity(), 0.0};
  }
  if (x < kContinuedFractionFrom) {
    const double q = 0.5 * std::erfc(x * kSqrtHalf);
    return {q, std::log(q), q / std_normal_pdf(x)};
  }
  const double r = mills_continued_fraction(x);
  return {std_normal_pdf(x) * r, std_normal_log_pdf(x) + std::log(r), r};
}

[[noreturn]] void domain(const std::string& what) { throw DomainError(what); }

}  // namespace

TailProbability TailProbability::from_value(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    domain("TailProbability: value " + std::to_string(p) + " outside (0, 1]");
  }
  return {p, std::log(p)};
}

TailProbability TailProbability::from_log(double log_p) {
  if (!(log_p <= 0.0)) {
    domain("TailProbability: log value " + std::to_string(log_p) + " > 0");
  }
  return {std::exp(log_p), log_p};
}

ExpansionOrder::ExpansionOrder(int terms) : terms_(terms) {
  if (terms < 2 || terms > 4) {
    domain("ExpansionOrder: terms must be 2, 3 or 4, got " +
           std::to_string(terms));
  }
}

double std_normal_pdf(double x) {
  const Square s = exact_square(x);
  return kInvSqrtTwoPi * std::exp(-0.5 * s.hi) * (1.0 - 0.5 * s.lo);
}

double std_normal_log_pdf(double x) {
  const Square s = exact_square(x);
  return -0.5 * s.hi - 0.5 * s.lo - 0.5 * kLogTwoPi;
}

TailProbability std_normal_survival(double x) {
  if (x >= 0.0) {
    const TailState t = upper_tail(x);
    return {t.q, t.log_q};
  }
  // Q(x) = 1 - Q(-x) with Q(-x) < 1/2, so no cancellation.
  const TailState t = upper_tail(-x);
  const double log_value = (t.q > 0.0) ? std::log1p(-t.q) : -std::exp(t.log_q);
  return {1.0 - t.q, log_value};
}

double std_normal_quantile_upper(TailProbability p) {
  const double log_p = p.log_value;
  if (!(log_p <= -kLogTwo)) {
    if (log_p - (-kLogTwo) <= 4 * kEps) return 0.0;
    domain("std_normal_quantile_upper: p outside (0, 1/2]");
  }
  if (log_p == -kLogTwo) return 0.0;

  // Seed from the U_D expansion of the equation phi(x) A(x) = p.
  const double seed_log = -2.0 * log_p - kLogTwoPi;
  double x = 0.5;
  if (seed_log > 1.0) {
    x = std::sqrt(std::max(0.0, u_d_asymptotic(seed_log, 2.0)));
  }
  double lo = 0.0;
  double hi = std::max(45.0, std::sqrt(-2.0 * log_p) + 1.0);
  x = std::clamp(x, lo, hi);

  // f(x) = ln Q(x) - ln p is decreasing with f'(x) = -1 / A_C(x).
  for (int iter = 0; iter < 60; ++iter) {
    const TailState t = upper_tail(x);
    const double f = t.log_q - log_p;
    if (f > 0.0) {
      lo = x;
    } else if (f < 0.0) {
      hi = x;
    } else {
      return x;
    }
    const double step = f * t.mills;
    if (std::fabs(step) <= 1e-14 * (1.0 + std::fabs(x))) return x + step;
    double next = x + step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  throw NumericalError("std_normal_quantile_upper: no convergence in 60 steps");
}

double mills_ratio(double x) {
  if (!(x >= 0.0)) domain("mills_ratio: requires x >= 0");
  return upper_tail(x).mills;
}

double mills_lower(double x) {
  if (!(x > 0.0)) domain("mills_lower: requires x > 0");
  return x / (x * x + 1.0);
}

double mills_upper(double x) {
  if (!(x > 0.0)) domain("mills_upper: requires x > 0");
  return (x * x + 2.0) / (x * (x * x + 3.0));
}

double reciprocal_mills(double x) {
  if (!(x >= 0.0)) domain("reciprocal_mills: requires x >= 0");
  return 1.0 / upper_tail(x).mills;
}

double normal_hazard(double x) {
  if (x >= 0.0) return 1.0 / upper_tail(x).mills;
  const TailState t = upper_tail(-x);
  return std_normal_pdf(x) / (1.0 - t.q);
}

double log_one_minus_exp_neg(double log_u) {
  const double u = std::exp(log_u);
  if (log_u < -20.0) return log_u - 0.5 * u;
  return std::log(-std::expm1(-u));
}

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }

double gumbel_pdf(double x) {
  const double e = std::exp(-x);
  return std::exp(-x - e);
}

double lambert_w0(double t) {
  if (!(t >= 0.0)) domain("lambert_w0: requires t >= 0");
  if (t == 0.0) return 0.0;
  if (std::isinf(t)) return t;
  const double log_t = std::log(t);
  if (log_t > 700.0) return lambert_w_log_arg(log_t);

  double w = (log_t > 1.0) ? w_asymptotic(log_t, ExpansionOrder(3))
                           : std::log1p(t);
  for (int iter = 0; iter < 64; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - t;
    const double fp = ew * (w + 1.0);
    const double step = f / (fp - (w + 2.0) * f / (2.0 * w + 2.0));
    w -= step;
    if (std::fabs(step) <= 2.0 * kEps * std::fabs(w)) break;
  }
  return w;
}

double lambert_w_log_arg(double log_t) {
  if (!(log_t >= 1.0)) domain("lambert_w_log_arg: requires L >= 1");
  if (log_t == 1.0) return 1.0;
  double y = log_t - std::log(log_t);
  if (log_t > 3.0) y += std::log(log_t) / log_t;
  // Halley on g(y) = y + ln y - L, g' = 1 + 1/y, g'' = -1/y^2.
  for (int iter = 0; iter < 64; ++iter) {
    const double g = y + std::log(y) - log_t;
    const double gp = 1.0 + 1.0 / y;
    const double gpp = -1.0 / (y * y);
    const double step = g / (gp - 0.5 * g * gpp / gp);
    y -= step;
    if (std::fabs(step) <= 2.0 * kEps * y) break;
  }
  return y;
}

double w_asymptotic(double log_t, ExpansionOrder order) {
  if (!(log_t > 1.0)) domain("w_asymptotic: requires L > 1");
  const double l1 = log_t;
  const double l2 = std::log(l1);
  double w = l1 - l2;
  if (order.terms() >= 3) w += l2 / l1;
  if (order.terms() >= 4) w += l2 * (l2 - 2.0) / (2.0 * l1 * l1);
  return w;
}

double u_d_asymptotic(double log_t, double d1) {
  if (!(log_t > 1.0)) domain("u_d_asymptotic: requires L > 1");
  const double l2 = std::log(log_t);
  return log_t - l2 + (l2 - d1) / log_t;
}

}  // namespace normmax
