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

#include "normmax/norming.hpp"

#include <cstdio>
#include <cmath>
#include <stdexcept>
#include <string>

#include "normmax/errors.hpp"
#include "normmax/specfn.hpp"

namespace normmax {
namespace {

constexpr double kLogFourPi = 2.531024246969290792977891594269411;

[[noreturn]] void domain(const ApproxMethod& method, LogSize n,
                         const std::string& what) {
  throw DomainError(to_string(method) + " at ln n = " +
                    std::to_string(n.log()) + ": " + what);
}

// ln(n^2 / 2pi) without forming n^2.
double log_n2_over_2pi(LogSize n) { return 2.0 * n.log() - kLogTwoPi; }

double checked_sqrt(double radicand, const ApproxMethod& method, LogSize n) {
  if (!(radicand >= 0.0)) domain(method, n, "negative radicand");
  return std::sqrt(radicand);
}

// sqrt(2 ln n) - c/(2 sqrt(2 ln n)) - extra/(8 (2 ln n)^{3/2}),
// c = ln(4 pi ln n).
double sqrt_log_series(LogSize n, const ApproxMethod& method, int terms,
                       double third_offset) {
  if (!(n.log() > 0.0)) domain(method, n, "requires n > 1");
  const double two_log = 2.0 * n.log();
  const double s = std::sqrt(two_log);
  const double c = std::log(n.log()) + kLogFourPi;
  double b = s - c / (2.0 * s);
  if (terms >= 3) {
    b -= (c * c - 4.0 * c + third_offset) / (8.0 * two_log * s);
  }
  return b;
}

}  // namespace

bool LogSize::finite() const { return std::isfinite(value_); }

LogSize LogSize::from_value(double n) {
  if (!(n >= 1.0) || std::isinf(n)) {
    throw DomainError("LogSize: n must be finite and >= 1");
  }
  return LogSize(n, std::log(n));
}

LogSize LogSize::from_log(double log_n) {
  if (!(log_n >= 0.0) || std::isinf(log_n)) {
    throw DomainError("LogSize: ln n must be finite and >= 0");
  }
  return LogSize(std::exp(log_n), log_n);
}

LogSize LogSize::pow10(double k) {
  if (!(k >= 0.0) || std::isinf(k)) {
    throw DomainError("LogSize: exponent must be finite and >= 0");
  }
  return LogSize(std::pow(10.0, k), k * kLogTen);
}

bool operator==(const ApproxMethod& a, const ApproxMethod& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != ApproxMethod::Kind::BGeneral) return true;
  return a.p == b.p && a.q == b.q;
}

NormingPair NormingPair::identity() {
  return {0.0, 1.0, ApproxMethod::of(ApproxMethod::Kind::Exact),
          AuxiliaryKind::Canonical};
}

double exact_b(LogSize n) {
  if (!(n.log() >= kLogTwo)) {
    throw DomainError("exact_b: requires n >= 2");
  }
  return std_normal_quantile_upper(TailProbability::from_log(-n.log()));
}

double hall_b_star(LogSize n) {
  if (!(n.value() >= 3.0)) {
    throw DomainError("hall_b_star: requires n >= 3");
  }
  const double log_t = log_n2_over_2pi(n);
  const double w = (log_t >= 1.0) ? lambert_w_log_arg(log_t)
                                  : lambert_w0(std::exp(log_t));
  return std::sqrt(w);
}

double auxiliary_scale(AuxiliaryKind kind, double b) {
  switch (kind) {
    case AuxiliaryKind::Canonical:
      if (!(b >= 0.0)) {
        throw DegenerateScaleError("A_C requires location >= 0");
      }
      return mills_ratio(b);
    case AuxiliaryKind::FisherTippett:
      if (!(b > 0.0)) {
        throw DegenerateScaleError("A_F requires location > 0");
      }
      return b / (1.0 + b * b);
    case AuxiliaryKind::Hall:
      if (!(b > 0.0)) {
        throw DegenerateScaleError("A_H requires location > 0");
      }
      return 1.0 / b;
  }
  throw std::logic_error("auxiliary_scale: unknown kind");
}

double b_general_squared(LogSize n, double p, double q) {
  const ApproxMethod method = ApproxMethod::general(p, q);
  const double lt = log_n2_over_2pi(n);
  const double log_n2 = 2.0 * n.log();
  if (!(lt > 0.0)) domain(method, n, "requires n^2 > 2 pi");
  if (!(log_n2 + p > 0.0)) domain(method, n, "requires ln(n^2) + p > 0");
  if (!(log_n2 + q > 0.0)) domain(method, n, "requires ln(n^2) + q > 0");
  return lt - std::log(lt) + (std::log(log_n2 + p) - 2.0) / (log_n2 + q);
}

double approx_location(const ApproxMethod& method, LogSize n) {
  using Kind = ApproxMethod::Kind;
  switch (method.kind) {
    case Kind::Exact:
      return exact_b(n);
    case Kind::HallStar:
      return hall_b_star(n);
    case Kind::BetaStar:
      return sqrt_log_series(n, method, 2, 0.0);
    case Kind::TildeBetaStar:
      return sqrt_log_series(n, method, 3, 0.0);
    case Kind::TildeBeta:
      return sqrt_log_series(n, method, 3, 8.0);
    case Kind::BarBetaStar: {
      const double lt = log_n2_over_2pi(n);
      if (!(lt > 0.0)) domain(method, n, "requires n^2 > 2 pi");
      const double l2 = std::log(lt);
      return checked_sqrt(lt - l2 + l2 / lt, method, n);
    }
    case Kind::BarBeta:
      return checked_sqrt(b_general_squared(n, -kLogTwoPi, -kLogTwoPi),
                          method, n);
    case Kind::BetaFinal:
      return checked_sqrt(b_general_squared(n, 0.5, -kLogTwoPi), method, n);
    case Kind::BGeneral:
      return checked_sqrt(b_general_squared(n, method.p, method.q), method,
                          n);
  }
  throw std::logic_error("approx_location: unknown method");
}

NormingPair norming_pair(const ApproxMethod& method, AuxiliaryKind aux,
                         LogSize n) {
  const double location = approx_location(method, n);
  double scale = 0.0;
  try {
    scale = auxiliary_scale(aux, location);
  } catch (const DegenerateScaleError& e) {
    throw DegenerateScaleError(to_string(method) + "/" + to_string(aux) +
                               " at n = " + std::to_string(n.value()) + ": " +
                               e.what());
  }
  return {location, scale, method, aux};
}

std::string to_string(const ApproxMethod& method) {
  using Kind = ApproxMethod::Kind;
  switch (method.kind) {
    case Kind::Exact: return "exact";
    case Kind::HallStar: return "hallstar";
    case Kind::BetaStar: return "betastar";
    case Kind::BarBetaStar: return "barbetastar";
    case Kind::TildeBetaStar: return "tildebetastar";
    case Kind::BarBeta: return "barbeta";
    case Kind::TildeBeta: return "tildebeta";
    case Kind::BetaFinal: return "betafinal";
    case Kind::BGeneral: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "b(%.17g,%.17g)", method.p, method.q);
      return buf;
    }
  }
  return "unknown";
}

std::string to_string(AuxiliaryKind kind) {
  switch (kind) {
    case AuxiliaryKind::Canonical: return "ac";
    case AuxiliaryKind::FisherTippett: return "af";
    case AuxiliaryKind::Hall: return "ah";
  }
  return "unknown";
}

ApproxMethod parse_method(std::string_view text) {
  using Kind = ApproxMethod::Kind;
  static constexpr std::pair<std::string_view, Kind> kNames[] = {
      {"exact", Kind::Exact},
      {"hallstar", Kind::HallStar},
      {"betastar", Kind::BetaStar},
      {"barbetastar", Kind::BarBetaStar},
      {"tildebetastar", Kind::TildeBetaStar},
      {"barbeta", Kind::BarBeta},
      {"tildebeta", Kind::TildeBeta},
      {"betafinal", Kind::BetaFinal},
  };
  for (const auto& [name, kind] : kNames) {
    if (text == name) return ApproxMethod::of(kind);
  }
  // b(p,q)
  if (text.size() > 4 && text.substr(0, 2) == "b(" && text.back() == ')') {
    const std::string_view inner = text.substr(2, text.size() - 3);
    const auto comma = inner.find(',');
    if (comma != std::string_view::npos) {
      const std::string p_text(inner.substr(0, comma));
      const std::string q_text(inner.substr(comma + 1));
      std::size_t used_p = 0;
      std::size_t used_q = 0;
      try {
        const double p = std::stod(p_text, &used_p);
        const double q = std::stod(q_text, &used_q);
        if (used_p == p_text.size() && used_q == q_text.size()) {
          return ApproxMethod::general(p, q);
        }
      } catch (const std::exception&) {
      }
    }
  }
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

AuxiliaryKind parse_aux(std::string_view text) {
  if (text == "ac") return AuxiliaryKind::Canonical;
  if (text == "af") return AuxiliaryKind::FisherTippett;
  if (text == "ah") return AuxiliaryKind::Hall;
  throw std::invalid_argument("unknown auxiliary function '" +
                              std::string(text) + "'");
}

}  // namespace normmax
