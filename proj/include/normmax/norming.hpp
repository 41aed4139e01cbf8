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

#ifndef NORMMAX_NORMING_HPP_
#define NORMMAX_NORMING_HPP_

#include <string>
#include <string_view>

namespace normmax {

// A sample size n carried with ln n. For n beyond the double range the value
// is +inf and the logarithm is authoritative.
class LogSize {
 public:
  // Throws DomainError unless n >= 1 and finite.
  static LogSize from_value(double n);
  // Throws DomainError unless log_n >= 0.
  static LogSize from_log(double log_n);
  // n = 10^k with ln n = k ln 10 exactly to double precision.
  static LogSize pow10(double k);

  double value() const { return value_; }
  double log() const { return log_; }
  bool finite() const;

 private:
  LogSize(double value, double log_n) : value_(value), log_(log_n) {}
  double value_;
  double log_;
};

enum class AuxiliaryKind { Canonical, FisherTippett, Hall };

// Location-constant families. BGeneral carries its own (p, q).
struct ApproxMethod {
  enum class Kind {
    Exact,
    HallStar,
    BetaStar,
    BarBetaStar,
    TildeBetaStar,
    BarBeta,
    TildeBeta,
    BetaFinal,
    BGeneral,
  };

  Kind kind = Kind::Exact;
  double p = 0.0;
  double q = 0.0;

  static ApproxMethod of(Kind kind) { return {kind, 0.0, 0.0}; }
  static ApproxMethod general(double p, double q) {
    return {Kind::BGeneral, p, q};
  }
};

bool operator==(const ApproxMethod& a, const ApproxMethod& b);

struct NormingPair {
  double location = 0.0;
  double scale = 1.0;
  ApproxMethod method;
  AuxiliaryKind aux = AuxiliaryKind::Canonical;

  // (a, b) = (1, 0); M_1 is then a plain standard normal.
  static NormingPair identity();
};

// b_n = Q^{-1}(1/n), n >= 2.
double exact_b(LogSize n);

// Root b > 1 of phi(b) / b = 1/n, i.e. sqrt(W(n^2 / 2pi)); n >= 3.
double hall_b_star(LogSize n);

// A_C(b), A_F(b) = b/(1+b^2) or A_H(b) = 1/b.
double auxiliary_scale(AuxiliaryKind kind, double b);

// Closed form (or, for Exact and HallStar, the root) of the chosen family.
double approx_location(const ApproxMethod& method, LogSize n);

// B_n(p, q)^2, the radicand of the two-parameter family. Exposed for the
// calibration root finder, which works on the square.
double b_general_squared(LogSize n, double p, double q);

// location = approx_location(method, n), scale = auxiliary_scale(aux, location).
NormingPair norming_pair(const ApproxMethod& method, AuxiliaryKind aux,
                         LogSize n);

std::string to_string(const ApproxMethod& method);
std::string to_string(AuxiliaryKind kind);
// Accepts the lowercase names produced by to_string, plus "b(p,q)".
// Throws std::invalid_argument on anything else.
ApproxMethod parse_method(std::string_view text);
AuxiliaryKind parse_aux(std::string_view text);

}  // namespace normmax

#endif  // NORMMAX_NORMING_HPP_
