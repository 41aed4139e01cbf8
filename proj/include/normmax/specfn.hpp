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

#ifndef NORMMAX_SPECFN_HPP_
#define NORMMAX_SPECFN_HPP_

// Standard normal tail functions, the Mills ratio, the Gumbel law and the
// principal branch of the Lambert W function, all in binary64.
//
// Tail quantities are carried with their natural logarithm so that
// probabilities far below the double range (1/n with n = 10^400, say) stay
// usable. The value field may underflow to zero; the log field never does.

namespace normmax {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kLogTwoPi = 1.837877066409345483560659472811235279;
inline constexpr double kLogTwo = 0.693147180559945309417232121458176568;
inline constexpr double kLogTen = 2.302585092994045684017991454684364208;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// A probability in (0, 1] together with its logarithm.
struct TailProbability {
  double value = 1.0;
  double log_value = 0.0;

  // Throws DomainError unless 0 < p <= 1.
  static TailProbability from_value(double p);
  // Throws DomainError unless log_p <= 0 (and not NaN).
  static TailProbability from_log(double log_p);
};

// Number of retained terms of the Lambert W asymptotic series (2, 3 or 4).
class ExpansionOrder {
 public:
  explicit ExpansionOrder(int terms);
  int terms() const { return terms_; }

 private:
  int terms_;
};

double std_normal_pdf(double x);
double std_normal_log_pdf(double x);

// Q(x) = 1 - Phi(x), never formed by subtraction from the CDF.
TailProbability std_normal_survival(double x);

// Returns x with Q(x) = p for 0 < p <= 1/2. Throws DomainError otherwise and
// NumericalError if the safeguarded Newton iteration does not settle.
double std_normal_quantile_upper(TailProbability p);

// A_C(x) = Q(x) / phi(x) for x >= 0.
double mills_ratio(double x);
// Rational sandwich x/(x^2+1) < A_C(x) < (x^2+2)/(x^3+3x), x > 0.
double mills_lower(double x);
double mills_upper(double x);
// V(x) = phi(x) / Q(x) for x >= 0.
double reciprocal_mills(double x);
// phi(x) / Q(x) for any real x (the normal hazard rate).
double normal_hazard(double x);

// ln(1 - e^{-u}) from ln u, accurate for u far below the double range.
double log_one_minus_exp_neg(double log_u);

double gumbel_cdf(double x);
double gumbel_pdf(double x);

// Principal branch W0 on t >= 0.
double lambert_w0(double t);
// Solves y + ln y = L for L >= 1, i.e. W(e^L) without forming e^L.
double lambert_w_log_arg(double log_t);
// L - ln L [+ ln L / L [+ ln L (ln L - 2) / (2 L^2)]] with L = ln t > 1.
double w_asymptotic(double log_t, ExpansionOrder order);
// L - ln L + (ln L - d1) / L with L = ln t > 1.
double u_d_asymptotic(double log_t, double d1);

}  // namespace normmax

#endif  // NORMMAX_SPECFN_HPP_
