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
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "normmax/errors.hpp"
#include "normmax/norming.hpp"
#include "normmax/specfn.hpp"
#include "reference_values.hpp"

using namespace normmax;
using Kind = ApproxMethod::Kind;

namespace {

double at(Kind kind, double k) {
  return approx_location(ApproxMethod::of(kind), LogSize::pow10(k));
}

double max_abs(const std::vector<double>& v, std::size_t from, std::size_t to) {
  double m = 0.0;
  for (std::size_t i = from; i < to; ++i) m = std::max(m, std::fabs(v[i]));
  return m;
}

// Largest |v| over the last quarter relative to the second quarter.
double tail_growth(const std::vector<double>& v) {
  const std::size_t q = v.size() / 4;
  return max_abs(v, v.size() - q, v.size()) / max_abs(v, q, 2 * q);
}

}  // namespace

TEST_CASE("LogSize") {
  const LogSize n = LogSize::from_value(1000.0);
  CHECK(n.log() == doctest::Approx(std::log(1000.0)).epsilon(1e-15));
  CHECK(n.finite());
  const LogSize big = LogSize::pow10(100);
  CHECK(big.log() == 100.0 * kLogTen);
  CHECK(big.finite());
  const LogSize huge = LogSize::pow10(400);
  CHECK_FALSE(huge.finite());
  CHECK(std::isinf(huge.value()));
  CHECK(LogSize::from_log(std::log(50.0)).value() ==
        doctest::Approx(50.0).epsilon(1e-14));
  CHECK_THROWS_AS(LogSize::from_value(0.5), DomainError);
  CHECK_THROWS_AS(LogSize::from_value(INFINITY), DomainError);
  CHECK_THROWS_AS(LogSize::from_log(-1.0), DomainError);
}

TEST_CASE("exact b_n") {
  CHECK(std::fabs(exact_b(LogSize::from_value(2.0))) <= 1e-14);
  CHECK(exact_b(LogSize::from_value(10.0)) ==
        doctest::Approx(1.28155).epsilon(4e-6));
  CHECK(std::fabs(exact_b(LogSize::pow10(30)) - 11.46402) <= 1e-5);
  CHECK_THROWS_AS(exact_b(LogSize::from_value(1.5)), DomainError);

  for (const auto& r : reference::kNorming) {
    CAPTURE(r.k);
    CHECK(exact_b(LogSize::pow10(r.k)) ==
          doctest::Approx(r.exact_b).epsilon(1e-13));
  }
  SUBCASE("defining residual") {
    for (int k = 1; k <= 60; ++k) {
      const LogSize n = LogSize::pow10(k);
      const double b = exact_b(n);
      CAPTURE(k);
      CHECK(std::fabs(std::expm1(n.log() + std_normal_survival(b).log_value)) <=
            1e-11);
    }
  }
}

TEST_CASE("Hall b*_n") {
  CHECK(hall_b_star(LogSize::from_value(10.0)) ==
        doctest::Approx(1.43165).epsilon(4e-6));
  CHECK(std::fabs(hall_b_star(LogSize::pow10(10)) - 6.36492) <= 1e-5);
  CHECK(std::fabs(hall_b_star(LogSize::pow10(60)) - 16.39750) <= 1e-5);
  CHECK_THROWS_AS(hall_b_star(LogSize::from_value(2.0)), DomainError);
  CHECK(hall_b_star(LogSize::from_value(3.0)) > 0.0);

  for (const auto& r : reference::kNorming) {
    CAPTURE(r.k);
    CHECK(hall_b_star(LogSize::pow10(r.k)) ==
          doctest::Approx(r.hall_b_star).epsilon(1e-13));
  }
  SUBCASE("defining residual and ordering") {
    for (int k = 1; k <= 60; ++k) {
      const LogSize n = LogSize::pow10(k);
      const double b = hall_b_star(n);
      CAPTURE(k);
      CHECK(std::fabs(std::expm1(n.log() + std_normal_log_pdf(b) -
                                 std::log(b))) <= 1e-11);
      CHECK(exact_b(n) < b);
    }
  }
  SUBCASE("100 digits") {
    const double b = hall_b_star(LogSize::pow10(100));
    CHECK(b == doctest::Approx(reference::kNorming[7].hall_b_star).epsilon(1e-13));
  }
}

TEST_CASE("auxiliary scales") {
  CHECK(auxiliary_scale(AuxiliaryKind::FisherTippett, 1.0) == 0.5);
  CHECK(auxiliary_scale(AuxiliaryKind::Hall, 2.0) == 0.5);
  CHECK(auxiliary_scale(AuxiliaryKind::Canonical, 0.0) ==
        doctest::Approx(std::sqrt(kPi / 2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(auxiliary_scale(AuxiliaryKind::Hall, 0.0),
                  DegenerateScaleError);
  CHECK_THROWS_AS(auxiliary_scale(AuxiliaryKind::FisherTippett, -1.0),
                  DegenerateScaleError);
  CHECK_THROWS_AS(auxiliary_scale(AuxiliaryKind::Canonical, -1.0),
                  DegenerateScaleError);

  for (double b = 0.01; b < 40.0; b *= 1.15) {
    CAPTURE(b);
    const double c = auxiliary_scale(AuxiliaryKind::Canonical, b);
    CHECK(c < auxiliary_scale(AuxiliaryKind::Hall, b));
    CHECK(auxiliary_scale(AuxiliaryKind::FisherTippett, b) < c);
    CHECK(auxiliary_scale(AuxiliaryKind::FisherTippett, b) <
          auxiliary_scale(AuxiliaryKind::Hall, b));
  }
}

TEST_CASE("closed-form approximants against Table 3") {
  CHECK(std::fabs(at(Kind::BetaFinal, 1) - 1.27115) <= 1e-5);
  CHECK(std::fabs(at(Kind::BarBeta, 1) - 1.18090) <= 1e-5);
  CHECK(std::fabs(at(Kind::BetaStar, 5) - 4.28019) <= 1e-5);
  CHECK(std::fabs(at(Kind::BarBetaStar, 2) - 2.37607) <= 1e-5);
  CHECK(std::fabs(at(Kind::Exact, 30) - 11.46402) <= 1e-5);
  CHECK(std::fabs(at(Kind::HallStar, 1) - 1.43165) <= 1e-5);
}

TEST_CASE("B(p, q) reduces to the named families") {
  for (int k = 1; k <= 100; k += 3) {
    const LogSize n = LogSize::pow10(k);
    CAPTURE(k);
    const double bar = approx_location(ApproxMethod::of(Kind::BarBeta), n);
    const double fin = approx_location(ApproxMethod::of(Kind::BetaFinal), n);
    CHECK(std::fabs(approx_location(
                        ApproxMethod::general(-kLogTwoPi, -kLogTwoPi), n) -
                    bar) <= 1e-15 * bar);
    CHECK(std::fabs(approx_location(ApproxMethod::general(0.5, -kLogTwoPi), n) -
                    fin) <= 1e-15 * fin);
    const double sq = b_general_squared(n, 0.5, -kLogTwoPi);
    CHECK(std::sqrt(sq) == doctest::Approx(fin).epsilon(1e-15));
  }
}

TEST_CASE("approximant domain") {
  CHECK_THROWS_AS(approx_location(ApproxMethod::general(-3.0, 0.0),
                                  LogSize::from_value(2.0)),
                  DomainError);
  CHECK_THROWS_AS(approx_location(ApproxMethod::general(0.0, -2.0),
                                  LogSize::from_value(2.0)),
                  DomainError);
}

TEST_CASE("approximation rates stay bounded") {
  // Scaled errors along n = 10^k, k = 2..60.
  std::vector<double> bar;
  std::vector<double> fin;
  std::vector<double> tilde;
  std::vector<double> bar_star;
  std::vector<double> tilde_star;
  std::vector<double> hall_gap;
  for (int k = 2; k <= 60; ++k) {
    const LogSize n = LogSize::pow10(k);
    const double l = n.log();
    const double rate = std::pow(l, 2.5) / std::pow(std::log(l), 2);
    const double b = exact_b(n);
    const double bs = hall_b_star(n);
    bar.push_back((b - at(Kind::BarBeta, k)) * rate);
    fin.push_back((b - at(Kind::BetaFinal, k)) * rate);
    tilde.push_back((b - at(Kind::TildeBeta, k)) * rate);
    bar_star.push_back((bs - at(Kind::BarBetaStar, k)) * rate);
    tilde_star.push_back((bs - at(Kind::TildeBetaStar, k)) * rate);
    hall_gap.push_back((b - bs) * std::pow(l, 1.5));
  }
  for (const auto* v : {&bar, &fin, &tilde, &bar_star, &tilde_star}) {
    CHECK(max_abs(*v, 0, v->size()) < 0.25);
    CHECK(tail_growth(*v) < 1.5);
  }
  CHECK(max_abs(hall_gap, 0, hall_gap.size()) < 0.5);
  CHECK(tail_growth(hall_gap) < 1.0);
}

TEST_CASE("norming pairs") {
  const LogSize ten = LogSize::from_value(10.0);
  const NormingPair p =
      norming_pair(ApproxMethod::of(Kind::Exact), AuxiliaryKind::FisherTippett, ten);
  CHECK(p.location == doctest::Approx(1.28155).epsilon(4e-6));
  CHECK(p.scale == p.location / (1.0 + p.location * p.location));
  const NormingPair h =
      norming_pair(ApproxMethod::of(Kind::HallStar), AuxiliaryKind::Hall, ten);
  CHECK(h.scale == 1.0 / h.location);
  CHECK_THROWS_AS(norming_pair(ApproxMethod::of(Kind::Exact),
                               AuxiliaryKind::FisherTippett,
                               LogSize::from_value(2.0)),
                  DegenerateScaleError);
  const NormingPair id = NormingPair::identity();
  CHECK(id.location == 0.0);
  CHECK(id.scale == 1.0);
}

TEST_CASE("names round-trip") {
  for (const Kind k :
       {Kind::Exact, Kind::HallStar, Kind::BetaStar, Kind::BarBetaStar,
        Kind::TildeBetaStar, Kind::BarBeta, Kind::TildeBeta, Kind::BetaFinal}) {
    const ApproxMethod m = ApproxMethod::of(k);
    CHECK(parse_method(to_string(m)) == m);
  }
  for (const AuxiliaryKind a : {AuxiliaryKind::Canonical,
                                AuxiliaryKind::FisherTippett, AuxiliaryKind::Hall}) {
    CHECK(parse_aux(to_string(a)) == a);
  }
  CHECK(parse_method("b(0.5,-1.8378770664093453)").kind == Kind::BGeneral);
  CHECK(parse_method("b(0.5,-2)").q == -2.0);
  CHECK_THROWS_AS(parse_method("nope"), std::invalid_argument);
  CHECK_THROWS_AS(parse_aux("ax"), std::invalid_argument);
}
