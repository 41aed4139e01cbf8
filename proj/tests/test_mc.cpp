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

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "normmax/distance.hpp"
#include "normmax/errors.hpp"
#include "normmax/mc.hpp"
#include "normmax/specfn.hpp"

using namespace normmax;
using Kind = ApproxMethod::Kind;

TEST_CASE("uniform stream") {
  double sum = 0.0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const double u = uniform_at(7, i);
    CHECK_UNARY(u > 0.0 && u < 1.0);
    sum += u;
  }
  CHECK(sum / 100000.0 == doctest::Approx(0.5).epsilon(0.01));
  CHECK(uniform_at(7, 3) == uniform_at(7, 3));
  CHECK(uniform_at(7, 3) != uniform_at(8, 3));
}

TEST_CASE("sample_max transform") {
  const LogSize one = LogSize::from_value(1.0);
  CHECK(std::fabs(sample_max(one, 0.5)) < 1e-15);
  for (const double n : {2.0, 10.0, 1000.0}) {
    const LogSize ln = LogSize::from_value(n);
    CHECK(std::fabs(sample_max(ln, std::pow(0.5, n))) < 1e-12);
    // Median of M_n is Phi^{-1}(0.5^{1/n}).
    const double expected = std_normal_quantile_upper(
        TailProbability::from_value(-std::expm1(std::log(0.5) / n)));
    CHECK(sample_max(ln, 0.5) == doctest::Approx(expected).epsilon(1e-13));
  }
  CHECK_THROWS_AS(sample_max(one, 0.0), DomainError);
  CHECK_THROWS_AS(sample_max(one, 1.0), DomainError);

  SUBCASE("no saturation at n = 10^30") {
    const LogSize big = LogSize::pow10(30);
    double prev = -INFINITY;
    for (const double u : {1e-300, 1e-100, 1e-10, 0.1, 0.5, 0.9, 1.0 - 1e-12}) {
      const double m = sample_max(big, u);
      CHECK(std::isfinite(m));
      CHECK(m > prev);
      prev = m;
    }
    CHECK(sample_max(big, std::exp(-1.0)) ==
          doctest::Approx(exact_b(big)).epsilon(1e-13));
  }
}

TEST_CASE("KS statistic") {
  std::vector<double> xs = {0.5};
  CHECK(ks_statistic(xs, [](double x) { return x; }) == 0.5);
  std::vector<double> grid;
  for (int i = 0; i < 1000; ++i) grid.push_back((i + 0.5) / 1000.0);
  CHECK(ks_statistic(grid, [](double x) { return x; }) ==
        doctest::Approx(0.0005).epsilon(1e-9));
}

TEST_CASE("n = 1 reproduces the normal law") {
  SimConfig cfg;
  cfg.n = LogSize::from_value(1.0);
  cfg.reps = 1000000;
  cfg.seed = 42;
  cfg.pair = NormingPair::identity();
  cfg.jobs = 4;
  std::vector<double> xs = draw_normalized(cfg);
  std::sort(xs.begin(), xs.end());
  const double ks =
      ks_statistic(xs, [](double x) { return 1.0 - std_normal_survival(x).value; });
  CHECK(ks < 2.0 / std::sqrt(1e6));
}

TEST_CASE("empirical and analytic distances agree") {
  struct Case {
    double n;
    Kind kind;
    AuxiliaryKind aux;
  };
  for (const Case c : {Case{10.0, Kind::Exact, AuxiliaryKind::FisherTippett},
                       Case{100.0, Kind::HallStar, AuxiliaryKind::Hall}}) {
    SimConfig cfg;
    cfg.n = LogSize::from_value(c.n);
    cfg.reps = 1000000;
    cfg.seed = 2026;
    cfg.pair = norming_pair(ApproxMethod::of(c.kind), c.aux, cfg.n);
    cfg.jobs = 4;
    const SimReport r = simulate(cfg);
    const double d = sup_distance(cfg.n, cfg.pair).sup;
    CAPTURE(c.n);
    CHECK(std::fabs(r.ks_distance - d) <= 5.0 / std::sqrt(1e6));
    CHECK(r.reps == cfg.reps);
  }
}

TEST_CASE("mean at n = 100 and determinism") {
  SimConfig cfg;
  cfg.n = LogSize::from_value(100.0);
  cfg.reps = 1000000;
  cfg.seed = 99;
  cfg.pair = norming_pair(ApproxMethod::of(Kind::Exact),
                          AuxiliaryKind::FisherTippett, cfg.n);
  cfg.jobs = 3;
  const SimReport a = simulate(cfg);
  cfg.jobs = 1;
  const SimReport b = simulate(cfg);
  CHECK(a.ks_distance == b.ks_distance);
  CHECK(a.sample_mean == b.sample_mean);
  CHECK(a.sample_sd == b.sample_sd);
  // Gumbel mean is gamma; the finite-n bias is of the order of the sup
  // distance times the spread.
  const double d = sup_distance(cfg.n, cfg.pair).sup;
  CHECK(std::fabs(a.sample_mean - kEulerGamma) < 3.0 * a.sample_sd / 1e3 + 20.0 * d);
  CHECK(a.sample_sd > 0.8);
  CHECK(a.sample_sd < 1.4);
}

TEST_CASE("reps guard") {
  SimConfig cfg;
  cfg.pair = NormingPair::identity();
  cfg.reps = 0;
  CHECK_THROWS_AS(simulate(cfg), DomainError);
  cfg.reps = kMaxReps + 1;
  CHECK_THROWS_AS(simulate(cfg), DomainError);
}
