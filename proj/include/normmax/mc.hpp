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

#ifndef NORMMAX_MC_HPP_
#define NORMMAX_MC_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "normmax/norming.hpp"

namespace normmax {

inline constexpr std::uint64_t kMaxReps = 100'000'000;

struct SimConfig {
  LogSize n = LogSize::from_value(1.0);
  std::uint64_t reps = 1;
  std::uint64_t seed = 0;
  NormingPair pair;
  unsigned jobs = 1;
};

struct SimReport {
  double ks_distance = 0.0;  // against the Gumbel CDF
  double sample_mean = 0.0;
  double sample_sd = 0.0;
  std::uint64_t reps = 0;
};

// Counter-based uniform on (0, 1): a pure function of (seed, index), so any
// sharding of the index range reproduces the same draws.
double uniform_at(std::uint64_t seed, std::uint64_t index);

// Max of n standard normals from one uniform u in (0, 1):
// Phi^{-1}(u^{1/n}), evaluated through the survival 1 - u^{1/n} in log form.
double sample_max(LogSize n, double u);

// reps draws of (M_n - b) / a in index order.
std::vector<double> draw_normalized(const SimConfig& cfg);

// sup |F_N - F| for an ascending sample.
double ks_statistic(std::span<const double> sorted,
                    const std::function<double(double)>& cdf);

// KS distance to the Gumbel law plus mean and standard deviation of draws
// already normalized by the pair. Throws DomainError when empty.
SimReport summarize(std::vector<double> samples);

// summarize(draw_normalized(cfg)).
// Throws DomainError for reps outside [1, kMaxReps].
SimReport simulate(const SimConfig& cfg);

}  // namespace normmax

#endif  // NORMMAX_MC_HPP_
