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

#include "normmax/mc.hpp"

#include <algorithm>
#include <cmath>

#include "normmax/errors.hpp"
#include "normmax/parallel.hpp"
#include "normmax/specfn.hpp"

namespace normmax {
namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void check_reps(std::uint64_t reps) {
  if (reps < 1 || reps > kMaxReps) {
    throw DomainError("simulation reps must lie in [1, 1e8]");
  }
}

}  // namespace

double uniform_at(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t bits = splitmix64(splitmix64(seed) ^ splitmix64(~index));
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

double sample_max(LogSize n, double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("sample_max: u outside (0,1)");
  // u^{1/n} = e^{-z}, z = -ln(u) / n.
  const double log_z = std::log(-std::log(u)) - n.log();
  const double z = std::exp(log_z);
  if (z >= kLogTwo) {
    // CDF value at most 1/2: reflect.
    return -std_normal_quantile_upper(TailProbability::from_log(-z));
  }
  return std_normal_quantile_upper(
      TailProbability::from_log(log_one_minus_exp_neg(log_z)));
}

std::vector<double> draw_normalized(const SimConfig& cfg) {
  check_reps(cfg.reps);
  if (!(cfg.pair.scale > 0.0)) {
    throw InvalidPairError("simulate: scale must be positive");
  }
  std::vector<double> out(cfg.reps);
  constexpr std::uint64_t kShard = 1 << 14;
  const std::uint64_t shards = (cfg.reps + kShard - 1) / kShard;
  parallel_for(shards, cfg.jobs, [&](std::size_t shard) {
    const std::uint64_t begin = shard * kShard;
    const std::uint64_t end = std::min(cfg.reps, begin + kShard);
    for (std::uint64_t i = begin; i < end; ++i) {
      const double m = sample_max(cfg.n, uniform_at(cfg.seed, i));
      out[i] = (m - cfg.pair.location) / cfg.pair.scale;
    }
  });
  return out;
}

double ks_statistic(std::span<const double> sorted,
                    const std::function<double(double)>& cdf) {
  const double count = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, (i + 1) / count - f, f - i / count});
  }
  return d;
}

SimReport summarize(std::vector<double> samples) {
  if (samples.empty()) throw DomainError("summarize: no samples");
  std::sort(samples.begin(), samples.end());

  SimReport report;
  report.reps = samples.size();
  report.ks_distance = ks_statistic(samples, gumbel_cdf);

  double sum = 0.0;
  for (const double v : samples) sum += v;
  const double mean = sum / static_cast<double>(samples.size());
  double squares = 0.0;
  double residual = 0.0;
  for (const double v : samples) {
    squares += (v - mean) * (v - mean);
    residual += v - mean;
  }
  const double count = static_cast<double>(samples.size());
  report.sample_mean = mean + residual / count;
  report.sample_sd =
      samples.size() > 1
          ? std::sqrt((squares - residual * residual / count) / (count - 1.0))
          : 0.0;
  return report;
}

SimReport simulate(const SimConfig& cfg) {
  return summarize(draw_normalized(cfg));
}

}  // namespace normmax
