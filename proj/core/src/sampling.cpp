// Copyright 2026 The mrlotto Authors
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

#include "mrlotto/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "mrlotto/rng.hpp"

namespace mrlotto {
namespace {

constexpr std::uint64_t kPlayerXTag = 1;
constexpr std::uint64_t kPlayerYTag = 2;

// Largest standard deviation of a [0, 1]-valued payoff; used when a single
// sample gives no variance estimate.
constexpr double kSingleSampleStdError = 0.5;

// Running mean and variance (Welford).
class RunningMoments {
 public:
  explicit RunningMoments(double single_sample_error = kInfinity)
      : single_sample_error_(single_sample_error) {}

  void add(double value) {
    ++count_;
    const double delta = value - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (value - mean_);
  }
  double mean() const { return mean_; }
  double std_error() const {
    if (count_ < 2) return single_sample_error_;
    const double variance = m2_ / static_cast<double>(count_ - 1);
    return std::sqrt(std::max(variance, 0.0) / static_cast<double>(count_));
  }

 private:
  double single_sample_error_;
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

void draw_row(const StrategyParams& params, std::size_t c, StreamRng& rng,
              std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  const double activation = rng.uniform();
  if (!(activation < params.delta())) return;
  const auto scales = params.scale_row(c);
  if (params.form() == StrategyForm::kWeakestLink) {
    const double u = rng.uniform();
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = scales[t] * u;
    return;
  }
  const auto p = params.type_probs();
  const double pick = rng.uniform();
  std::size_t chosen = p.size();
  double cumulative = 0.0;
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (p[t] <= 0.0) continue;
    cumulative += p[t];
    chosen = t;
    if (pick < cumulative) break;
  }
  if (chosen == p.size()) return;
  out[chosen] = scales[chosen] * rng.uniform();
}

void require_contests(const StrategyParams& params, const ContestValues& v) {
  if (params.contests() != v.size()) {
    throw DimensionError("strategy and contest values disagree on C");
  }
}

void fnv_mix(std::uint64_t& hash, const void* data, std::size_t bytes) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < bytes; ++i) {
    hash ^= p[i];
    hash *= 0x100000001b3ULL;
  }
}

void fnv_mix_double(std::uint64_t& hash, double value) {
  std::uint64_t bits = 0;
  std::memcpy(&bits, &value, sizeof(bits));
  fnv_mix(hash, &bits, sizeof(bits));
}

}  // namespace

std::uint64_t params_digest(const StrategyParams& params) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  const std::uint64_t header[3] = {
      static_cast<std::uint64_t>(params.form()), params.contests(),
      params.types()};
  fnv_mix(hash, header, sizeof(header));
  fnv_mix_double(hash, params.delta());
  for (double p : params.type_probs()) fnv_mix_double(hash, p);
  for (double s : params.scales()) fnv_mix_double(hash, s);
  return hash;
}

Allocation sample_allocation(const StrategyParams& params,
                             const ContestValues& v, std::uint64_t seed,
                             std::uint64_t index) {
  require_contests(params, v);
  Allocation allocation(params.contests(), params.types());
  for (std::size_t c = 0; c < params.contests(); ++c) {
    StreamRng rng(seed, index, c);
    draw_row(params, c, rng, allocation.mutable_row(c));
  }
  return allocation;
}

SampleBatch sample_batch(const StrategyParams& params, const ContestValues& v,
                         std::size_t n, std::uint64_t seed) {
  SampleBatch batch;
  batch.seed = seed;
  batch.params_digest = params_digest(params);
  batch.allocations.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    batch.allocations.push_back(sample_allocation(params, v, seed, i));
  }
  return batch;
}

PayoffEstimate mc_payoff(const StrategyParams& params_x,
                         const StrategyParams& params_y,
                         const ContestValues& v, const WinningRule& rule,
                         std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("mc_payoff: n must be >= 1");
  require_contests(params_x, v);
  require_contests(params_y, v);
  const std::size_t types = params_x.types();
  if (params_y.types() != types) {
    throw DimensionError("mc_payoff: players disagree on T");
  }
  const std::size_t rule_t = rule_types(rule);
  if (rule_t != 0 && rule_t != types) {
    throw DimensionError("mc_payoff: winning rule configured for a different T");
  }

  const std::uint64_t seed_x = derive_seed(seed, kPlayerXTag);
  const std::uint64_t seed_y = derive_seed(seed, kPlayerYTag);
  std::vector<double> x(types);
  std::vector<double> y(types);
  RunningMoments moments(kSingleSampleStdError);
  for (std::size_t i = 0; i < n; ++i) {
    double payoff = 0.0;
    for (std::size_t c = 0; c < v.size(); ++c) {
      StreamRng rng_x(seed_x, i, c);
      StreamRng rng_y(seed_y, i, c);
      draw_row(params_x, c, rng_x, x);
      draw_row(params_y, c, rng_y, y);
      if (x_wins(rule, x, y)) payoff += v[c];
    }
    moments.add(payoff);
  }

  PayoffEstimate estimate;
  estimate.mean = std::clamp(moments.mean(), 0.0, 1.0);
  estimate.std_error = moments.std_error();
  estimate.n_samples = n;
  return estimate;
}

double empirical_cdf_distance(const StrategyParams& params,
                              const ContestValues& v, std::size_t c,
                              std::size_t n, std::uint64_t seed,
                              std::span<const std::vector<double>> grid) {
  require_contests(params, v);
  if (c >= params.contests()) {
    throw DimensionError("empirical_cdf_distance: contest out of range");
  }
  if (n == 0 || grid.empty()) {
    throw DomainError("empirical_cdf_distance: needs n >= 1 and a grid");
  }
  const std::size_t types = params.types();
  for (const auto& u : grid) {
    if (u.size() != types) {
      throw DimensionError("empirical_cdf_distance: grid point needs T entries");
    }
  }

  std::vector<std::size_t> below(grid.size(), 0);
  std::vector<double> row(types);
  for (std::size_t i = 0; i < n; ++i) {
    StreamRng rng(seed, i, c);
    draw_row(params, c, rng, row);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      bool inside = true;
      for (std::size_t t = 0; t < types && inside; ++t) {
        inside = row[t] <= grid[g][t];
      }
      if (inside) ++below[g];
    }
  }

  double worst = 0.0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double empirical =
        static_cast<double>(below[g]) / static_cast<double>(n);
    worst = std::max(worst, std::abs(empirical - eval_cdf(params, c, grid[g])));
  }
  return worst;
}

std::vector<double> expected_spend(const StrategyParams& params,
                                   const ContestValues& v) {
  require_contests(params, v);
  std::vector<double> spend(params.types(), 0.0);
  for (std::size_t c = 0; c < params.contests(); ++c) {
    for (std::size_t t = 0; t < params.types(); ++t) {
      const double weight = params.form() == StrategyForm::kWeakestLink
                                ? 1.0
                                : params.type_probs()[t];
      spend[t] += 0.5 * params.delta() * weight * params.scale(c, t);
    }
  }
  return spend;
}

SpendEstimate empirical_spend(const StrategyParams& params,
                              const ContestValues& v, std::size_t n,
                              std::uint64_t seed) {
  require_contests(params, v);
  if (n == 0) throw DomainError("empirical_spend: n must be >= 1");
  const std::size_t types = params.types();
  std::vector<RunningMoments> moments(types);
  std::vector<double> row(types);
  std::vector<double> totals(types);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(totals.begin(), totals.end(), 0.0);
    for (std::size_t c = 0; c < params.contests(); ++c) {
      StreamRng rng(seed, i, c);
      draw_row(params, c, rng, row);
      for (std::size_t t = 0; t < types; ++t) totals[t] += row[t];
    }
    for (std::size_t t = 0; t < types; ++t) moments[t].add(totals[t]);
  }
  SpendEstimate estimate;
  for (const auto& m : moments) {
    estimate.mean.push_back(m.mean());
    estimate.std_error.push_back(m.std_error());
  }
  return estimate;
}

}  // namespace mrlotto
