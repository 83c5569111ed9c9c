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

// Random allocations drawn from strategy parameters, Monte Carlo payoff
// estimates and empirical checks against the analytic CDFs.
//
// Contests are sampled independently of each other; each (sample, contest)
// pair owns its own counter-based stream, so results do not depend on the
// order in which samples are produced.

#ifndef MRLOTTO_SAMPLING_HPP_
#define MRLOTTO_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mrlotto/core.hpp"
#include "mrlotto/equilibria.hpp"

namespace mrlotto {

struct SampleBatch {
  std::vector<Allocation> allocations;
  std::uint64_t seed = 0;
  std::uint64_t params_digest = 0;
};

struct PayoffEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
};

// FNV-1a over the serialized parameters.
std::uint64_t params_digest(const StrategyParams& params);

// Weakest-link form: per contest, with probability 1 - delta allocate
// nothing; otherwise one uniform U scales the whole row, x_ct = s_ct U.
// Best-shot form: with probability delta pick type t w.p. p_t and allocate
// s_ct U of that type only.
Allocation sample_allocation(const StrategyParams& params,
                             const ContestValues& v, std::uint64_t seed,
                             std::uint64_t index = 0);

SampleBatch sample_batch(const StrategyParams& params, const ContestValues& v,
                         std::size_t n, std::uint64_t seed);

// Mean of sum_c v_c W(x_c, y_c) over n independent pairs; X's payoff.
PayoffEstimate mc_payoff(const StrategyParams& params_x,
                         const StrategyParams& params_y,
                         const ContestValues& v, const WinningRule& rule,
                         std::size_t n, std::uint64_t seed);

// Max over the grid of |empirical P(x_c <= u) - eval_cdf(params, c, u)|.
double empirical_cdf_distance(const StrategyParams& params,
                              const ContestValues& v, std::size_t c,
                              std::size_t n, std::uint64_t seed,
                              std::span<const std::vector<double>> grid);

// Analytic expected total allocation of each type across contests.
std::vector<double> expected_spend(const StrategyParams& params,
                                   const ContestValues& v);

struct SpendEstimate {
  std::vector<double> mean;
  std::vector<double> std_error;
};

// Sample mean (and its standard error) of sum_c x_ct per type.
SpendEstimate empirical_spend(const StrategyParams& params,
                              const ContestValues& v, std::size_t n,
                              std::uint64_t seed);

}  // namespace mrlotto

#endif  // MRLOTTO_SAMPLING_HPP_
