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

#include <benchmark/benchmark.h>

#include "mrlotto/core.hpp"
#include "mrlotto/equilibria.hpp"
#include "mrlotto/investment.hpp"
#include "mrlotto/oracles.hpp"
#include "mrlotto/sampling.hpp"

namespace {

using namespace mrlotto;

void BM_McPayoff(benchmark::State& state) {
  const auto types = static_cast<std::size_t>(state.range(0));
  const BudgetVector x(std::vector<double>(types, 2.0));
  const BudgetVector y(std::vector<double>(types, 1.0));
  const ContestValues v({0.2, 0.3, 0.5});
  const auto eq = wl_equilibrium(x, y, v);
  constexpr std::size_t kSamples = 100000;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mc_payoff(*eq.strategy_x, *eq.strategy_y, v, WeakestLinkForX{}, kSamples, seed++));
  }
  state.SetItemsProcessed(state.iterations() * kSamples);
}
BENCHMARK(BM_McPayoff)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_SampleAllocation(benchmark::State& state) {
  const BudgetVector y({1.0, 2.0, 0.5});
  const ContestValues v({0.5, 0.5});
  const auto eq = wl_equilibrium(BudgetVector({3.0, 1.0, 2.0}), y, v);
  std::uint64_t index = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_allocation(*eq.strategy_y, v, 42, index++));
  }
}
BENCHMARK(BM_SampleAllocation);

void BM_NumericMinUb(benchmark::State& state) {
  const auto types = static_cast<std::size_t>(state.range(0));
  std::vector<double> xs(types), ys(types);
  for (std::size_t t = 0; t < types; ++t) {
    xs[t] = 1.0 + 0.5 * static_cast<double>(t);
    ys[t] = 2.0 - 0.3 * static_cast<double>(t);
  }
  const BudgetVector x(xs), y(ys);
  const GridSpec grid{200, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(numeric_min_ub(x, y, grid));
}
BENCHMARK(BM_NumericMinUb)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SubsetIdentity(benchmark::State& state) {
  const auto types = static_cast<std::size_t>(state.range(0));
  std::vector<double> z(types);
  for (std::size_t t = 0; t < types; ++t) z[t] = static_cast<double>((t * 7) % 5);
  for (auto _ : state) benchmark::DoNotOptimize(maxmin_subset_identity(z));
}
BENCHMARK(BM_SubsetIdentity)->Arg(4)->Arg(12)->Arg(20);

void BM_MlcBestResponse(benchmark::State& state) {
  const CostProfile costs({1.5, 0.2, 0.3}, {3.0, 2.0, 1.8});
  const GridSpec grid{2000, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(numeric_mlc_best_response(costs, grid));
}
BENCHMARK(BM_MlcBestResponse)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
