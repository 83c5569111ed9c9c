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

// Brute-force verifiers for the closed forms. Searches here only evaluate
// payoffs and bound expressions; they never call the closed-form optimizers
// in equilibria.hpp.

#ifndef MRLOTTO_ORACLES_HPP_
#define MRLOTTO_ORACLES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mrlotto/core.hpp"
#include "mrlotto/investment.hpp"

namespace mrlotto {

struct GridSpec {
  // Points per axis. Must be >= 2.
  std::size_t resolution = 200;
  // Overrides the operation's default search domain when set.
  std::optional<std::pair<double, double>> bounds;

  void validate() const;
};

struct SubsetIdentity {
  double lhs = 0.0;  // alternating sum of subset minima
  double rhs = 0.0;  // max_t z_t
};

inline constexpr std::size_t kMaxIdentitySize = 20;

// Enumerates all 2^T - 1 nonempty subsets. Throws DimensionError unless
// 1 <= T <= 20 and DomainError on negative or non-finite entries.
SubsetIdentity maxmin_subset_identity(std::span<const double> z);

struct UbSearchResult {
  double value = 0.0;
  double delta = 0.0;
  std::vector<double> p;
};

inline constexpr std::size_t kMaxLatticeTypes = 4;

// Minimizes upper_bound over p on the barycentric lattice
// {k / resolution : k a composition of resolution into T parts} and over
// delta in [0, 1] by golden-section search. Requires T <= 4 and positive
// budgets.
UbSearchResult numeric_min_ub(const BudgetVector& x, const BudgetVector& y,
                              const GridSpec& grid);

struct LbSearchResult {
  double value = 0.0;
  double delta = 0.0;
};

// Maximizes lower_bound over `resolution` equally spaced points of [0, 1].
LbSearchResult numeric_max_lb(const BudgetVector& x, const BudgetVector& y,
                              const GridSpec& grid);

struct SunkDivisionResult {
  BudgetVector x_hat{std::vector<double>{0.0}};
  BudgetVector y_hat{std::vector<double>{0.0}};
  double payoff_x = 0.0;
  std::size_t rounds = 0;
  bool converged = false;
};

inline constexpr std::size_t kSunkMaxRounds = 50;
inline constexpr double kSunkWindow = 1e-6;

// Constrained search over the budget sets {X : sum kappa_t X_t = M_x} and
// {Y : sum sigma_t Y_t = M_y}. X_hat maximizes X's worst-case payoff over
// Y's budget set; Y_hat minimizes X's best-case payoff over X's budget set.
// Each search is a zoomed grid over money shares with `resolution` points
// per axis per round; rounds stop when the window is below kSunkWindow or
// after kSunkMaxRounds. Requires T in {2, 3} and M_x, M_y > 0.
SunkDivisionResult numeric_sunk_division(double money_x, double money_y,
                                         const CostProfile& costs,
                                         const GridSpec& grid);

struct DeviationGains {
  double gain_x = 0.0;
  double gain_y = 0.0;
};

// Largest utility gain of each player from a unilateral move to any point
// of a money grid, the other player's money held fixed. The default domain
// is [0, 1.5 max(r, 1/r, 1)]. Gains are >= 0 since staying put is allowed.
DeviationGains deviation_gains(double money_x, double money_y, double r,
                               const GridSpec& grid);

// deviation_gains at mlc_equilibrium(costs).
DeviationGains numeric_mlc_best_response(const CostProfile& costs,
                                         const GridSpec& grid);

}  // namespace mrlotto

#endif  // MRLOTTO_ORACLES_HPP_
