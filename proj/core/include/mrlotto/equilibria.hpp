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

// Closed-form equilibria of the weakest-link and weighted-contribution games,
// and the upper/lower payoff bounds whose optimizers coincide with them.
//
// Every strategy emitted here belongs to one of two families, described by
// their per-contest marginal CDFs:
//
//   weakest-link form:  F_c(u) = 1 - d + d * min_t min(u_t / s_ct, 1)
//   best-shot form:     F_c(u) = 1 - d + d * sum_t p_t min(u_t / s_ct, 1)
//
// where d is the activation probability and s_ct the top of the uniform
// support for contest c and type t.

#ifndef MRLOTTO_EQUILIBRIA_HPP_
#define MRLOTTO_EQUILIBRIA_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mrlotto/core.hpp"

namespace mrlotto {

enum class StrategyForm { kWeakestLink, kBestShot };

class StrategyParams {
 public:
  // Validates delta in [0, 1], nonnegative finite scales of shape C x T and,
  // for the best-shot form, a probability vector of length T.
  static StrategyParams WeakestLink(double delta, std::size_t contests,
                                    std::size_t types,
                                    std::vector<double> scales);
  static StrategyParams BestShot(double delta, std::vector<double> type_probs,
                                 std::size_t contests, std::size_t types,
                                 std::vector<double> scales);

  StrategyForm form() const { return form_; }
  double delta() const { return delta_; }
  // Empty for the weakest-link form.
  std::span<const double> type_probs() const { return type_probs_; }
  std::size_t contests() const { return contests_; }
  std::size_t types() const { return types_; }
  double scale(std::size_t c, std::size_t t) const {
    return scales_[c * types_ + t];
  }
  std::span<const double> scale_row(std::size_t c) const {
    return std::span<const double>(scales_).subspan(c * types_, types_);
  }
  std::span<const double> scales() const { return scales_; }

  friend bool operator==(const StrategyParams&,
                         const StrategyParams&) = default;

 private:
  StrategyParams() = default;

  StrategyForm form_ = StrategyForm::kWeakestLink;
  double delta_ = 0.0;
  std::vector<double> type_probs_;
  std::size_t contests_ = 0;
  std::size_t types_ = 0;
  std::vector<double> scales_;
};

// Budget-feasible member of the weakest-link family: s_ct = 2 v_c B_t / delta.
// With delta = 0 the scales are set to 2 v_c B_t; they carry no mass.
StrategyParams weakest_link_strategy(double delta, const BudgetVector& budget,
                                     const ContestValues& v);

// Budget-feasible member of the best-shot family:
// s_ct = 2 v_c B_t / (delta p_t). Types with delta p_t = 0 get the
// placeholder scale 2 v_c B_t. Throws DomainError if p_t > 0 and B_t = 0.
StrategyParams best_shot_strategy(double delta, std::vector<double> type_probs,
                                  const BudgetVector& budget,
                                  const ContestValues& v);

struct EquilibriumReport {
  double payoff_x = 0.0;
  double payoff_y = 0.0;
  // Empty on the boundary X_t = 0 < Y_t (or zero effective X budget under
  // the weighted rule), where only the payoffs are defined.
  std::optional<StrategyParams> strategy_x;
  std::optional<StrategyParams> strategy_y;
  // alpha for the weakest-link rule, beta for the weighted rule.
  double ratio = 0.0;
  WinningRule rule;

  bool degenerate() const { return !strategy_x.has_value(); }
};

// Weakest-link game: payoff_x = L(alpha). X plays the weakest-link form with
// delta_X = min(1/alpha, 1); Y plays the best-shot form with
// delta_Y = min(alpha, 1) and p_t = (Y_t/X_t)/alpha. Both players share the
// scales s_ct = 2 v_c X_t / delta_X. alpha = 1 uses the alpha <= 1 branch.
EquilibriumReport wl_equilibrium(const BudgetVector& x, const BudgetVector& y,
                                 const ContestValues& v);

// Weighted-contribution game: payoff_x = L(beta). Both players use the
// weakest-link form. beta <= 1: delta_X = 1, delta_Y = beta;
// beta > 1: delta_X = 1/beta, delta_Y = 1. Scales are 2 v_c B_t / delta.
EquilibriumReport wc_equilibrium(const BudgetVector& x, const BudgetVector& y,
                                 const ContestValues& v,
                                 const EffectivenessWeights& w);

// Marginal CDF of contest c at u. A zero scale is a point mass at zero.
double eval_cdf(const StrategyParams& params, std::size_t c,
                std::span<const double> u);

// UB(d, p) = 1 - d + (d^2 / 2) sum_t p_t^2 X_t / Y_t: the most X can earn
// against any best-shot strategy with parameters (d, p).
double upper_bound(double delta_y, std::span<const double> p,
                   const BudgetVector& x, const BudgetVector& y);

struct UpperBoundOptimum {
  double delta_y = 0.0;
  std::vector<double> p;
  double value = 0.0;
};

// Closed-form minimizer of UB: p_t = (Y_t/X_t)/alpha, delta = min(alpha, 1).
// Requires X > 0 componentwise; Y_t = 0 gives p_t = 0.
UpperBoundOptimum min_upper_bound(const BudgetVector& x,
                                  const BudgetVector& y);

// LB(d) = d (1 - d alpha / 2). Zero when alpha is infinite.
double lower_bound(double delta_x, const BudgetVector& x,
                   const BudgetVector& y);

struct LowerBoundOptimum {
  double delta_x = 0.0;
  double value = 0.0;
};

// delta = min(1/alpha, 1).
LowerBoundOptimum max_lower_bound(const BudgetVector& x,
                                  const BudgetVector& y);

struct WcBounds {
  double ub = 0.0;
  double lb = 0.0;
};

// UB_WC(d) = 1 - d + d^2 / (2 beta) and LB_WC(d) = d (1 - d beta / 2).
WcBounds wc_bounds(double delta, double beta);
WcBounds wc_bounds(double delta, const BudgetVector& x, const BudgetVector& y,
                   const EffectivenessWeights& w);

struct WcBoundOptima {
  double delta_ub = 0.0;  // min(beta, 1)
  double delta_lb = 0.0;  // min(1/beta, 1)
  double value = 0.0;     // L(beta)
};

WcBoundOptima wc_bound_optima(double beta);

}  // namespace mrlotto

#endif  // MRLOTTO_EQUILIBRIA_HPP_
