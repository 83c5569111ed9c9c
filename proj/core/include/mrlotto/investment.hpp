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

// Two-stage investment games under the weakest-link rule. In stage one the
// players buy resources at per-unit costs kappa (X) and sigma (Y); stage two
// is the multi-resource Lotto game on the purchased budgets.

#ifndef MRLOTTO_INVESTMENT_HPP_
#define MRLOTTO_INVESTMENT_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "mrlotto/core.hpp"

namespace mrlotto {

class CostProfile {
 public:
  CostProfile(std::vector<double> kappa, std::vector<double> sigma);

  std::size_t size() const { return kappa_.size(); }
  std::span<const double> kappa() const { return kappa_; }
  std::span<const double> sigma() const { return sigma_; }
  double r() const { return r_; }

  friend bool operator==(const CostProfile&, const CostProfile&) = default;

 private:
  std::vector<double> kappa_;
  std::vector<double> sigma_;
  double r_ = 0.0;
};

struct InvestmentOutcome {
  BudgetVector x_star{std::vector<double>{0.0}};
  BudgetVector y_star{std::vector<double>{0.0}};
  double money_x = 0.0;  // sum_t kappa_t X*_t
  double money_y = 0.0;  // sum_t sigma_t Y*_t
  // Stage-two Lotto payoffs L(alpha) and 1 - L(alpha).
  double payoff_x = 0.0;
  double payoff_y = 0.0;
  // Payoff net of money spent. Equal to the payoffs when money is sunk.
  double utility_x = 0.0;
  double utility_y = 0.0;
  double r = 0.0;
};

// Closed interval; a point response has lo == hi.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool is_point() const { return lo == hi; }
  // Membership up to a relative tolerance (square roots are not exact).
  bool contains(double value, double rel_tol = 1e-12) const;
};

// Fixed money budgets M_x, M_y: X*_t = M_x / (sigma_t r) and
// Y*_t = M_y kappa_t / (sigma_t^2 r). M_x = 0 < M_y gives payoffs (0, 1).
InvestmentOutcome sunk_cost_equilibrium(double money_x, double money_y,
                                        const CostProfile& costs);

// Y's best response to X's spending M_x, for cost ratio r.
Interval best_response_y(double money_x, double r);
// X's best response to Y's spending M_y.
Interval best_response_x(double money_y, double r);

// U_x = L(r M_y / M_x) - M_x and U_y = 1 - L(r M_y / M_x) - M_y. The ratio
// follows alpha_ratio's conventions: 0/0 -> 0 and M_y/0 -> +inf.
double utility_x(double money_x, double money_y, double r);
double utility_y(double money_x, double money_y, double r);

// Unique equilibrium of the costly investment game. Both players spend
// r/2 when r <= 1 and 1/(2r) when r > 1.
InvestmentOutcome mlc_equilibrium(const CostProfile& costs);

// X*_t / sum_s X*_s and the same for Y.
std::vector<double> investment_fractions(const BudgetVector& budget);

}  // namespace mrlotto

#endif  // MRLOTTO_INVESTMENT_HPP_
