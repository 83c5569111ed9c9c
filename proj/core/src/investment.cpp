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

#include "mrlotto/investment.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace mrlotto {
namespace {

void require_money(double money, const char* what) {
  if (!std::isfinite(money) || money < 0.0) {
    throw DomainError(std::string(what) + " must be finite and >= 0");
  }
}

void require_r(double r) {
  if (!std::isfinite(r) || !(r > 0.0)) {
    throw DomainError("cost ratio r must be finite and > 0");
  }
}

// r M_y / M_x with alpha_ratio's conventions.
double money_ratio(double money_x, double money_y, double r) {
  if (money_y == 0.0) return 0.0;
  if (money_x == 0.0) return kInfinity;
  return r * money_y / money_x;
}

}  // namespace

CostProfile::CostProfile(std::vector<double> kappa, std::vector<double> sigma)
    : kappa_(std::move(kappa)), sigma_(std::move(sigma)) {
  if (kappa_.empty()) throw DomainError("cost profile needs at least one type");
  r_ = cost_ratio(kappa_, sigma_);
}

bool Interval::contains(double value, double rel_tol) const {
  const double slack = rel_tol * std::max({1.0, std::abs(lo), std::abs(hi)});
  return value >= lo - slack && value <= hi + slack;
}

InvestmentOutcome sunk_cost_equilibrium(double money_x, double money_y,
                                        const CostProfile& costs) {
  require_money(money_x, "money_x");
  require_money(money_y, "money_y");
  const std::size_t types = costs.size();
  const double r = costs.r();
  const auto kappa = costs.kappa();
  const auto sigma = costs.sigma();

  std::vector<double> x(types, 0.0);
  std::vector<double> y(types, 0.0);
  for (std::size_t t = 0; t < types; ++t) {
    x[t] = money_x / (sigma[t] * r);
    y[t] = money_y * kappa[t] / (sigma[t] * sigma[t] * r);
  }

  InvestmentOutcome out;
  out.x_star = BudgetVector(std::move(x));
  out.y_star = BudgetVector(std::move(y));
  out.money_x = money_x;
  out.money_y = money_y;
  out.r = r;
  out.payoff_x = lotto_payoff(money_ratio(money_x, money_y, r));
  out.payoff_y = 1.0 - out.payoff_x;
  out.utility_x = out.payoff_x;
  out.utility_y = out.payoff_y;
  return out;
}

Interval best_response_y(double money_x, double r) {
  require_money(money_x, "money_x");
  require_r(r);
  const double edge = r / 2.0;
  if (money_x < edge) {
    const double m = std::sqrt(money_x / (2.0 * r));
    return {m, m};
  }
  if (money_x == edge) return {0.0, 0.5};
  return {0.0, 0.0};
}

Interval best_response_x(double money_y, double r) {
  require_money(money_y, "money_y");
  require_r(r);
  const double edge = 1.0 / (2.0 * r);
  if (money_y < edge) {
    const double m = std::sqrt(money_y * r / 2.0);
    return {m, m};
  }
  if (money_y == edge) return {0.0, 0.5};
  return {0.0, 0.0};
}

double utility_x(double money_x, double money_y, double r) {
  require_money(money_x, "money_x");
  require_money(money_y, "money_y");
  require_r(r);
  return lotto_payoff(money_ratio(money_x, money_y, r)) - money_x;
}

double utility_y(double money_x, double money_y, double r) {
  require_money(money_x, "money_x");
  require_money(money_y, "money_y");
  require_r(r);
  return 1.0 - lotto_payoff(money_ratio(money_x, money_y, r)) - money_y;
}

InvestmentOutcome mlc_equilibrium(const CostProfile& costs) {
  const double r = costs.r();
  const double money = r <= 1.0 ? r / 2.0 : 1.0 / (2.0 * r);
  InvestmentOutcome out = sunk_cost_equilibrium(money, money, costs);
  out.utility_x = utility_x(money, money, r);
  out.utility_y = utility_y(money, money, r);
  return out;
}

std::vector<double> investment_fractions(const BudgetVector& budget) {
  const double total = budget.sum();
  std::vector<double> out(budget.size(), 0.0);
  if (total == 0.0) return out;
  for (std::size_t t = 0; t < budget.size(); ++t) out[t] = budget[t] / total;
  return out;
}

}  // namespace mrlotto
