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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

namespace mrlotto {
namespace {

constexpr double kTol = 1e-9;

const CostProfile kUnitRatioCosts({2.2, 0.2, 0.3}, {3.0, 2.0, 1.8});

TEST(SunkCost, SymmetricTwoTypes) {
  const auto out = sunk_cost_equilibrium(1.0, 1.0, CostProfile({1, 1}, {1, 1}));
  EXPECT_NEAR(out.r, 2.0, kTol);
  for (std::size_t t = 0; t < 2; ++t) {
    EXPECT_NEAR(out.x_star[t], 0.5, kTol);
    EXPECT_NEAR(out.y_star[t], 0.5, kTol);
  }
  EXPECT_NEAR(out.payoff_x, 0.25, kTol);
  EXPECT_NEAR(out.payoff_y, 0.75, kTol);
}

TEST(SunkCost, NoOpponentMoney) {
  const auto out = sunk_cost_equilibrium(1.0, 0.0, CostProfile({1, 2}, {3, 1}));
  EXPECT_EQ(out.y_star, BudgetVector({0.0, 0.0}));
  EXPECT_EQ(out.payoff_x, 1.0);
}

TEST(SunkCost, UnitRatioCostsAtUnitRatio) {
  const auto out = sunk_cost_equilibrium(1.0, 1.0, kUnitRatioCosts);
  EXPECT_NEAR(out.r, 1.0, kTol);
  EXPECT_NEAR(out.payoff_x, 0.5, kTol);
  double spend_x = 0.0;
  double spend_y = 0.0;
  for (std::size_t t = 0; t < 3; ++t) {
    spend_x += kUnitRatioCosts.kappa()[t] * out.x_star[t];
    spend_y += kUnitRatioCosts.sigma()[t] * out.y_star[t];
  }
  EXPECT_NEAR(spend_x, 1.0, 1e-12);
  EXPECT_NEAR(spend_y, 1.0, 1e-12);
}

TEST(SunkCost, NoMoneyForX) {
  const auto out = sunk_cost_equilibrium(0.0, 1.0, CostProfile({1}, {1}));
  EXPECT_EQ(out.payoff_x, 0.0);
  EXPECT_EQ(out.payoff_y, 1.0);
  EXPECT_EQ(out.x_star, BudgetVector({0.0}));
  EXPECT_THROW(sunk_cost_equilibrium(-1.0, 1.0, CostProfile({1}, {1})),
               DomainError);
}

TEST(BestResponseY, Examples) {
  const auto a = best_response_y(0.125, 1.0);
  EXPECT_TRUE(a.is_point());
  EXPECT_NEAR(a.lo, 0.25, kTol);
  EXPECT_EQ(best_response_y(1.0, 1.0).hi, 0.0);
  EXPECT_EQ(best_response_y(0.0, 1.0).hi, 0.0);
  const auto edge = best_response_y(0.5, 1.0);
  EXPECT_EQ(edge.lo, 0.0);
  EXPECT_EQ(edge.hi, 0.5);
}

TEST(BestResponseX, Examples) {
  EXPECT_NEAR(best_response_x(0.125, 1.0).lo, 0.25, kTol);
  EXPECT_EQ(best_response_x(0.5, 2.0).hi, 0.0);
  EXPECT_EQ(best_response_x(0.0, 3.0).hi, 0.0);
  const auto edge = best_response_x(0.25, 2.0);
  EXPECT_EQ(edge.lo, 0.0);
  EXPECT_EQ(edge.hi, 0.5);
}

TEST(Interval, ContainsWithRelativeSlack) {
  const Interval point{0.25, 0.25};
  EXPECT_TRUE(point.contains(0.25));
  EXPECT_TRUE(point.contains(0.25 + 1e-14));
  EXPECT_FALSE(point.contains(0.2500001));
}

// Net utilities at the equilibrium: r <= 1 gives (1 - r, 0) and r > 1 gives
// (0, 1 - 1/r).
TEST(MlcEquilibrium, UnitRatioSingleType) {
  const auto eq = mlc_equilibrium(CostProfile({1}, {1}));
  EXPECT_NEAR(eq.x_star[0], 0.5, kTol);
  EXPECT_NEAR(eq.y_star[0], 0.5, kTol);
  EXPECT_NEAR(eq.utility_x, 0.0, kTol);
  EXPECT_NEAR(eq.utility_y, 0.0, kTol);
  EXPECT_NEAR(eq.payoff_x, 0.5, kTol);
}

TEST(MlcEquilibrium, UnitRatioCostsAtUnitRatio) {
  const auto eq = mlc_equilibrium(kUnitRatioCosts);
  EXPECT_NEAR(eq.r, 1.0, kTol);
  EXPECT_NEAR(eq.payoff_x, 0.5, kTol);
  EXPECT_NEAR(eq.payoff_y, 0.5, kTol);
  EXPECT_NEAR(eq.utility_x, 0.0, kTol);
  EXPECT_NEAR(eq.utility_y, 0.0, kTol);
}

TEST(MlcEquilibrium, ExpensiveForX) {
  const auto eq = mlc_equilibrium(CostProfile({2}, {1}));
  EXPECT_NEAR(eq.r, 2.0, kTol);
  EXPECT_NEAR(eq.x_star[0], 1.0 / 8.0, kTol);
  EXPECT_NEAR(eq.y_star[0], 1.0 / 4.0, kTol);
  EXPECT_NEAR(eq.utility_x, 0.0, kTol);
  EXPECT_NEAR(eq.utility_y, 0.5, kTol);
  EXPECT_NEAR(eq.payoff_y, 0.75, kTol);
}

TEST(MlcEquilibrium, CheapForX) {
  const auto eq = mlc_equilibrium(CostProfile({1}, {2}));
  EXPECT_NEAR(eq.r, 0.5, kTol);
  EXPECT_NEAR(eq.money_x, 0.25, kTol);
  EXPECT_NEAR(eq.utility_x, 0.5, kTol);
  EXPECT_NEAR(eq.utility_y, 0.0, kTol);
}

TEST(Utility, Examples) {
  for (double r : {1.0, 1.5, 3.0}) {
    const double m = 1.0 / (2.0 * r);
    EXPECT_NEAR(utility_x(m, m, r), 0.0, kTol) << "r=" << r;
  }
  EXPECT_NEAR(utility_x(0.3, 0.0, 2.0), 0.7, kTol);
  EXPECT_NEAR(utility_x(0.5, 0.5, 1.0), 0.0, kTol);
  EXPECT_NEAR(utility_y(0.5, 0.5, 1.0), 0.0, kTol);
}

TEST(Utility, Conventions) {
  EXPECT_EQ(utility_x(0.0, 0.0, 1.0), 1.0);
  EXPECT_EQ(utility_y(0.0, 0.0, 1.0), 0.0);
  EXPECT_EQ(utility_x(0.0, 0.2, 1.0), 0.0);
  EXPECT_THROW(utility_x(-0.1, 0.2, 1.0), DomainError);
  EXPECT_THROW(utility_y(0.1, -0.2, 1.0), DomainError);
}

TEST(InvestmentFractions, XDependsOnlyOnSigma) {
  const auto a = mlc_equilibrium(CostProfile({0.5, 0.2, 0.3}, {3, 2, 1.8}));
  const auto b = mlc_equilibrium(CostProfile({4.0, 0.2, 0.3}, {3, 2, 1.8}));
  const auto fa = investment_fractions(a.x_star);
  const auto fb = investment_fractions(b.x_star);
  for (std::size_t t = 0; t < 3; ++t) EXPECT_NEAR(fa[t], fb[t], 1e-12);
  EXPECT_NEAR(fa[0], (1.0 / 3.0) / (1.0 / 3.0 + 0.5 + 1.0 / 1.8), 1e-12);
}

}  // namespace
}  // namespace mrlotto
