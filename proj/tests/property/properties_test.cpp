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

// Randomized invariants. Each test draws kPropertyCases instances from a
// fixed seed, so failures replay exactly.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "mrlotto/core.hpp"
#include "mrlotto/equilibria.hpp"
#include "mrlotto/investment.hpp"
#include "mrlotto/oracles.hpp"
#include "mrlotto/sampling.hpp"
#include "support/generators.hpp"

namespace mrlotto {
namespace {

using testing::Gen;
using testing::kPropertyCases;

TEST(CoreProperties, LottoPayoffIsNonincreasingAndBounded) {
  Gen gen(101);
  for (int i = 0; i < kPropertyCases; ++i) {
    double a = gen.uniform(0.0, 10.0);
    double b = gen.uniform(0.0, 10.0);
    if (a > b) std::swap(a, b);
    EXPECT_GE(lotto_payoff(a), lotto_payoff(b));
    EXPECT_GT(lotto_payoff(b), 0.0);
    EXPECT_LE(lotto_payoff(a), 1.0);
  }
  EXPECT_EQ(lotto_payoff(0.0), 1.0);
  for (double eps : {1e-3, 1e-6, 1e-9}) {
    EXPECT_LT(std::abs(lotto_payoff(1.0 - eps) - lotto_payoff(1.0 + eps)),
              2.0 * eps);
  }
}

TEST(CoreProperties, AlphaRatioIsScaleFree) {
  Gen gen(102);
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t t = gen.integer(1, 6);
    const BudgetVector x = gen.budget(t);
    const BudgetVector y = gen.budget(t, 0.0, 10.0);
    const double c = gen.uniform(0.01, 100.0);
    const double base = alpha_ratio(x, y);
    EXPECT_NEAR(alpha_ratio(x.scaled(c), y.scaled(c)), base, 1e-12 * base);
  }
}

TEST(CoreProperties, ExactlyOnePlayerWinsEachContest) {
  Gen gen(103);
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t t = gen.integer(1, 5);
    std::vector<double> x = gen.vec(t, 0.0, 2.0);
    std::vector<double> y = gen.vec(t, 0.0, 2.0);
    if (gen.coin(0.3)) y[0] = x[0];
    bool y_exceeds_somewhere = false;
    for (std::size_t k = 0; k < t; ++k) y_exceeds_somewhere |= y[k] > x[k];
    EXPECT_NE(wins_weakest_link(x, y), y_exceeds_somewhere);
  }
}

TEST(CoreProperties, UnitWeightsGiveTotalBudgetRatio) {
  Gen gen(104);
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t t = gen.integer(1, 6);
    const BudgetVector x = gen.budget(t);
    const BudgetVector y = gen.budget(t);
    const std::vector<double> ones(t, 1.0);
    EXPECT_EQ(beta_ratio(x, y, EffectivenessWeights(ones, ones)),
              y.sum() / x.sum());
  }
}

TEST(EquilibriaProperties, SaddleCoincidence) {
  Gen gen(201);
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t t = gen.integer(1, 6);
    const BudgetVector x = gen.budget(t);
    const BudgetVector y = gen.budget(t);
    const double value = lotto_payoff(alpha_ratio(x, y));
    const auto ub = min_upper_bound(x, y);
    const auto lb = max_lower_bound(x, y);
    EXPECT_NEAR(upper_bound(ub.delta_y, ub.p, x, y), value, 1e-12);
    EXPECT_NEAR(lower_bound(lb.delta_x, x, y), value, 1e-12);
    EXPECT_NEAR(ub.value, lb.value, 1e-12);
  }
}

TEST(EquilibriaProperties, BoundsAreValid) {
  Gen gen(202);
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t t = gen.integer(1, 6);
    const BudgetVector x = gen.budget(t);
    const BudgetVector y = gen.budget(t);
    const double value = lotto_payoff(alpha_ratio(x, y));
    const auto p = gen.simplex(t);
    EXPECT_GE(upper_bound(gen.uniform(0.0, 1.0), p, x, y), value - 1e-12);
    EXPECT_LE(lower_bound(gen.uniform(0.0, 1.0), x, y), value + 1e-12);
  }
}

TEST(EquilibriaProperties, CdfIsMonotoneWithAtomAtZero) {
  Gen gen(203);
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t t = gen.integer(1, 4);
    const std::size_t c = gen.integer(1, 3);
    const auto eq = wl_equilibrium(gen.budget(t), gen.budget(t), gen.contests(c));
    for (const auto* params : {&*eq.strategy_x, &*eq.strategy_y}) {
      const std::size_t contest = gen.integer(0, c - 1);
      std::vector<double> u(t, 0.0);
      if (params->form() == StrategyForm::kWeakestLink) {
        EXPECT_NEAR(eval_cdf(*params, contest, u), 1.0 - params->delta(), 1e-12);
      }
      double previous = eval_cdf(*params, contest, u);
      for (int step = 0; step < 20; ++step) {
        u[gen.integer(0, t - 1)] += gen.uniform(0.0, 1.0);
        const double next = eval_cdf(*params, contest, u);
        EXPECT_GE(next, previous - 1e-15);
        EXPECT_LE(next, 1.0 + 1e-15);
        previous = next;
      }
      std::vector<double> far(t, 1e9);
      EXPECT_NEAR(eval_cdf(*params, contest, far), 1.0, 1e-12);
    }
  }
}

void expect_budget_feasible(const StrategyParams& params, const ContestValues& v,
                            const BudgetVector& budget) {
  const auto spend = expected_spend(params, v);
  for (std::size_t t = 0; t < budget.size(); ++t) {
    EXPECT_NEAR(spend[t], budget[t], 1e-9 * std::max(1.0, budget[t]));
  }
}

TEST(EquilibriaProperties, EquilibriumStrategiesAreBudgetFeasible) {
  Gen gen(204);
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t t = gen.integer(1, 6);
    const std::size_t c = gen.integer(1, 5);
    const BudgetVector x = gen.budget(t);
    const BudgetVector y = gen.budget(t);
    const ContestValues v = gen.contests(c);
    const auto wl = wl_equilibrium(x, y, v);
    expect_budget_feasible(*wl.strategy_x, v, x);
    expect_budget_feasible(*wl.strategy_y, v, y);
    const EffectivenessWeights w(gen.vec(t, 0.1, 3.0), gen.vec(t, 0.1, 3.0));
    const auto wc = wc_equilibrium(x, y, v, w);
    expect_budget_feasible(*wc.strategy_x, v, x);
    expect_budget_feasible(*wc.strategy_y, v, y);
  }
}

TEST(EquilibriaProperties, ConstantSumAndReportedRatio) {
  Gen gen(205);
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t t = gen.integer(1, 6);
    const BudgetVector x = gen.budget(t);
    const BudgetVector y = gen.budget(t);
    const ContestValues v = gen.contests(gen.integer(1, 5));
    const auto wl = wl_equilibrium(x, y, v);
    EXPECT_NEAR(wl.payoff_x + wl.payoff_y, 1.0, 1e-12);
    EXPECT_EQ(wl.payoff_x, lotto_payoff(wl.ratio));
    const EffectivenessWeights w(gen.vec(t, 0.0, 3.0), gen.vec(t, 0.1, 3.0));
    if (std::ranges::none_of(w.a(), [](double a) { return a > 0.0; })) continue;
    const auto wc = wc_equilibrium(x, y, v, w);
    EXPECT_NEAR(wc.payoff_x + wc.payoff_y, 1.0, 1e-12);
    EXPECT_EQ(wc.payoff_x, lotto_payoff(beta_ratio(x, y, w)));
  }
}

TEST(EquilibriaProperties, WeightedSingleTypeIsClassicLotto) {
  Gen gen(206);
  const EffectivenessWeights ones({1.0}, {1.0});
  for (int i = 0; i < kPropertyCases; ++i) {
    const BudgetVector x = gen.budget(1);
    const BudgetVector y = gen.budget(1);
    const auto wc = wc_equilibrium(x, y, ContestValues({1.0}), ones);
    EXPECT_EQ(wc.payoff_x, lotto_payoff(y[0] / x[0]));
  }
}

TEST(SamplingProperties, ReproducibleEstimates) {
  Gen gen(301);
  for (int i = 0; i < 20; ++i) {
    const std::size_t t = gen.integer(1, 4);
    const ContestValues v = gen.contests(gen.integer(1, 5));
    const auto eq = wl_equilibrium(gen.budget(t), gen.budget(t), v);
    const std::uint64_t seed = gen.engine()();
    const auto a = mc_payoff(*eq.strategy_x, *eq.strategy_y, v, WeakestLinkForX{},
                             1000, seed);
    const auto b = mc_payoff(*eq.strategy_x, *eq.strategy_y, v, WeakestLinkForX{},
                             1000, seed);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_EQ(sample_batch(*eq.strategy_y, v, 50, seed).allocations,
              sample_batch(*eq.strategy_y, v, 50, seed).allocations);
  }
}

TEST(SamplingProperties, ComonotoneRowsLieOnTheScaleRay) {
  Gen gen(302);
  for (int i = 0; i < 50; ++i) {
    const std::size_t t = gen.integer(2, 5);
    const ContestValues v = gen.contests(gen.integer(1, 4));
    const auto eq = wl_equilibrium(gen.budget(t), gen.budget(t), v);
    const auto& px = *eq.strategy_x;
    const auto a = sample_allocation(px, v, gen.engine()(), 0);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (a.at(c, 0) == 0.0) continue;
      const double u = a.at(c, 0) / px.scale(c, 0);
      for (std::size_t k = 1; k < t; ++k) {
        EXPECT_NEAR(a.at(c, k), px.scale(c, k) * u, 1e-12 * px.scale(c, k));
      }
    }
  }
}

TEST(SamplingProperties, MonteCarloMatchesEquilibriumPayoff) {
  Gen gen(303);
  for (int i = 0; i < 8; ++i) {
    const std::size_t t = gen.integer(1, 4);
    const ContestValues v = gen.contests(gen.integer(1, 5));
    const BudgetVector x = gen.budget(t);
    const BudgetVector y = gen.budget(t);
    const auto eq = wl_equilibrium(x, y, v);
    const auto est = mc_payoff(*eq.strategy_x, *eq.strategy_y, v,
                               WeakestLinkForX{}, 1000000, gen.engine()());
    EXPECT_LE(std::abs(est.mean - eq.payoff_x), 4.0 * est.std_error)
        << "alpha=" << eq.ratio;
    const auto spend = empirical_spend(*eq.strategy_x, v, 1000000, gen.engine()());
    for (std::size_t k = 0; k < t; ++k) {
      EXPECT_LE(std::abs(spend.mean[k] - x[k]), 4.0 * spend.std_error[k]);
    }
  }
}

TEST(SamplingProperties, NoProfitableBestShotDeviation) {
  const ContestValues v({0.3, 0.7});
  const BudgetVector x({2.0, 1.0});
  const BudgetVector y({1.0, 1.0});
  const auto eq = wl_equilibrium(x, y, v);
  const double y_value = eq.payoff_y;
  Gen gen(304);
  for (int panel = 0; panel < 20; ++panel) {
    const double delta =
        std::clamp(eq.strategy_y->delta() * gen.uniform(0.5, 1.0), 0.0, 1.0);
    std::vector<double> p(eq.strategy_y->type_probs().begin(),
                          eq.strategy_y->type_probs().end());
    if (panel % 2 == 1) p = gen.simplex(2);
    if (std::ranges::any_of(p, [](double q) { return q == 0.0; })) p = {0.5, 0.5};
    const auto deviation = best_shot_strategy(delta, p, y, v);
    const auto est = mc_payoff(*eq.strategy_x, deviation, v, WeakestLinkForX{},
                               200000, 900 + panel);
    EXPECT_LE(1.0 - est.mean, y_value + 4.0 * est.std_error) << "panel " << panel;
  }
}

TEST(InvestmentProperties, EquilibriumIsAFixedPoint) {
  Gen gen(401);
  for (int i = 0; i < kPropertyCases; ++i) {
    const CostProfile costs = gen.costs(gen.integer(1, 5));
    const auto eq = mlc_equilibrium(costs);
    EXPECT_TRUE(best_response_y(eq.money_x, costs.r()).contains(eq.money_y));
    EXPECT_TRUE(best_response_x(eq.money_y, costs.r()).contains(eq.money_x));
    EXPECT_EQ(eq.money_x, eq.money_y);
    double spend_x = 0.0;
    double spend_y = 0.0;
    for (std::size_t t = 0; t < costs.size(); ++t) {
      spend_x += costs.kappa()[t] * eq.x_star[t];
      spend_y += costs.sigma()[t] * eq.y_star[t];
    }
    EXPECT_NEAR(spend_x, eq.money_x, 1e-12);
    EXPECT_NEAR(spend_y, eq.money_y, 1e-12);
  }
}

TEST(InvestmentProperties, ConsistentWithSunkCostDivision) {
  Gen gen(402);
  for (int i = 0; i < kPropertyCases; ++i) {
    const CostProfile costs = gen.costs(gen.integer(1, 5));
    const auto eq = mlc_equilibrium(costs);
    const auto sunk = sunk_cost_equilibrium(eq.money_x, eq.money_y, costs);
    for (std::size_t t = 0; t < costs.size(); ++t) {
      EXPECT_NEAR(eq.x_star[t], sunk.x_star[t], 1e-12);
      EXPECT_NEAR(eq.y_star[t], sunk.y_star[t], 1e-12);
    }
  }
}

TEST(InvestmentProperties, XFractionsDependOnlyOnSigma) {
  Gen gen(403);
  for (int i = 0; i < kPropertyCases; ++i) {
    const CostProfile costs = gen.costs(gen.integer(1, 5));
    const auto fractions = investment_fractions(mlc_equilibrium(costs).x_star);
    double inverse_total = 0.0;
    for (double s : costs.sigma()) inverse_total += 1.0 / s;
    for (std::size_t t = 0; t < costs.size(); ++t) {
      EXPECT_NEAR(fractions[t], (1.0 / costs.sigma()[t]) / inverse_total, 1e-12);
    }
  }
}

TEST(InvestmentProperties, UnitRatioOneSidedLimits) {
  // Lotto payoffs and net utilities of the equilibrium are both continuous
  // in r; at r = 1 they are (1/2, 1/2) and (0, 0).
  for (double r : {1.0 - 1e-6, 1.0 + 1e-6}) {
    const CostProfile costs({r}, {1.0});
    const auto eq = mlc_equilibrium(costs);
    EXPECT_NEAR(eq.payoff_x, 0.5, 1e-5);
    EXPECT_NEAR(eq.utility_x, 0.0, 1e-5);
    EXPECT_NEAR(eq.utility_y, 0.0, 1e-5);
  }
}

TEST(InvestmentProperties, NoProfitableDeviationOnMoneyGrid) {
  Gen gen(404);
  const GridSpec grid{2000, std::nullopt};
  for (int i = 0; i < 50; ++i) {
    const auto gains = numeric_mlc_best_response(gen.costs(gen.integer(1, 4)), grid);
    EXPECT_LE(gains.gain_x, 1e-3);
    EXPECT_LE(gains.gain_y, 1e-3);
  }
}

TEST(OracleProperties, BoundSearchesMatchClosedForm) {
  Gen gen(501);
  const GridSpec grid{200, std::nullopt};
  for (int i = 0; i < 50; ++i) {
    const std::size_t t = gen.integer(1, 4);
    const BudgetVector x = gen.budget(t);
    const BudgetVector y = gen.budget(t);
    const double value = lotto_payoff(alpha_ratio(x, y));
    EXPECT_NEAR(numeric_min_ub(x, y, grid).value, value, 0.01);
    EXPECT_NEAR(numeric_max_lb(x, y, grid).value, value, 0.01);
  }
}

TEST(OracleProperties, SunkSearchMatchesClosedForm) {
  Gen gen(502);
  const GridSpec grid{11, std::nullopt};
  for (int i = 0; i < 50; ++i) {
    const CostProfile costs = gen.costs(gen.integer(2, 3), 0.2, 5.0);
    const double mx = gen.uniform(0.2, 2.0);
    const double my = gen.uniform(0.2, 2.0);
    const auto search = numeric_sunk_division(mx, my, costs, grid);
    const auto closed = sunk_cost_equilibrium(mx, my, costs);
    EXPECT_TRUE(search.converged);
    for (std::size_t t = 0; t < costs.size(); ++t) {
      EXPECT_NEAR(search.x_hat[t], closed.x_star[t], 0.02);
      EXPECT_NEAR(search.y_hat[t], closed.y_star[t], 0.02);
    }
  }
}

TEST(OracleProperties, SubsetIdentityWithTiesAndZeros) {
  Gen gen(503);
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t t = gen.integer(1, 12);
    std::vector<double> z(t);
    for (std::size_t k = 0; k < t; ++k) {
      if (gen.coin(0.15)) {
        z[k] = 0.0;
      } else if (k > 0 && gen.coin(0.2)) {
        z[k] = z[gen.integer(0, k - 1)];
      } else {
        z[k] = gen.uniform(0.0, 5.0);
      }
    }
    const auto s = maxmin_subset_identity(z);
    EXPECT_NEAR(s.lhs, s.rhs, 1e-9);
  }
}

}  // namespace
}  // namespace mrlotto
