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

#include "mrlotto/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace mrlotto {
namespace {

constexpr double kProbabilitySumTolerance = 1e-12;
constexpr double kBoundProbabilityTolerance = 1e-9;

void require_delta(double delta, const char* what) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw DomainError(std::string(what) + ": delta must lie in [0, 1]");
  }
}

void require_probability_vector(std::span<const double> p, double tolerance,
                                const char* what) {
  double total = 0.0;
  for (double pt : p) {
    if (!std::isfinite(pt) || pt < 0.0) {
      throw DomainError(std::string(what) + ": probabilities must be >= 0");
    }
    total += pt;
  }
  if (std::abs(total - 1.0) > tolerance) {
    throw DomainError(std::string(what) + ": probabilities must sum to 1");
  }
}

void require_scales(std::size_t contests, std::size_t types,
                    std::span<const double> scales) {
  if (contests == 0 || types == 0) {
    throw DomainError("strategy needs C >= 1 and T >= 1");
  }
  if (scales.size() != contests * types) {
    throw DimensionError("strategy scales must have C x T entries");
  }
  for (double s : scales) {
    if (!std::isfinite(s) || s < 0.0) {
      throw DomainError("strategy scales must be finite and >= 0");
    }
  }
}

void require_same_types(const BudgetVector& x, const BudgetVector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("budget vectors have different numbers of types");
  }
}

// Scales 2 v_c B_t * factor for every contest and type.
std::vector<double> uniform_tops(const BudgetVector& budget,
                                 const ContestValues& v, double factor) {
  std::vector<double> scales;
  scales.reserve(v.size() * budget.size());
  for (std::size_t c = 0; c < v.size(); ++c) {
    for (std::size_t t = 0; t < budget.size(); ++t) {
      scales.push_back(2.0 * v[c] * budget[t] * factor);
    }
  }
  return scales;
}

EquilibriumReport degenerate_report(double ratio, WinningRule rule) {
  EquilibriumReport report;
  report.payoff_x = 0.0;
  report.payoff_y = 1.0;
  report.ratio = ratio;
  report.rule = std::move(rule);
  return report;
}

}  // namespace

StrategyParams StrategyParams::WeakestLink(double delta, std::size_t contests,
                                           std::size_t types,
                                           std::vector<double> scales) {
  require_delta(delta, "weakest-link strategy");
  require_scales(contests, types, scales);
  StrategyParams params;
  params.form_ = StrategyForm::kWeakestLink;
  params.delta_ = delta;
  params.contests_ = contests;
  params.types_ = types;
  params.scales_ = std::move(scales);
  return params;
}

StrategyParams StrategyParams::BestShot(double delta,
                                        std::vector<double> type_probs,
                                        std::size_t contests,
                                        std::size_t types,
                                        std::vector<double> scales) {
  require_delta(delta, "best-shot strategy");
  require_scales(contests, types, scales);
  if (type_probs.size() != types) {
    throw DimensionError("best-shot type probabilities must have T entries");
  }
  require_probability_vector(type_probs, kProbabilitySumTolerance,
                             "best-shot strategy");
  StrategyParams params;
  params.form_ = StrategyForm::kBestShot;
  params.delta_ = delta;
  params.type_probs_ = std::move(type_probs);
  params.contests_ = contests;
  params.types_ = types;
  params.scales_ = std::move(scales);
  return params;
}

StrategyParams weakest_link_strategy(double delta, const BudgetVector& budget,
                                     const ContestValues& v) {
  require_delta(delta, "weakest_link_strategy");
  const double factor = delta > 0.0 ? 1.0 / delta : 1.0;
  return StrategyParams::WeakestLink(delta, v.size(), budget.size(),
                                     uniform_tops(budget, v, factor));
}

StrategyParams best_shot_strategy(double delta, std::vector<double> type_probs,
                                  const BudgetVector& budget,
                                  const ContestValues& v) {
  require_delta(delta, "best_shot_strategy");
  if (type_probs.size() != budget.size()) {
    throw DimensionError("best_shot_strategy: p must have T entries");
  }
  std::vector<double> scales;
  scales.reserve(v.size() * budget.size());
  for (std::size_t c = 0; c < v.size(); ++c) {
    for (std::size_t t = 0; t < budget.size(); ++t) {
      const double weight = delta * type_probs[t];
      if (type_probs[t] > 0.0 && budget[t] == 0.0) {
        throw DomainError(
            "best_shot_strategy: positive probability on an empty type");
      }
      scales.push_back(weight > 0.0 ? 2.0 * v[c] * budget[t] / weight
                                    : 2.0 * v[c] * budget[t]);
    }
  }
  return StrategyParams::BestShot(delta, std::move(type_probs), v.size(),
                                  budget.size(), std::move(scales));
}

EquilibriumReport wl_equilibrium(const BudgetVector& x, const BudgetVector& y,
                                 const ContestValues& v) {
  require_same_types(x, y);
  const double alpha = alpha_ratio(x, y);
  if (alpha == kInfinity) return degenerate_report(alpha, WeakestLinkForX{});

  const std::size_t types = x.size();
  const bool x_stronger = alpha <= 1.0;
  const double delta_x = x_stronger ? 1.0 : 1.0 / alpha;
  const double delta_y = x_stronger ? alpha : 1.0;
  // s_ct = 2 v_c X_t / delta_X, shared by both players.
  const double stretch = x_stronger ? 1.0 : alpha;

  std::vector<double> p(types, 0.0);
  if (alpha == 0.0) {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(types));
  } else {
    for (std::size_t t = 0; t < types; ++t) {
      if (y[t] > 0.0) p[t] = (y[t] / x[t]) / alpha;
    }
  }

  EquilibriumReport report;
  report.ratio = alpha;
  report.rule = WeakestLinkForX{};
  report.payoff_x = lotto_payoff(alpha);
  report.payoff_y = 1.0 - report.payoff_x;
  report.strategy_x = StrategyParams::WeakestLink(
      delta_x, v.size(), types, uniform_tops(x, v, stretch));
  report.strategy_y = StrategyParams::BestShot(delta_y, std::move(p), v.size(),
                                               types,
                                               uniform_tops(x, v, stretch));
  return report;
}

EquilibriumReport wc_equilibrium(const BudgetVector& x, const BudgetVector& y,
                                 const ContestValues& v,
                                 const EffectivenessWeights& w) {
  require_same_types(x, y);
  const double beta = beta_ratio(x, y, w);
  WinningRule rule = WeightedContribution{w};
  if (beta == kInfinity) return degenerate_report(beta, std::move(rule));

  const std::size_t types = x.size();
  double delta_x = 1.0;
  double delta_y = 1.0;
  std::vector<double> scales_x;
  std::vector<double> scales_y;
  if (beta <= 1.0) {
    delta_y = beta;
    scales_x = uniform_tops(x, v, 1.0);
    scales_y = uniform_tops(y, v, beta > 0.0 ? 1.0 / beta : 1.0);
  } else {
    delta_x = 1.0 / beta;
    scales_x = uniform_tops(x, v, beta);
    scales_y = uniform_tops(y, v, 1.0);
  }

  EquilibriumReport report;
  report.ratio = beta;
  report.rule = std::move(rule);
  report.payoff_x = lotto_payoff(beta);
  report.payoff_y = 1.0 - report.payoff_x;
  report.strategy_x = StrategyParams::WeakestLink(delta_x, v.size(), types,
                                                  std::move(scales_x));
  report.strategy_y = StrategyParams::WeakestLink(delta_y, v.size(), types,
                                                  std::move(scales_y));
  return report;
}

double eval_cdf(const StrategyParams& params, std::size_t c,
                std::span<const double> u) {
  if (c >= params.contests()) {
    throw DimensionError("eval_cdf: contest index out of range");
  }
  if (u.size() != params.types()) {
    throw DimensionError("eval_cdf: u must have T entries");
  }
  for (double ut : u) {
    if (std::isnan(ut) || ut < 0.0) {
      throw DomainError("eval_cdf: u must be >= 0");
    }
  }
  const auto row = params.scale_row(c);
  auto fraction = [&](std::size_t t) {
    return row[t] == 0.0 ? 1.0 : std::min(u[t] / row[t], 1.0);
  };
  double mass = 0.0;
  if (params.form() == StrategyForm::kWeakestLink) {
    mass = 1.0;
    for (std::size_t t = 0; t < u.size(); ++t) mass = std::min(mass, fraction(t));
  } else {
    const auto p = params.type_probs();
    for (std::size_t t = 0; t < u.size(); ++t) mass += p[t] * fraction(t);
  }
  return (1.0 - params.delta()) + params.delta() * mass;
}

double upper_bound(double delta_y, std::span<const double> p,
                   const BudgetVector& x, const BudgetVector& y) {
  require_delta(delta_y, "upper_bound");
  require_same_types(x, y);
  if (p.size() != x.size()) {
    throw DimensionError("upper_bound: p must have T entries");
  }
  require_probability_vector(p, kBoundProbabilityTolerance, "upper_bound");
  double g = 0.0;
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (p[t] == 0.0) continue;
    if (y[t] == 0.0) {
      throw DomainError("upper_bound: p_t > 0 on a type with Y_t = 0");
    }
    g += p[t] * p[t] * x[t] / y[t];
  }
  return 1.0 - delta_y + 0.5 * delta_y * delta_y * g;
}

UpperBoundOptimum min_upper_bound(const BudgetVector& x,
                                  const BudgetVector& y) {
  require_same_types(x, y);
  if (!x.all_positive()) {
    throw DomainError("min_upper_bound: requires X_t > 0 for every type");
  }
  const double alpha = alpha_ratio(x, y);
  UpperBoundOptimum best;
  best.p.assign(x.size(), 0.0);
  if (alpha == 0.0) {
    std::fill(best.p.begin(), best.p.end(),
              1.0 / static_cast<double>(x.size()));
  } else {
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (y[t] > 0.0) best.p[t] = (y[t] / x[t]) / alpha;
    }
  }
  best.delta_y = std::min(alpha, 1.0);
  best.value = lotto_payoff(alpha);
  return best;
}

double lower_bound(double delta_x, const BudgetVector& x,
                   const BudgetVector& y) {
  require_delta(delta_x, "lower_bound");
  const double alpha = alpha_ratio(x, y);
  if (alpha == kInfinity) return 0.0;
  return delta_x * (1.0 - 0.5 * delta_x * alpha);
}

LowerBoundOptimum max_lower_bound(const BudgetVector& x,
                                  const BudgetVector& y) {
  const double alpha = alpha_ratio(x, y);
  LowerBoundOptimum best;
  if (alpha == kInfinity) return best;
  best.delta_x = alpha <= 1.0 ? 1.0 : 1.0 / alpha;
  best.value = lotto_payoff(alpha);
  return best;
}

WcBounds wc_bounds(double delta, double beta) {
  require_delta(delta, "wc_bounds");
  if (!std::isfinite(beta) || !(beta > 0.0)) {
    throw DomainError("wc_bounds: beta must be finite and > 0");
  }
  WcBounds bounds;
  bounds.ub = 1.0 - delta + delta * delta / (2.0 * beta);
  bounds.lb = delta * (1.0 - 0.5 * delta * beta);
  return bounds;
}

WcBounds wc_bounds(double delta, const BudgetVector& x, const BudgetVector& y,
                   const EffectivenessWeights& w) {
  return wc_bounds(delta, beta_ratio(x, y, w));
}

WcBoundOptima wc_bound_optima(double beta) {
  if (!std::isfinite(beta) || !(beta > 0.0)) {
    throw DomainError("wc_bound_optima: beta must be finite and > 0");
  }
  WcBoundOptima optima;
  optima.delta_ub = std::min(beta, 1.0);
  optima.delta_lb = beta <= 1.0 ? 1.0 : 1.0 / beta;
  optima.value = lotto_payoff(beta);
  return optima;
}

}  // namespace mrlotto
