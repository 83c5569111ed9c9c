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

#include "mrlotto/core.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace mrlotto {
namespace {

void require_same_length(std::size_t lhs, std::size_t rhs, const char* what) {
  if (lhs != rhs) {
    throw DimensionError(std::string(what) + ": length mismatch (" +
                         std::to_string(lhs) + " vs " + std::to_string(rhs) +
                         ")");
  }
}

void require_nonnegative_finite(std::span<const double> values,
                                const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      throw DomainError(std::string(what) + "[" + std::to_string(i) +
                        "] must be finite and >= 0");
    }
  }
}

}  // namespace

BudgetVector::BudgetVector(std::vector<double> amounts)
    : amounts_(std::move(amounts)) {
  if (amounts_.empty()) {
    throw DomainError("budget vector needs at least one resource type");
  }
  require_nonnegative_finite(amounts_, "budget");
}

bool BudgetVector::all_positive() const {
  for (double a : amounts_) {
    if (!(a > 0.0)) return false;
  }
  return true;
}

double BudgetVector::sum() const {
  return std::accumulate(amounts_.begin(), amounts_.end(), 0.0);
}

BudgetVector BudgetVector::scaled(double factor) const {
  std::vector<double> out = amounts_;
  for (double& a : out) a *= factor;
  return BudgetVector(std::move(out));
}

ContestValues::ContestValues(std::vector<double> values)
    : raw_(std::move(values)) {
  if (raw_.empty()) {
    throw DomainError("contest values need at least one contest");
  }
  for (std::size_t c = 0; c < raw_.size(); ++c) {
    if (!std::isfinite(raw_[c]) || !(raw_[c] > 0.0)) {
      throw DomainError("contest value[" + std::to_string(c) +
                        "] must be finite and > 0");
    }
  }
  total_ = std::accumulate(raw_.begin(), raw_.end(), 0.0);
  normalized_.reserve(raw_.size());
  for (double v : raw_) normalized_.push_back(v / total_);
}

EffectivenessWeights::EffectivenessWeights(std::vector<double> a,
                                           std::vector<double> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty()) throw DomainError("weights need at least one type");
  require_same_length(a_.size(), b_.size(), "effectiveness weights");
  require_nonnegative_finite(a_, "weight a");
  require_nonnegative_finite(b_, "weight b");
  auto any_positive = [](const std::vector<double>& w) {
    for (double x : w) {
      if (x > 0.0) return true;
    }
    return false;
  };
  if (!any_positive(a_) || !any_positive(b_)) {
    throw DomainError("each side needs at least one positive weight");
  }
}

Allocation::Allocation(std::size_t contests, std::size_t types)
    : contests_(contests), types_(types), cells_(contests * types, 0.0) {
  if (contests == 0 || types == 0) {
    throw DomainError("allocation needs C >= 1 and T >= 1");
  }
}

void Allocation::set(std::size_t c, std::size_t t, double amount) {
  if (c >= contests_ || t >= types_) {
    throw DimensionError("allocation index out of range");
  }
  if (!std::isfinite(amount) || amount < 0.0) {
    throw DomainError("allocation entries must be finite and >= 0");
  }
  cells_[c * types_ + t] = amount;
}

double lotto_payoff(double alpha) {
  if (std::isnan(alpha) || alpha < 0.0) {
    throw DomainError("lotto_payoff: alpha must be >= 0");
  }
  if (alpha == kInfinity) return 0.0;
  if (alpha <= 1.0) return 1.0 - alpha / 2.0;
  return 1.0 / (2.0 * alpha);
}

double alpha_ratio(const BudgetVector& x, const BudgetVector& y) {
  require_same_length(x.size(), y.size(), "alpha_ratio");
  double alpha = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (y[t] == 0.0) continue;
    if (x[t] == 0.0) return kInfinity;
    alpha += y[t] / x[t];
  }
  return alpha;
}

double beta_ratio(const BudgetVector& x, const BudgetVector& y,
                  const EffectivenessWeights& w) {
  require_same_length(x.size(), y.size(), "beta_ratio");
  require_same_length(x.size(), w.size(), "beta_ratio weights");
  double effective_x = 0.0;
  double effective_y = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    effective_x += w.a()[t] * x[t];
    effective_y += w.b()[t] * y[t];
  }
  if (effective_x == 0.0) {
    if (effective_y == 0.0) {
      throw DegenerateGameError(
          "beta_ratio: both weighted aggregate budgets are zero");
    }
    return kInfinity;
  }
  return effective_y / effective_x;
}

double cost_ratio(std::span<const double> kappa,
                  std::span<const double> sigma) {
  require_same_length(kappa.size(), sigma.size(), "cost_ratio");
  if (kappa.empty()) throw DomainError("cost_ratio: no resource types");
  double r = 0.0;
  for (std::size_t t = 0; t < kappa.size(); ++t) {
    if (!(kappa[t] > 0.0) || !(sigma[t] > 0.0) || !std::isfinite(kappa[t]) ||
        !std::isfinite(sigma[t])) {
      throw DomainError("cost_ratio: costs must be finite and > 0");
    }
    r += kappa[t] / sigma[t];
  }
  return r;
}

bool wins_weakest_link(std::span<const double> x, std::span<const double> y) {
  require_same_length(x.size(), y.size(), "wins_weakest_link");
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (x[t] < y[t]) return false;
  }
  return true;
}

bool wins_weighted(std::span<const double> x, std::span<const double> y,
                   const EffectivenessWeights& w) {
  require_same_length(x.size(), y.size(), "wins_weighted");
  require_same_length(x.size(), w.size(), "wins_weighted weights");
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    sx += w.a()[t] * x[t];
    sy += w.b()[t] * y[t];
  }
  return sx >= sy;
}

bool x_wins(const WinningRule& rule, std::span<const double> x,
            std::span<const double> y) {
  if (const auto* wc = std::get_if<WeightedContribution>(&rule)) {
    return wins_weighted(x, y, wc->weights);
  }
  return wins_weakest_link(x, y);
}

std::size_t rule_types(const WinningRule& rule) {
  if (const auto* wc = std::get_if<WeightedContribution>(&rule)) {
    return wc->weights.size();
  }
  return 0;
}

}  // namespace mrlotto
