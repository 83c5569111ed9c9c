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

// Domain types and scalar primitives for multi-resource General Lotto games.
//
// Two players X and Y compete over C contests with T resource types. Winning
// rules are written from X's point of view: X wins contest c when
// W(x_c, y_c) = 1, otherwise Y collects the value v_c.

#ifndef MRLOTTO_CORE_HPP_
#define MRLOTTO_CORE_HPP_

#include <cstddef>
#include <limits>
#include <span>
#include <variant>
#include <vector>

#include "mrlotto/errors.hpp"

namespace mrlotto {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Per-type nonnegative resource budgets of one player.
class BudgetVector {
 public:
  explicit BudgetVector(std::vector<double> amounts);

  std::size_t size() const { return amounts_.size(); }
  double operator[](std::size_t t) const { return amounts_[t]; }
  std::span<const double> values() const { return amounts_; }
  bool all_positive() const;
  double sum() const;

  BudgetVector scaled(double factor) const;

  friend bool operator==(const BudgetVector&, const BudgetVector&) = default;

 private:
  std::vector<double> amounts_;
};

// Contest values. The constructor accepts any positive vector, normalizes it
// to sum one and keeps the original total so callers can rescale payoffs.
class ContestValues {
 public:
  explicit ContestValues(std::vector<double> values);

  std::size_t size() const { return normalized_.size(); }
  double operator[](std::size_t c) const { return normalized_[c]; }
  std::span<const double> normalized() const { return normalized_; }
  std::span<const double> raw() const { return raw_; }
  double total() const { return total_; }

  friend bool operator==(const ContestValues&, const ContestValues&) = default;

 private:
  std::vector<double> raw_;
  std::vector<double> normalized_;
  double total_ = 0.0;
};

// Effectiveness weights a (player X) and b (player Y) of the weighted
// contribution rule.
class EffectivenessWeights {
 public:
  EffectivenessWeights(std::vector<double> a, std::vector<double> b);

  std::size_t size() const { return a_.size(); }
  std::span<const double> a() const { return a_; }
  std::span<const double> b() const { return b_; }

  friend bool operator==(const EffectivenessWeights&,
                         const EffectivenessWeights&) = default;

 private:
  std::vector<double> a_;
  std::vector<double> b_;
};

// X needs x_t >= y_t on every type; Y therefore plays best-shot.
struct WeakestLinkForX {
  friend bool operator==(const WeakestLinkForX&,
                         const WeakestLinkForX&) = default;
};

struct WeightedContribution {
  EffectivenessWeights weights;
  friend bool operator==(const WeightedContribution&,
                         const WeightedContribution&) = default;
};

using WinningRule = std::variant<WeakestLinkForX, WeightedContribution>;

// C x T matrix of per-contest, per-type allocations, row-major by contest.
class Allocation {
 public:
  Allocation(std::size_t contests, std::size_t types);

  std::size_t contests() const { return contests_; }
  std::size_t types() const { return types_; }

  double at(std::size_t c, std::size_t t) const {
    return cells_[c * types_ + t];
  }
  void set(std::size_t c, std::size_t t, double amount);

  std::span<const double> row(std::size_t c) const {
    return std::span<const double>(cells_).subspan(c * types_, types_);
  }
  std::span<double> mutable_row(std::size_t c) {
    return std::span<double>(cells_).subspan(c * types_, types_);
  }

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::size_t contests_;
  std::size_t types_;
  std::vector<double> cells_;
};

// The classic General Lotto value L: 1 - alpha/2 for alpha <= 1 and
// 1/(2 alpha) otherwise. L(+inf) = 0. Throws DomainError on negative or NaN.
double lotto_payoff(double alpha);

// Sum of Y_t / X_t. A type with X_t = 0 < Y_t makes the ratio +inf; a type
// absent on both sides contributes nothing.
double alpha_ratio(const BudgetVector& x, const BudgetVector& y);

// (sum_t b_t Y_t) / (sum_t a_t X_t). +inf when only the denominator vanishes;
// DegenerateGameError when both aggregates are zero.
double beta_ratio(const BudgetVector& x, const BudgetVector& y,
                  const EffectivenessWeights& w);

// sum_t kappa_t / sigma_t over strictly positive per-unit costs.
double cost_ratio(std::span<const double> kappa, std::span<const double> sigma);

// Ties go to X in both rules.
bool wins_weakest_link(std::span<const double> x, std::span<const double> y);
bool wins_weighted(std::span<const double> x, std::span<const double> y,
                   const EffectivenessWeights& w);

// Dispatches on the rule; true when X wins the contest.
bool x_wins(const WinningRule& rule, std::span<const double> x,
            std::span<const double> y);

// Number of resource types the rule is configured for, or 0 when the rule is
// type-agnostic (weakest-link).
std::size_t rule_types(const WinningRule& rule);

}  // namespace mrlotto

#endif  // MRLOTTO_CORE_HPP_
