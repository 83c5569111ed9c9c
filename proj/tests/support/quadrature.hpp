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

// Expected payoff of a strategy profile by numerical integration over the
// uniform draws. Written against the sampling recipe only, so it checks the
// closed-form payoffs without sharing code with them.

#ifndef MRLOTTO_TESTS_SUPPORT_QUADRATURE_HPP_
#define MRLOTTO_TESTS_SUPPORT_QUADRATURE_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <variant>

#include "mrlotto/core.hpp"
#include "mrlotto/equilibria.hpp"

namespace mrlotto::testing {

inline constexpr std::size_t kQuadraturePoints = 200000;

// P(U >= z) for U uniform on [0, 1].
inline double tail(double z) { return 1.0 - std::clamp(z, 0.0, 1.0); }

// Probability that X wins contest c when X plays the weakest-link form and
// Y the best-shot form under the weakest-link rule.
inline double wl_contest_win(const StrategyParams& px, const StrategyParams& py,
                             std::size_t c) {
  const auto sx = px.scale_row(c);
  const auto sy = py.scale_row(c);
  const auto p = py.type_probs();
  double y_active_win = 0.0;
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (p[t] == 0.0) continue;
    // Midpoint rule over Y's uniform draw; X must be active and reach y.
    double sum = 0.0;
    for (std::size_t i = 0; i < kQuadraturePoints; ++i) {
      const double u = (static_cast<double>(i) + 0.5) / kQuadraturePoints;
      const double y = sy[t] * u;
      sum += sx[t] > 0.0 ? tail(y / sx[t]) : 0.0;
    }
    y_active_win += p[t] * px.delta() * sum / kQuadraturePoints;
  }
  return (1.0 - py.delta()) + py.delta() * y_active_win;
}

// Both players on the weakest-link form under the weighted rule.
inline double wc_contest_win(const StrategyParams& px, const StrategyParams& py,
                             const EffectivenessWeights& w, std::size_t c) {
  double ax = 0.0;
  double by = 0.0;
  for (std::size_t t = 0; t < px.types(); ++t) {
    ax += w.a()[t] * px.scale(c, t);
    by += w.b()[t] * py.scale(c, t);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < kQuadraturePoints; ++i) {
    const double u = (static_cast<double>(i) + 0.5) / kQuadraturePoints;
    const double y = by * u;
    sum += ax > 0.0 ? tail(y / ax) : 0.0;
  }
  const double y_active_win = px.delta() * sum / kQuadraturePoints;
  return (1.0 - py.delta()) + py.delta() * y_active_win;
}

inline double quadrature_payoff(const StrategyParams& px,
                                const StrategyParams& py,
                                const ContestValues& v,
                                const WinningRule& rule) {
  double total = 0.0;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (const auto* wc = std::get_if<WeightedContribution>(&rule)) {
      total += v[c] * wc_contest_win(px, py, wc->weights, c);
    } else {
      total += v[c] * wl_contest_win(px, py, c);
    }
  }
  return total;
}

}  // namespace mrlotto::testing

#endif  // MRLOTTO_TESTS_SUPPORT_QUADRATURE_HPP_
