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

#include "mrlotto/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <string>

#include "mrlotto/equilibria.hpp"

namespace mrlotto {
namespace {

constexpr std::size_t kGoldenIterations = 200;
// Coarse lattice of Y shares used for X's worst case. The objective is
// linear in Y's shares, so the vertices (always on the lattice) suffice.
constexpr std::size_t kWorstCaseLattice = 4;

void require_positive(const BudgetVector& b, const char* what) {
  if (!b.all_positive()) {
    throw DomainError(std::string(what) + ": budgets must be > 0");
  }
}

// Calls visit(k) for every composition k of n into parts.size() nonnegative
// integers, in lexicographic order.
void for_each_composition(std::size_t n, std::vector<std::size_t>& parts,
                          std::size_t index,
                          const std::function<void()>& visit) {
  if (index + 1 == parts.size()) {
    parts[index] = n;
    visit();
    return;
  }
  for (std::size_t k = 0; k <= n; ++k) {
    parts[index] = k;
    for_each_composition(n - k, parts, index + 1, visit);
  }
}

std::vector<std::vector<double>> simplex_lattice(std::size_t types,
                                                 std::size_t n) {
  std::vector<std::vector<double>> points;
  std::vector<std::size_t> parts(types, 0);
  for_each_composition(n, parts, 0, [&] {
    std::vector<double> p(types);
    for (std::size_t t = 0; t < types; ++t) {
      p[t] = static_cast<double>(parts[t]) / static_cast<double>(n);
    }
    points.push_back(std::move(p));
  });
  return points;
}

template <typename F>
double golden_section_min(F f, double lo, double hi, double* argmin) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (std::size_t i = 0; i < kGoldenIterations && b - a > 1e-15; ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  // The interior search can miss a minimum sitting on an endpoint.
  double best_x = fc <= fd ? c : d;
  double best = std::min(fc, fd);
  for (double edge : {lo, hi}) {
    const double fe = f(edge);
    if (fe < best) {
      best = fe;
      best_x = edge;
    }
  }
  *argmin = best_x;
  return best;
}

// Sum_t (M_y q_t / sigma_t) / (M_x w_t / kappa_t) with 0/0 -> 0 and
// q_t > 0 = w_t -> +inf.
struct ShareAlpha {
  double money_x;
  double money_y;
  std::span<const double> kappa;
  std::span<const double> sigma;

  double operator()(std::span<const double> w,
                    std::span<const double> q) const {
    double alpha = 0.0;
    for (std::size_t t = 0; t < w.size(); ++t) {
      const double y = money_y * q[t] / sigma[t];
      if (y == 0.0) continue;
      const double x = money_x * w[t] / kappa[t];
      if (x == 0.0) return kInfinity;
      alpha += y / x;
    }
    return alpha;
  }
};

struct ZoomResult {
  std::vector<double> shares;
  double value = 0.0;
  std::size_t rounds = 0;
  bool converged = false;
};

// Maximizes f over the probability simplex of dimension `types`. The free
// coordinates are the first types - 1 shares; each round evaluates a
// `resolution`-point grid per axis inside the current box, recentres the box
// on the best point and halves its width.
ZoomResult zoom_maximize(std::size_t types, std::size_t resolution,
                         const std::function<double(std::span<const double>)>& f) {
  const std::size_t free = types - 1;
  std::vector<double> lo(free, 0.0);
  double width = 1.0;
  std::vector<double> shares(types);
  std::vector<std::size_t> counter(free, 0);

  ZoomResult best;
  best.value = -kInfinity;
  best.shares.assign(types, 1.0 / static_cast<double>(types));
  std::vector<double> center(free, 1.0 / static_cast<double>(types));

  for (std::size_t round = 1; round <= kSunkMaxRounds; ++round) {
    std::fill(counter.begin(), counter.end(), 0);
    bool found = false;
    ZoomResult round_best;
    round_best.value = -kInfinity;
    while (true) {
      double used = 0.0;
      for (std::size_t i = 0; i < free; ++i) {
        shares[i] = lo[i] + width * static_cast<double>(counter[i]) /
                                static_cast<double>(resolution - 1);
        used += shares[i];
      }
      if (used <= 1.0 + 1e-15) {
        shares[free] = std::max(0.0, 1.0 - used);
        const double value = f(shares);
        if (!found || value > round_best.value) {
          found = true;
          round_best.value = value;
          round_best.shares = shares;
        }
      }
      std::size_t axis = 0;
      while (axis < free && ++counter[axis] == resolution) {
        counter[axis] = 0;
        ++axis;
      }
      if (axis == free) break;
    }
    if (found && round_best.value >= best.value) {
      best.value = round_best.value;
      best.shares = round_best.shares;
    }
    best.rounds = round;
    if (width < kSunkWindow) {
      best.converged = true;
      break;
    }
    width *= 0.5;
    for (std::size_t i = 0; i < free; ++i) {
      center[i] = best.shares[i];
      lo[i] = std::clamp(center[i] - 0.5 * width, 0.0, 1.0 - width);
    }
  }
  return best;
}

}  // namespace

void GridSpec::validate() const {
  if (resolution < 2) throw DomainError("grid resolution must be >= 2");
  if (bounds && !(bounds->first < bounds->second)) {
    throw DomainError("grid bounds must satisfy lo < hi");
  }
}

SubsetIdentity maxmin_subset_identity(std::span<const double> z) {
  if (z.empty() || z.size() > kMaxIdentitySize) {
    throw DimensionError("maxmin_subset_identity: needs 1 to 20 entries");
  }
  for (double value : z) {
    if (!std::isfinite(value) || value < 0.0) {
      throw DomainError("maxmin_subset_identity: entries must be finite, >= 0");
    }
  }
  const std::size_t n = z.size();
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<double> subset_min(subsets, kInfinity);
  SubsetIdentity out;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    subset_min[mask] = std::min(subset_min[mask & (mask - 1)], z[low]);
    const bool odd = std::popcount(mask) % 2 == 1;
    out.lhs += odd ? subset_min[mask] : -subset_min[mask];
  }
  out.rhs = *std::max_element(z.begin(), z.end());
  return out;
}

UbSearchResult numeric_min_ub(const BudgetVector& x, const BudgetVector& y,
                              const GridSpec& grid) {
  grid.validate();
  if (x.size() != y.size()) throw DimensionError("numeric_min_ub: T mismatch");
  if (x.size() > kMaxLatticeTypes) {
    throw DimensionError("numeric_min_ub: lattice search supports T <= 4");
  }
  require_positive(x, "numeric_min_ub");
  require_positive(y, "numeric_min_ub");

  // UB(d, p) = 1 - d + d^2 g(p) / 2, so for every d the best lattice p is the
  // one minimizing g; the search over d is then one-dimensional.
  const std::size_t types = x.size();
  std::vector<std::size_t> parts(types, 0);
  std::vector<double> best_p(types, 0.0);
  double best_g = kInfinity;
  const double n = static_cast<double>(grid.resolution);
  for_each_composition(grid.resolution, parts, 0, [&] {
    double g = 0.0;
    for (std::size_t t = 0; t < types; ++t) {
      const double p = static_cast<double>(parts[t]) / n;
      g += p * p * x[t] / y[t];
    }
    if (g < best_g) {
      best_g = g;
      for (std::size_t t = 0; t < types; ++t) {
        best_p[t] = static_cast<double>(parts[t]) / n;
      }
    }
  });
  // Lattice points sum to one up to rounding; renormalize for the evaluator.
  double total = 0.0;
  for (double p : best_p) total += p;
  for (double& p : best_p) p /= total;

  UbSearchResult result;
  result.p = best_p;
  result.value = golden_section_min(
      [&](double d) { return upper_bound(d, best_p, x, y); }, 0.0, 1.0,
      &result.delta);
  return result;
}

LbSearchResult numeric_max_lb(const BudgetVector& x, const BudgetVector& y,
                              const GridSpec& grid) {
  grid.validate();
  if (x.size() != y.size()) throw DimensionError("numeric_max_lb: T mismatch");
  require_positive(x, "numeric_max_lb");
  const double lo = grid.bounds ? std::max(grid.bounds->first, 0.0) : 0.0;
  const double hi = grid.bounds ? std::min(grid.bounds->second, 1.0) : 1.0;
  LbSearchResult best;
  best.value = -kInfinity;
  for (std::size_t i = 0; i < grid.resolution; ++i) {
    const double d = lo + (hi - lo) * static_cast<double>(i) /
                              static_cast<double>(grid.resolution - 1);
    const double value = lower_bound(d, x, y);
    if (value > best.value) {
      best.value = value;
      best.delta = d;
    }
  }
  return best;
}

SunkDivisionResult numeric_sunk_division(double money_x, double money_y,
                                         const CostProfile& costs,
                                         const GridSpec& grid) {
  grid.validate();
  if (grid.resolution < 3) {
    throw DomainError("numeric_sunk_division: zoom search needs resolution >= 3");
  }
  const std::size_t types = costs.size();
  if (types < 2 || types > 3) {
    throw DimensionError("numeric_sunk_division: supports T in {2, 3}");
  }
  if (!(money_x > 0.0) || !(money_y > 0.0) || !std::isfinite(money_x) ||
      !std::isfinite(money_y)) {
    throw DomainError("numeric_sunk_division: money must be finite and > 0");
  }
  const ShareAlpha alpha{money_x, money_y, costs.kappa(), costs.sigma()};
  const auto worst_case_q = simplex_lattice(types, kWorstCaseLattice);

  // X: maximize min over Y's shares of L(alpha).
  const ZoomResult x_search = zoom_maximize(
      types, grid.resolution, [&](std::span<const double> w) {
        double worst = kInfinity;
        for (const auto& q : worst_case_q) {
          worst = std::min(worst, lotto_payoff(alpha(w, q)));
        }
        return worst;
      });

  // Y: minimize max over X's shares of L(alpha); the inner maximum is its
  // own zoomed search.
  bool inner_converged = true;
  const ZoomResult y_search = zoom_maximize(
      types, grid.resolution, [&](std::span<const double> q) {
        const ZoomResult inner = zoom_maximize(
            types, grid.resolution, [&](std::span<const double> w) {
              return lotto_payoff(alpha(w, q));
            });
        inner_converged = inner_converged && inner.converged;
        return -inner.value;
      });

  std::vector<double> x_hat(types);
  std::vector<double> y_hat(types);
  for (std::size_t t = 0; t < types; ++t) {
    x_hat[t] = money_x * x_search.shares[t] / costs.kappa()[t];
    y_hat[t] = money_y * y_search.shares[t] / costs.sigma()[t];
  }
  SunkDivisionResult result;
  result.payoff_x = lotto_payoff(alpha(x_search.shares, y_search.shares));
  result.x_hat = BudgetVector(std::move(x_hat));
  result.y_hat = BudgetVector(std::move(y_hat));
  result.rounds = std::max(x_search.rounds, y_search.rounds);
  result.converged =
      x_search.converged && y_search.converged && inner_converged;
  return result;
}

DeviationGains deviation_gains(double money_x, double money_y, double r,
                               const GridSpec& grid) {
  grid.validate();
  const double lo = grid.bounds ? grid.bounds->first : 0.0;
  const double hi =
      grid.bounds ? grid.bounds->second : 1.5 * std::max({r, 1.0 / r, 1.0});
  if (lo < 0.0) throw DomainError("deviation_gains: money grid must be >= 0");

  const double base_x = utility_x(money_x, money_y, r);
  const double base_y = utility_y(money_x, money_y, r);
  DeviationGains gains;
  for (std::size_t i = 0; i < grid.resolution; ++i) {
    const double m = lo + (hi - lo) * static_cast<double>(i) /
                              static_cast<double>(grid.resolution - 1);
    gains.gain_x = std::max(gains.gain_x, utility_x(m, money_y, r) - base_x);
    gains.gain_y = std::max(gains.gain_y, utility_y(money_x, m, r) - base_y);
  }
  return gains;
}

DeviationGains numeric_mlc_best_response(const CostProfile& costs,
                                         const GridSpec& grid) {
  const InvestmentOutcome eq = mlc_equilibrium(costs);
  return deviation_gains(eq.money_x, eq.money_y, costs.r(), grid);
}

}  // namespace mrlotto
