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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "mrlotto/core.hpp"
#include "mrlotto/equilibria.hpp"
#include "mrlotto/investment.hpp"
#include "mrlotto/oracles.hpp"
#include "mrlotto/sampling.hpp"
#include "scenario.hpp"

namespace mrlotto::cli {
namespace {

using nlohmann::json;

constexpr double kZLimit = 4.0;
constexpr std::uint64_t kDefaultVerifySeed = 1;

constexpr double kBoundsTolerance = 0.01;
constexpr double kIdentityTolerance = 1e-9;
constexpr double kSunkTolerance = 0.02;
constexpr double kMlcTolerance = 1e-3;
constexpr std::size_t kBoundsResolution = 200;
constexpr std::size_t kSunkResolution = 21;
constexpr std::size_t kMlcResolution = 2000;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string table_to_csv(const Table& table) {
  std::string text;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i > 0) text += ',';
    text += table.header[i];
  }
  text += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) text += ',';
      text += format_csv_number(row[i]);
    }
    text += '\n';
  }
  return text;
}

json table_to_json(const Table& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json object = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      object[table.header[i]] = number_to_json(row[i]);
    }
    rows.push_back(std::move(object));
  }
  return rows;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

std::string render_table(const Table& table, Format format) {
  return format == Format::kCsv ? table_to_csv(table)
                                : render(table_to_json(table));
}

void emit(const CommonOptions& options, const std::string& text,
          std::ostream& out) {
  if (!options.out) {
    out << text;
    return;
  }
  std::ofstream file(*options.out, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError(*options.out + ": cannot open for writing");
  file << text;
  file.flush();
  if (!file) throw InputError(*options.out + ": write failed");
}

// Converts library and input errors into exit code 1.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

Scenario require_scenario(const CommonOptions& options) {
  if (!options.scenario) throw InputError("--scenario is required");
  return load_scenario(*options.scenario);
}

EquilibriumReport solve(const Scenario& s) {
  if (const auto* wc = std::get_if<WeightedContribution>(&s.rule)) {
    return wc_equilibrium(s.budgets_x, s.budgets_y, s.contest_values,
                          wc->weights);
  }
  return wl_equilibrium(s.budgets_x, s.budgets_y, s.contest_values);
}

json vector_to_json(std::span<const double> values) {
  json out = json::array();
  for (double v : values) out.push_back(number_to_json(v));
  return out;
}

// Portable draws from a 64-bit Mersenne Twister: the standard distributions
// are implementation-defined, raw engine output is not.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) * 0x1.0p-53);
  }
  std::size_t integer(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
  }
  std::vector<double> vector(std::size_t n, double lo, double hi) {
    std::vector<double> out(n);
    for (double& v : out) v = uniform(lo, hi);
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

struct Trial {
  double delta = 0.0;
  bool passed = true;
  json instance;
};

Trial bounds_trial(Draws& draws) {
  const std::size_t types = draws.integer(1, kMaxLatticeTypes);
  BudgetVector x(draws.vector(types, 0.1, 10.0));
  BudgetVector y(draws.vector(types, 0.1, 10.0));
  const double value = lotto_payoff(alpha_ratio(x, y));
  const GridSpec grid{kBoundsResolution, std::nullopt};
  const auto ub = numeric_min_ub(x, y, grid);
  const auto lb = numeric_max_lb(x, y, grid);
  Trial trial;
  trial.delta = std::max(std::abs(ub.value - value), std::abs(lb.value - value));
  trial.passed = trial.delta <= kBoundsTolerance;
  trial.instance = {{"budgets_x", vector_to_json(x.values())},
                    {"budgets_y", vector_to_json(y.values())},
                    {"closed_form", value},
                    {"ub_search", ub.value},
                    {"lb_search", lb.value}};
  return trial;
}

Trial identity_trial(Draws& draws) {
  const std::size_t types = draws.integer(1, 12);
  std::vector<double> z(types);
  for (std::size_t t = 0; t < types; ++t) {
    const double kind = draws.uniform(0.0, 1.0);
    if (kind < 0.1) {
      z[t] = 0.0;
    } else if (kind < 0.2 && t > 0) {
      z[t] = z[t - 1];
    } else {
      z[t] = draws.uniform(0.0, 1.0);
    }
  }
  const auto result = maxmin_subset_identity(z);
  Trial trial;
  trial.delta = std::abs(result.lhs - result.rhs);
  trial.passed = trial.delta <= kIdentityTolerance;
  trial.instance = {{"z", vector_to_json(z)},
                    {"lhs", result.lhs},
                    {"rhs", result.rhs}};
  return trial;
}

Trial sunk_trial(Draws& draws) {
  const std::size_t types = draws.integer(2, 3);
  const double money_x = draws.uniform(0.2, 2.0);
  const double money_y = draws.uniform(0.2, 2.0);
  const CostProfile costs(draws.vector(types, 0.2, 5.0),
                          draws.vector(types, 0.2, 5.0));
  const auto closed = sunk_cost_equilibrium(money_x, money_y, costs);
  const auto search = numeric_sunk_division(
      money_x, money_y, costs, GridSpec{kSunkResolution, std::nullopt});
  Trial trial;
  for (std::size_t t = 0; t < types; ++t) {
    trial.delta = std::max({trial.delta,
                            std::abs(search.x_hat[t] - closed.x_star[t]),
                            std::abs(search.y_hat[t] - closed.y_star[t])});
  }
  trial.passed = search.converged && trial.delta <= kSunkTolerance;
  trial.instance = {{"money_x", money_x},
                    {"money_y", money_y},
                    {"kappa", vector_to_json(costs.kappa())},
                    {"sigma", vector_to_json(costs.sigma())},
                    {"x_hat", vector_to_json(search.x_hat.values())},
                    {"y_hat", vector_to_json(search.y_hat.values())},
                    {"converged", search.converged},
                    {"rounds", search.rounds}};
  return trial;
}

Trial mlc_trial(Draws& draws) {
  const std::size_t types = draws.integer(1, 4);
  const CostProfile costs(draws.vector(types, 0.1, 5.0),
                          draws.vector(types, 0.1, 5.0));
  const auto gains =
      numeric_mlc_best_response(costs, GridSpec{kMlcResolution, std::nullopt});
  Trial trial;
  trial.delta = std::max(gains.gain_x, gains.gain_y);
  trial.passed = trial.delta <= kMlcTolerance;
  trial.instance = {{"kappa", vector_to_json(costs.kappa())},
                    {"sigma", vector_to_json(costs.sigma())},
                    {"r", costs.r()},
                    {"gain_x", gains.gain_x},
                    {"gain_y", gains.gain_y}};
  return trial;
}

}  // namespace

std::string format_csv_number(double value) {
  if (value == kInfinity) return "inf";
  if (value == -kInfinity) return "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

int run_payoff(const CommonOptions& options, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const Scenario scenario = require_scenario(options);
    const EquilibriumReport report = solve(scenario);
    std::string text;
    if (options.format == Format::kCsv) {
      Table table{{"ratio", "payoff_x", "payoff_y", "degenerate"},
                  {{report.ratio, report.payoff_x, report.payoff_y,
                    report.degenerate() ? 1.0 : 0.0}}};
      text = table_to_csv(table);
    } else {
      json doc;
      doc["rule"] = std::holds_alternative<WeightedContribution>(report.rule)
                        ? "weighted"
                        : "weakest_link";
      doc["ratio"] = number_to_json(report.ratio);
      doc["payoff_x"] = report.payoff_x;
      doc["payoff_y"] = report.payoff_y;
      doc["degenerate"] = report.degenerate();
      doc["strategy_x"] =
          report.strategy_x ? strategy_to_json(*report.strategy_x) : json();
      doc["strategy_y"] =
          report.strategy_y ? strategy_to_json(*report.strategy_y) : json();
      doc["scenario"] = scenario_to_json(scenario);
      text = render(doc);
    }
    emit(options, text, out);
    return kExitOk;
  });
}

int run_simulate(const SimulateOptions& options, std::ostream& out,
                 std::ostream& err) {
  int verdict = kExitOk;
  const int status = guarded(err, [&] {
    const Scenario scenario = require_scenario(options.common);
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    if (scenario.monte_carlo) {
      n = scenario.monte_carlo->n;
      seed = scenario.monte_carlo->seed;
    }
    if (options.common.n) n = *options.common.n;
    if (options.common.seed) seed = *options.common.seed;
    if (n == 0) {
      throw InputError("simulate needs --n or a monte_carlo block with n >= 1");
    }

    const EquilibriumReport report = solve(scenario);
    std::optional<StrategyParams> px = report.strategy_x;
    std::optional<StrategyParams> py = report.strategy_y;
    if (options.strategy_x) px = load_strategy(*options.strategy_x);
    if (options.strategy_y) py = load_strategy(*options.strategy_y);
    if (!px || !py) {
      throw InputError(
          "degenerate game: no equilibrium strategies to sample; pass "
          "--strategy-x and --strategy-y");
    }
    const double analytic = options.analytic.value_or(report.payoff_x);
    const PayoffEstimate estimate = mc_payoff(
        *px, *py, scenario.contest_values, scenario.rule, n, seed);

    const double diff = estimate.mean - analytic;
    double z = 0.0;
    if (estimate.std_error > 0.0) {
      z = diff / estimate.std_error;
    } else if (diff != 0.0) {
      z = diff > 0.0 ? kInfinity : -kInfinity;
    }
    const bool within = std::abs(z) <= kZLimit;
    verdict = within ? kExitOk : kExitVerificationFailure;

    std::string text;
    if (options.common.format == Format::kCsv) {
      Table table{{"analytic", "mean", "std_error", "z", "n", "seed"},
                  {{analytic, estimate.mean, estimate.std_error, z,
                    static_cast<double>(n), static_cast<double>(seed)}}};
      text = table_to_csv(table);
    } else {
      json doc;
      doc["analytic"] = analytic;
      doc["mean"] = estimate.mean;
      doc["std_error"] = estimate.std_error;
      doc["z"] = number_to_json(z);
      doc["n"] = n;
      doc["seed"] = seed;
      doc["within_tolerance"] = within;
      text = render(doc);
    }
    emit(options.common, text, out);
    if (!within) {
      err << "monte carlo mean " << estimate.mean << " is " << z
          << " standard errors from " << analytic << "\n";
    }
    return kExitOk;
  });
  return status != kExitOk ? status : verdict;
}

int run_invest(const InvestOptions& options, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    std::optional<CostProfile> costs;
    if (!options.kappa.empty() || !options.sigma.empty()) {
      costs = CostProfile(options.kappa, options.sigma);
    } else if (options.common.scenario) {
      costs = require_scenario(options.common).costs;
      if (!costs) throw InputError("scenario has no costs block");
    } else {
      throw InputError("invest needs --kappa and --sigma or a scenario");
    }
    const InvestmentOutcome eq = mlc_equilibrium(*costs);
    const auto fx = investment_fractions(eq.x_star);
    const auto fy = investment_fractions(eq.y_star);

    std::string text;
    if (options.common.format == Format::kCsv) {
      Table table;
      table.header = {"r", "money_x", "money_y", "payoff_x", "payoff_y",
                      "utility_x", "utility_y"};
      std::vector<double> row = {eq.r, eq.money_x, eq.money_y, eq.payoff_x,
                                 eq.payoff_y, eq.utility_x, eq.utility_y};
      const std::pair<const char*, std::span<const double>> groups[] = {
          {"x_star_", eq.x_star.values()},
          {"y_star_", eq.y_star.values()},
          {"fraction_x_", fx},
          {"fraction_y_", fy}};
      for (const auto& [prefix, values] : groups) {
        for (std::size_t t = 0; t < values.size(); ++t) {
          table.header.push_back(prefix + std::to_string(t + 1));
          row.push_back(values[t]);
        }
      }
      table.rows.push_back(std::move(row));
      text = table_to_csv(table);
    } else {
      json doc;
      doc["r"] = eq.r;
      doc["x_star"] = vector_to_json(eq.x_star.values());
      doc["y_star"] = vector_to_json(eq.y_star.values());
      doc["money_x"] = eq.money_x;
      doc["money_y"] = eq.money_y;
      doc["payoff_x"] = eq.payoff_x;
      doc["payoff_y"] = eq.payoff_y;
      doc["utility_x"] = eq.utility_x;
      doc["utility_y"] = eq.utility_y;
      doc["fractions_x"] = vector_to_json(fx);
      doc["fractions_y"] = vector_to_json(fy);
      text = render(doc);
    }
    emit(options.common, text, out);
    return kExitOk;
  });
}

int run_sweep(const SweepOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    Table table;
    if (options.kind == "contour") {
      if (options.y.size() != 2) throw InputError("contour needs --y with 2 entries");
      if (options.x_steps < 2 || !(options.x_min > 0.0) ||
          !(options.x_max > options.x_min)) {
        throw InputError("contour needs 0 < x-min < x-max and x-steps >= 2");
      }
      const BudgetVector y(options.y);
      table.header = {"X1", "X2", "payoff_x"};
      const double step = (options.x_max - options.x_min) /
                          static_cast<double>(options.x_steps - 1);
      for (std::uint64_t i = 0; i < options.x_steps; ++i) {
        const double x1 = options.x_min + step * static_cast<double>(i);
        for (std::uint64_t j = 0; j < options.x_steps; ++j) {
          const double x2 = options.x_min + step * static_cast<double>(j);
          const double payoff =
              lotto_payoff(alpha_ratio(BudgetVector({x1, x2}), y));
          table.rows.push_back({x1, x2, payoff});
        }
      }
    } else if (options.kind == "invest_sweep") {
      if (options.sigma.size() != 3) {
        throw InputError("invest_sweep needs --sigma with 3 entries");
      }
      if (!(options.kappa1_step > 0.0) ||
          !(options.kappa1_max >= options.kappa1_min)) {
        throw InputError("invest_sweep needs kappa1-step > 0 and min <= max");
      }
      // Integer ticks: with step 1/k the grid values are exact quotients
      // (2.2 is produced as 22 / 10, the same double as the literal).
      const double ticks_per_unit = 1.0 / options.kappa1_step;
      const bool exact = std::abs(ticks_per_unit - std::round(ticks_per_unit)) < 1e-9;
      const auto count = static_cast<std::uint64_t>(std::floor(
          (options.kappa1_max - options.kappa1_min) / options.kappa1_step +
          1e-9)) + 1;
      const double first_tick = std::round(options.kappa1_min * ticks_per_unit);
      table.header = {"kappa1", "r",      "X_tot",  "Y_tot",  "M_star",
                      "U_x",    "U_y",    "Ybar_1", "Ybar_2", "Ybar_3",
                      "Xbar_1", "Xbar_2", "Xbar_3", "payoff_x", "payoff_y"};
      for (std::uint64_t i = 0; i < count; ++i) {
        const double kappa1 =
            exact ? (first_tick + static_cast<double>(i)) /
                        std::round(ticks_per_unit)
                  : options.kappa1_min +
                        options.kappa1_step * static_cast<double>(i);
        const CostProfile costs({kappa1, options.kappa2, options.kappa3},
                                options.sigma);
        const auto eq = mlc_equilibrium(costs);
        const auto fx = investment_fractions(eq.x_star);
        const auto fy = investment_fractions(eq.y_star);
        table.rows.push_back({kappa1, eq.r, eq.x_star.sum(), eq.y_star.sum(),
                              eq.money_x, eq.utility_x, eq.utility_y, fy[0],
                              fy[1], fy[2], fx[0], fx[1], fx[2], eq.payoff_x,
                              eq.payoff_y});
      }
    } else {
      throw InputError("unknown sweep kind \"" + options.kind +
                       "\" (expected contour or invest_sweep)");
    }
    emit(options.common, render_table(table, options.common.format), out);
    return kExitOk;
  });
}

int run_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  int verdict = kExitOk;
  const int status = guarded(err, [&] {
    Trial (*trial_fn)(Draws&) = nullptr;
    double tolerance = 0.0;
    if (options.suite == "bounds") {
      trial_fn = bounds_trial;
      tolerance = kBoundsTolerance;
    } else if (options.suite == "identity") {
      trial_fn = identity_trial;
      tolerance = kIdentityTolerance;
    } else if (options.suite == "sunk") {
      trial_fn = sunk_trial;
      tolerance = kSunkTolerance;
    } else if (options.suite == "mlc") {
      trial_fn = mlc_trial;
      tolerance = kMlcTolerance;
    } else {
      throw InputError("unknown suite \"" + options.suite +
                       "\" (expected bounds, identity, sunk or mlc)");
    }
    if (options.trials == 0) throw InputError("--trials must be >= 1");
    const std::uint64_t seed = options.common.seed.value_or(kDefaultVerifySeed);
    Draws draws(seed);

    Table table{{"trial", "delta", "passed"}, {}};
    double worst = 0.0;
    std::optional<json> first_failure;
    for (std::uint64_t i = 0; i < options.trials; ++i) {
      const Trial trial = trial_fn(draws);
      worst = std::max(worst, trial.delta);
      table.rows.push_back(
          {static_cast<double>(i), trial.delta, trial.passed ? 1.0 : 0.0});
      if (!trial.passed && !first_failure) {
        first_failure = trial.instance;
        (*first_failure)["trial"] = i;
      }
    }
    verdict = first_failure ? kExitVerificationFailure : kExitOk;

    std::string text;
    if (options.common.format == Format::kCsv) {
      text = table_to_csv(table);
    } else {
      json doc;
      doc["suite"] = options.suite;
      doc["seed"] = seed;
      doc["tolerance"] = tolerance;
      doc["trials"] = table_to_json(table);
      doc["worst"] = number_to_json(worst);
      doc["passed"] = !first_failure.has_value();
      text = render(doc);
    }
    emit(options.common, text, out);
    if (first_failure) {
      err << "verify " << options.suite << ": tolerance " << tolerance
          << " exceeded; failing instance:\n"
          << first_failure->dump() << "\n";
    }
    return kExitOk;
  });
  return status != kExitOk ? status : verdict;
}

}  // namespace mrlotto::cli
