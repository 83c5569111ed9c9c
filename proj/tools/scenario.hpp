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

// Scenario documents and strategy files for the mrlotto tool.
//
// A scenario is a JSON object:
//
//   {
//     "resource_types": 2,
//     "budgets_x": [4, 4],
//     "budgets_y": [1, 1],
//     "contest_values": [0.5, 0.5],
//     "rule": "weakest_link",              // or "weighted"
//     "weights": {"a": [1, 1], "b": [1, 1]},  // only with "weighted"
//     "costs": {"kappa": [...], "sigma": [...]},  // optional
//     "monte_carlo": {"n": 100000, "seed": 7}     // optional
//   }
//
// Unknown keys are rejected.

#ifndef MRLOTTO_TOOLS_SCENARIO_HPP_
#define MRLOTTO_TOOLS_SCENARIO_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mrlotto/core.hpp"
#include "mrlotto/equilibria.hpp"
#include "mrlotto/investment.hpp"

namespace mrlotto::cli {

// Malformed input. The message names the line/column or the field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MonteCarloSettings {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  friend bool operator==(const MonteCarloSettings&,
                         const MonteCarloSettings&) = default;
};

struct Scenario {
  std::size_t resource_types = 0;
  BudgetVector budgets_x{std::vector<double>{0.0}};
  BudgetVector budgets_y{std::vector<double>{0.0}};
  ContestValues contest_values{std::vector<double>{1.0}};
  WinningRule rule;
  std::optional<CostProfile> costs;
  std::optional<MonteCarloSettings> monte_carlo;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Parses JSON text. `source` names the document in error messages.
Scenario parse_scenario(std::string_view text, std::string_view source);
Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::string& path);

nlohmann::json scenario_to_json(const Scenario& scenario);

// Strategy files use the "strategy_x" objects emitted by `payoff`.
nlohmann::json strategy_to_json(const StrategyParams& params);
StrategyParams strategy_from_json(const nlohmann::json& doc);
StrategyParams load_strategy(const std::string& path);

// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::string& path);

// +inf is written as the string "inf".
nlohmann::json number_to_json(double value);

}  // namespace mrlotto::cli

#endif  // MRLOTTO_TOOLS_SCENARIO_HPP_
