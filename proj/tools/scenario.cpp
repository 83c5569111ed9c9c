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

#include "scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace mrlotto::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InputError("field '" + field + "': " + what);
}

void reject_unknown_keys(const json& object, const std::string& where,
                         std::initializer_list<const char*> allowed) {
  const std::set<std::string> known(allowed.begin(), allowed.end());
  for (const auto& item : object.items()) {
    if (!known.contains(item.key())) {
      const std::string field =
          where.empty() ? item.key() : where + "." + item.key();
      fail(field, "unknown key");
    }
  }
}

const json& require_key(const json& object, const std::string& where,
                        const char* key) {
  if (!object.contains(key)) {
    fail(where.empty() ? key : where + "." + key, "missing");
  }
  return object.at(key);
}

double read_number(const json& value, const std::string& field) {
  if (value.is_string() && value.get<std::string>() == "inf") return kInfinity;
  if (!value.is_number()) fail(field, "expected a number");
  return value.get<double>();
}

std::vector<double> read_numbers(const json& value, const std::string& field) {
  if (!value.is_array()) fail(field, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(read_number(value[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::uint64_t read_unsigned(const json& value, const std::string& field) {
  if (!value.is_number_unsigned()) fail(field, "expected a nonnegative integer");
  return value.get<std::uint64_t>();
}

// Runs a core constructor and reports its validation error against `field`.
template <typename F>
auto build(const std::string& field, F&& make) {
  try {
    return make();
  } catch (const std::exception& e) {
    fail(field, e.what());
  }
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text,
                                                    std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json numbers_to_json(std::span<const double> values) {
  json out = json::array();
  for (double v : values) out.push_back(number_to_json(v));
  return out;
}

}  // namespace

json number_to_json(double value) {
  if (value == kInfinity) return "inf";
  return value;
}

Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) throw InputError("scenario must be a JSON object");
  reject_unknown_keys(doc, "",
                      {"resource_types", "budgets_x", "budgets_y",
                       "contest_values", "rule", "weights", "costs",
                       "monte_carlo"});

  Scenario s;
  s.resource_types =
      read_unsigned(require_key(doc, "", "resource_types"), "resource_types");
  if (s.resource_types == 0) fail("resource_types", "must be >= 1");

  auto budget = [&](const char* key) {
    auto values = read_numbers(require_key(doc, "", key), key);
    if (values.size() != s.resource_types) {
      fail(key, "expected " + std::to_string(s.resource_types) + " entries");
    }
    return build(key, [&] { return BudgetVector(std::move(values)); });
  };
  s.budgets_x = budget("budgets_x");
  s.budgets_y = budget("budgets_y");

  auto values =
      read_numbers(require_key(doc, "", "contest_values"), "contest_values");
  s.contest_values = build("contest_values",
                           [&] { return ContestValues(std::move(values)); });

  const json& rule = require_key(doc, "", "rule");
  if (!rule.is_string()) fail("rule", "expected \"weakest_link\" or \"weighted\"");
  const std::string rule_name = rule.get<std::string>();
  if (rule_name == "weakest_link") {
    if (doc.contains("weights")) {
      fail("weights", "only allowed with rule \"weighted\"");
    }
    s.rule = WeakestLinkForX{};
  } else if (rule_name == "weighted") {
    const json& weights = require_key(doc, "", "weights");
    if (!weights.is_object()) fail("weights", "expected an object");
    reject_unknown_keys(weights, "weights", {"a", "b"});
    auto a = read_numbers(require_key(weights, "weights", "a"), "weights.a");
    auto b = read_numbers(require_key(weights, "weights", "b"), "weights.b");
    if (a.size() != s.resource_types) {
      fail("weights.a", "expected " + std::to_string(s.resource_types) +
                            " entries");
    }
    s.rule = WeightedContribution{build("weights", [&] {
      return EffectivenessWeights(std::move(a), std::move(b));
    })};
  } else {
    fail("rule", "unknown rule \"" + rule_name + "\"");
  }

  if (doc.contains("costs")) {
    const json& costs = doc.at("costs");
    if (!costs.is_object()) fail("costs", "expected an object");
    reject_unknown_keys(costs, "costs", {"kappa", "sigma"});
    auto kappa = read_numbers(require_key(costs, "costs", "kappa"), "costs.kappa");
    auto sigma = read_numbers(require_key(costs, "costs", "sigma"), "costs.sigma");
    s.costs = build("costs", [&] {
      return CostProfile(std::move(kappa), std::move(sigma));
    });
  }

  if (doc.contains("monte_carlo")) {
    const json& mc = doc.at("monte_carlo");
    if (!mc.is_object()) fail("monte_carlo", "expected an object");
    reject_unknown_keys(mc, "monte_carlo", {"n", "seed"});
    MonteCarloSettings settings;
    settings.n = read_unsigned(require_key(mc, "monte_carlo", "n"), "monte_carlo.n");
    if (settings.n == 0) fail("monte_carlo.n", "must be >= 1");
    settings.seed =
        read_unsigned(require_key(mc, "monte_carlo", "seed"), "monte_carlo.seed");
    s.monte_carlo = settings;
  }
  return s;
}

Scenario parse_scenario(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending character.
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    const auto [line, column] = line_and_column(text, byte);
    std::ostringstream msg;
    msg << source << ":" << line << ":" << column << ": invalid JSON";
    throw InputError(msg.str());
  }
  try {
    return parse_scenario(doc);
  } catch (const InputError& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Scenario load_scenario(const std::string& path) {
  return parse_scenario(read_file(path), path);
}

json scenario_to_json(const Scenario& s) {
  json doc;
  doc["resource_types"] = s.resource_types;
  doc["budgets_x"] = numbers_to_json(s.budgets_x.values());
  doc["budgets_y"] = numbers_to_json(s.budgets_y.values());
  doc["contest_values"] = numbers_to_json(s.contest_values.raw());
  if (const auto* wc = std::get_if<WeightedContribution>(&s.rule)) {
    doc["rule"] = "weighted";
    doc["weights"] = {{"a", numbers_to_json(wc->weights.a())},
                      {"b", numbers_to_json(wc->weights.b())}};
  } else {
    doc["rule"] = "weakest_link";
  }
  if (s.costs) {
    doc["costs"] = {{"kappa", numbers_to_json(s.costs->kappa())},
                    {"sigma", numbers_to_json(s.costs->sigma())}};
  }
  if (s.monte_carlo) {
    doc["monte_carlo"] = {{"n", s.monte_carlo->n},
                          {"seed", s.monte_carlo->seed}};
  }
  return doc;
}

json strategy_to_json(const StrategyParams& params) {
  json doc;
  doc["form"] = params.form() == StrategyForm::kWeakestLink ? "weakest_link"
                                                             : "best_shot";
  doc["delta"] = params.delta();
  if (params.form() == StrategyForm::kBestShot) {
    doc["type_probs"] = numbers_to_json(params.type_probs());
  }
  json scales = json::array();
  for (std::size_t c = 0; c < params.contests(); ++c) {
    scales.push_back(numbers_to_json(params.scale_row(c)));
  }
  doc["scales"] = std::move(scales);
  return doc;
}

StrategyParams strategy_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("strategy must be a JSON object");
  reject_unknown_keys(doc, "", {"form", "delta", "type_probs", "scales"});
  const json& form = require_key(doc, "", "form");
  if (!form.is_string()) fail("form", "expected \"weakest_link\" or \"best_shot\"");
  const double delta = read_number(require_key(doc, "", "delta"), "delta");
  const json& rows = require_key(doc, "", "scales");
  if (!rows.is_array() || rows.empty()) fail("scales", "expected C rows");
  std::vector<double> scales;
  std::size_t types = 0;
  for (std::size_t c = 0; c < rows.size(); ++c) {
    const std::string field = "scales[" + std::to_string(c) + "]";
    auto row = read_numbers(rows[c], field);
    if (c == 0) types = row.size();
    if (row.size() != types || types == 0) fail(field, "ragged or empty row");
    scales.insert(scales.end(), row.begin(), row.end());
  }
  const std::string name = form.get<std::string>();
  if (name == "weakest_link") {
    if (doc.contains("type_probs")) {
      fail("type_probs", "only allowed with form \"best_shot\"");
    }
    return build("strategy", [&] {
      return StrategyParams::WeakestLink(delta, rows.size(), types,
                                         std::move(scales));
    });
  }
  if (name == "best_shot") {
    auto p = read_numbers(require_key(doc, "", "type_probs"), "type_probs");
    return build("strategy", [&] {
      return StrategyParams::BestShot(delta, std::move(p), rows.size(), types,
                                      std::move(scales));
    });
  }
  fail("form", "unknown form \"" + name + "\"");
}

StrategyParams load_strategy(const std::string& path) {
  const std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    const auto [line, column] = line_and_column(text, byte);
    throw InputError(path + ":" + std::to_string(line) + ":" +
                     std::to_string(column) + ": invalid JSON");
  }
  try {
    return strategy_from_json(doc);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace mrlotto::cli
