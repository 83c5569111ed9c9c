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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using mrlotto::cli::CommonOptions;
using mrlotto::cli::Format;

void add_common(CLI::App* cmd, CommonOptions& options) {
  cmd->add_option("--scenario", options.scenario, "Scenario JSON file");
  cmd->add_option("--seed", options.seed, "Random seed");
  cmd->add_option("--n", options.n, "Number of Monte Carlo samples");
  cmd->add_option("--out", options.out, "Write the report to this file");
  const std::map<std::string, Format> formats = {{"json", Format::kJson},
                                                 {"csv", Format::kCsv}};
  cmd->add_option("--format", options.format, "Output format (json or csv)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibria, sampling and verification for multi-resource "
               "General Lotto games"};
  app.require_subcommand(1);

  CommonOptions payoff;
  auto* payoff_cmd = app.add_subcommand("payoff", "Equilibrium payoffs and strategies");
  add_common(payoff_cmd, payoff);

  mrlotto::cli::SimulateOptions simulate;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Monte Carlo check of the equilibrium payoff");
  add_common(simulate_cmd, simulate.common);
  simulate_cmd->add_option("--strategy-x", simulate.strategy_x,
                           "Strategy file replacing X's equilibrium strategy");
  simulate_cmd->add_option("--strategy-y", simulate.strategy_y,
                           "Strategy file replacing Y's equilibrium strategy");
  simulate_cmd->add_option("--analytic", simulate.analytic,
                           "Reference payoff (default: equilibrium payoff)");

  mrlotto::cli::InvestOptions invest;
  auto* invest_cmd =
      app.add_subcommand("invest", "Equilibrium of the costly investment game");
  add_common(invest_cmd, invest.common);
  invest_cmd->add_option("--kappa", invest.kappa, "X's per-unit costs")
      ->delimiter(',');
  invest_cmd->add_option("--sigma", invest.sigma, "Y's per-unit costs")
      ->delimiter(',');

  mrlotto::cli::SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV sweep data");
  add_common(sweep_cmd, sweep.common);
  sweep_cmd->add_option("kind", sweep.kind, "contour or invest_sweep")
      ->required();
  sweep_cmd->add_option("--y", sweep.y, "contour: Y's budgets")->delimiter(',');
  sweep_cmd->add_option("--x-min", sweep.x_min, "contour: smallest X_t");
  sweep_cmd->add_option("--x-max", sweep.x_max, "contour: largest X_t");
  sweep_cmd->add_option("--x-steps", sweep.x_steps, "contour: points per axis");
  sweep_cmd->add_option("--sigma", sweep.sigma, "invest_sweep: Y's costs")
      ->delimiter(',');
  sweep_cmd->add_option("--kappa2", sweep.kappa2, "invest_sweep: X's cost of type 2");
  sweep_cmd->add_option("--kappa3", sweep.kappa3, "invest_sweep: X's cost of type 3");
  sweep_cmd->add_option("--kappa1-min", sweep.kappa1_min, "invest_sweep: first kappa1");
  sweep_cmd->add_option("--kappa1-max", sweep.kappa1_max, "invest_sweep: last kappa1");
  sweep_cmd->add_option("--kappa1-step", sweep.kappa1_step, "invest_sweep: kappa1 step");

  mrlotto::cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an oracle suite");
  add_common(verify_cmd, verify.common);
  verify_cmd->add_option("suite", verify.suite, "bounds, identity, sunk or mlc")
      ->required();
  verify_cmd->add_option("--trials", verify.trials, "Number of random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mrlotto::cli::kExitInputError;
  }

  if (*payoff_cmd) return mrlotto::cli::run_payoff(payoff, std::cout, std::cerr);
  if (*simulate_cmd) {
    return mrlotto::cli::run_simulate(simulate, std::cout, std::cerr);
  }
  if (*invest_cmd) return mrlotto::cli::run_invest(invest, std::cout, std::cerr);
  if (*sweep_cmd) return mrlotto::cli::run_sweep(sweep, std::cout, std::cerr);
  return mrlotto::cli::run_verify(verify, std::cout, std::cerr);
}
