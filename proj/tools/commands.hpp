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

// Subcommands of the mrlotto tool. Each returns a process exit code and
// writes its report to `out` (or to options.out when set) and diagnostics
// to `err`.

#ifndef MRLOTTO_TOOLS_COMMANDS_HPP_
#define MRLOTTO_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mrlotto::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailure = 2;

enum class Format { kJson, kCsv };

struct CommonOptions {
  std::optional<std::string> scenario;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> n;
  std::optional<std::string> out;
  Format format = Format::kJson;
};

struct SimulateOptions {
  CommonOptions common;
  std::optional<std::string> strategy_x;
  std::optional<std::string> strategy_y;
  // Value the Monte Carlo mean is tested against; defaults to the
  // equilibrium payoff.
  std::optional<double> analytic;
};

struct InvestOptions {
  CommonOptions common;
  std::vector<double> kappa;
  std::vector<double> sigma;
};

struct SweepOptions {
  CommonOptions common;
  std::string kind;
  // contour
  std::vector<double> y = {1.0, 1.0};
  double x_min = 0.25;
  double x_max = 4.0;
  std::uint64_t x_steps = 16;
  // invest_sweep
  std::vector<double> sigma = {3.0, 2.0, 1.8};
  double kappa2 = 0.2;
  double kappa3 = 0.3;
  double kappa1_min = 0.1;
  double kappa1_max = 5.0;
  double kappa1_step = 0.1;
};

struct VerifyOptions {
  CommonOptions common;
  std::string suite;
  std::uint64_t trials = 50;
};

int run_payoff(const CommonOptions& options, std::ostream& out,
               std::ostream& err);
int run_simulate(const SimulateOptions& options, std::ostream& out,
                 std::ostream& err);
int run_invest(const InvestOptions& options, std::ostream& out,
               std::ostream& err);
int run_sweep(const SweepOptions& options, std::ostream& out,
              std::ostream& err);
int run_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err);

// CSV cell for a double: "%.12g", or "inf".
std::string format_csv_number(double value);

}  // namespace mrlotto::cli

#endif  // MRLOTTO_TOOLS_COMMANDS_HPP_
