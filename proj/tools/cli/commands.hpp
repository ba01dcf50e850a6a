// Copyright 2026 The rdispatch Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RDISPATCH_TOOLS_CLI_COMMANDS_HPP_
#define RDISPATCH_TOOLS_CLI_COMMANDS_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cli/report.hpp"

namespace rdispatch::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitInfeasible = 2,
  kExitInvariant = 3,
};

// Runs `body`, mapping ParseError to 1, InvariantError and invalid
// arguments to 3. Diagnostics go to `err`.
int guarded(const std::function<int()>& body, std::ostream& err);

// Worker count: `requested` (0 = hardware concurrency), capped by the
// DISPATCH_THREADS environment variable when set.
unsigned sweep_threads(unsigned requested);

struct BoundaryOptions {
  std::vector<std::string> initial;  // empty = any
  std::vector<std::string> final;
};

struct SolveOptions {
  std::string model;
  std::string tariff;
  std::string demand;   // nominal input and evaluation demand
  std::string history;  // directory of daily CSVs for the forecast
  std::string algo = "nominal";
  SolverParams params;
  BoundaryOptions boundary;
  std::string schedule_out;
  std::string report_out;  // stdout when empty
  std::string edge_dump;
  bool omit_timing = false;
};

int cmd_solve(const SolveOptions& options, std::ostream& out,
              std::ostream& err);

struct CompareOptions {
  std::string model;
  std::string tariff;
  std::string history;
  std::string realized;
  std::string pack;  // model.json + <season>/{tariff.json,history/,realized.csv}
  SolverParams params;
  BoundaryOptions boundary;
  std::string report_out;
  bool omit_timing = false;
};

ComparisonReport compare_pack(const std::string& pack_dir,
                              const SolverParams& params,
                              const BoundaryOptions& boundary = {});

int cmd_compare(const CompareOptions& options, std::ostream& out,
                std::ostream& err);

struct BenchOptions {
  std::vector<std::size_t> horizons{720, 1440, 2880};
  int speeds = 30;
  int valves = 50;
  std::vector<std::pair<int, int>> state_sweep{{10, 10}, {20, 25}, {30, 50}};
  std::size_t state_sweep_horizon = 720;
  std::size_t grid_n = 30;
  int repeats = 3;
  bool run_mixed = true;
  unsigned threads = 1;
  std::uint64_t seed = 7;
};

struct BenchRow {
  std::string sweep;  // "horizon" | "states"
  std::size_t horizon = 0;
  std::size_t states = 0;
  std::size_t edges = 0;
  double build_seconds = 0.0;
  double nominal_seconds = 0.0;
  double box_seconds = 0.0;
  double mixed_seconds = -1.0;  // < 0 when skipped
  std::size_t mixed_thresholds = 0;
};

struct BenchCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchCheck> checks;
};

BenchReport run_bench(const BenchOptions& options, std::ostream* progress);
std::string bench_to_json(const BenchReport& report);

// Ratio of consecutive timings must lie in [lo, hi] for every doubling.
BenchCheck ratio_check(const std::string& name,
                       const std::vector<double>& seconds, double lo,
                       double hi);

int cmd_bench(const BenchOptions& options, const std::string& report_out,
              bool strict, std::ostream& out, std::ostream& err);

struct ValidateOptions {
  std::string model;
  std::string tariff;
  std::vector<std::string> demands;
  std::string history;
};

int cmd_validate(const ValidateOptions& options, std::ostream& out,
                 std::ostream& err);

struct PackOptions {
  std::string out_dir;
  int speeds = 10;
  int valves = 8;
  double step_seconds = 300.0;
  std::size_t steps = 288;
  std::size_t history_days = 14;
  std::uint64_t seed = 2026;
};

// Four-season synthetic case study in the layout read by compare --pack.
void write_synthetic_pack(const PackOptions& options);

}  // namespace rdispatch::cli

#endif  // RDISPATCH_TOOLS_CLI_COMMANDS_HPP_
