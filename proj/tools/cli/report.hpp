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

#ifndef RDISPATCH_TOOLS_CLI_REPORT_HPP_
#define RDISPATCH_TOOLS_CLI_REPORT_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rdispatch/demand.hpp"
#include "rdispatch/dispatch_graph.hpp"
#include "rdispatch/robust.hpp"
#include "rdispatch/tariff.hpp"

namespace rdispatch::cli {

struct SolverParams {
  double box_alpha = 0.13;
  double alpha1 = 0.03;
  double alpha2 = 40.0;
  Algorithm mixed = Algorithm::kMixedAdditive;
  std::size_t grid_n = 30;  // used by mixed-add when epsilon is unset
  std::optional<double> epsilon;
  double mu = 0.1;
  SweepOptions sweep;
};

struct ComparisonRow {
  std::string algorithm;  // benchmark | nominal | box | mixed-*
  bool feasible = false;
  double realized_cost = kInfiniteCost;
  // Worst case of the path under the mixed set; unset when the tariff is
  // not convex and convexification is off.
  std::optional<double> worst_case_cost;
  std::size_t thresholds_evaluated = 0;
  double runtime_seconds = 0.0;
  std::optional<double> reduction_pct;  // box and mixed rows only
};

struct SeasonComparison {
  std::string name;
  std::vector<ComparisonRow> rows;  // benchmark, nominal, box, mixed
  double margin = 0.0;              // nominal - benchmark
};

struct ComparisonReport {
  std::vector<SeasonComparison> seasons;
};

// 100 * (nominal - algo) / (nominal - benchmark); unset when the margin is
// not positive (relative tolerance 1e-9).
std::optional<double> excess_cost_reduction(double nominal, double algo,
                                            double benchmark);

// Forecast from `history`, then benchmark (nominal on realized), nominal (on
// the mean), box and mixed; every path is re-evaluated on `realized`.
SeasonComparison compare_instance(std::string name,
                                  const DispatchGraph& graph,
                                  const Tariff& tariff,
                                  std::span<const DemandProfile> history,
                                  const DemandProfile& realized,
                                  const SolverParams& params);

std::string comparison_to_json(const ComparisonReport& report,
                               bool omit_timing);
// Markdown table: one column per season, "cost (reduction %)" cells.
std::string comparison_to_table(const ComparisonReport& report);

RobustSolution run_mixed(const DispatchGraph& graph, const MixedSet& set,
                         const Tariff& tariff, const SolverParams& params);

}  // namespace rdispatch::cli

#endif  // RDISPATCH_TOOLS_CLI_REPORT_HPP_
