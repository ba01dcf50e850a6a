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

#ifndef RDISPATCH_ROBUST_HPP_
#define RDISPATCH_ROBUST_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rdispatch/demand.hpp"
#include "rdispatch/dispatch_graph.hpp"
#include "rdispatch/sp_core.hpp"
#include "rdispatch/tariff.hpp"

namespace rdispatch {

enum class Algorithm {
  kNominal,
  kBox,
  kMixedExact,
  kMixedAdditive,
  kMixedMultiplicative,
  kBruteForce,
};

std::string_view to_string(Algorithm algorithm);

struct RobustSolution {
  PathResult path;
  double worst_case_cost = kInfiniteCost;
  ExtremeScenario worst_scenario{ScenarioKind::kNominal, 0};
  Algorithm algorithm = Algorithm::kNominal;
  std::size_t thresholds_evaluated = 0;
  std::size_t distinct_spikes = 0;  // mixed-exact only
  double alpha = 0.0;  // winning threshold for the mixed solvers

  bool feasible() const { return path.feasible; }
};

struct SweepOptions {
  unsigned threads = 1;
  // Drop repeated thresholds (exact bit equality) before sweeping.
  bool dedup = true;
  // Replace a non-convex tariff by its convex majorant instead of throwing.
  bool allow_convexify = false;
};

// Infeasibility is reported through RobustSolution::feasible(), never thrown.
RobustSolution solve_nominal(const DispatchGraph& graph,
                             const DemandProfile& demand,
                             const Tariff& tariff);

RobustSolution solve_box(const DispatchGraph& graph, const BoxSet& set,
                         const Tariff& tariff);

RobustSolution solve_mixed_exact(const DispatchGraph& graph,
                                 const MixedSet& set, const Tariff& tariff,
                                 const SweepOptions& options = {});

RobustSolution solve_mixed_additive(const DispatchGraph& graph,
                                    const MixedSet& set, const Tariff& tariff,
                                    double epsilon,
                                    const SweepOptions& options = {});

// Additive sweep with exactly `grid_n` evenly spaced thresholds between the
// smallest and largest spike.
RobustSolution solve_mixed_additive_grid(const DispatchGraph& graph,
                                         const MixedSet& set,
                                         const Tariff& tariff,
                                         std::size_t grid_n,
                                         const SweepOptions& options = {});

RobustSolution solve_mixed_multiplicative(const DispatchGraph& graph,
                                          const MixedSet& set,
                                          const Tariff& tariff, double mu,
                                          const SweepOptions& options = {});

// Spike values eligible as thresholds: transition edges on some s -> q path
// with finite bias, in ascending order.
std::vector<double> spike_values(const DispatchGraph& graph,
                                 const EdgeCosts& costs);

std::vector<double> exact_thresholds(std::span<const double> sorted_spikes,
                                     bool dedup);
std::vector<double> additive_thresholds(std::span<const double> sorted_spikes,
                                        double epsilon);
std::vector<double> grid_thresholds(std::span<const double> sorted_spikes,
                                    std::size_t n);
std::vector<double> multiplicative_thresholds(
    std::span<const double> sorted_spikes, double mu);

// Runs the restricted solver at every threshold and keeps the minimum of
// sum(bias) + max(spike), ties broken by (cost, max spike, threshold).
RobustSolution sweep_thresholds(const DispatchGraph& graph,
                                const EdgeCosts& costs,
                                std::span<const double> thresholds,
                                unsigned threads = 1);

struct WorstCase {
  double cost;
  ExtremeScenario scenario;
};

// Throws std::invalid_argument for an invalid path, NonConvexTariffError for a
// mixed set over a non-convex tariff.
WorstCase path_worstcase_cost(const DispatchGraph& graph,
                              std::span<const EdgeRef> path,
                              const UncertaintySet& set, const Tariff& tariff);

double path_cost(const DispatchGraph& graph, std::span<const EdgeRef> path,
                 const DemandProfile& demand, const Tariff& tariff);

enum class OracleMode {
  kReformulated,  // sum(bias) + max(spike) per path
  kScenarios,     // max over the explicit extreme scenarios per path
};

// Exhaustive search over every s -> q path. Throws std::length_error when
// the graph has more than `path_limit` paths.
RobustSolution brute_force_oracle(const DispatchGraph& graph,
                                  const UncertaintySet& set,
                                  const Tariff& tariff,
                                  std::uint64_t path_limit = 1'000'000,
                                  OracleMode mode = OracleMode::kReformulated);

}  // namespace rdispatch

#endif  // RDISPATCH_ROBUST_HPP_
