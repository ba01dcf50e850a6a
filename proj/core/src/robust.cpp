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

#include "rdispatch/robust.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <stdexcept>
#include <thread>

#include "rdispatch/errors.hpp"

namespace rdispatch {

namespace {

constexpr std::size_t kMaxThresholds = 50'000'000;

struct SweepResult {
  PathResult path;
  double value = kInfiniteCost;
  double alpha = 0.0;
};

bool better(const SweepResult& a, const SweepResult& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.path.aux_max != b.path.aux_max) return a.path.aux_max < b.path.aux_max;
  return a.alpha < b.alpha;
}

WorstCase mixed_worst_case(std::span<const EdgeRef> path,
                           const BiasSpikeWeigher& weigh) {
  double bias = 0.0;
  double spike = 0.0;
  const EdgeRef* worst = nullptr;
  for (const EdgeRef& e : path) {
    const BiasSpike bs = weigh(e);
    bias += bs.bias;
    if (bs.spike > spike) {
      spike = bs.spike;
      worst = &e;
    }
  }
  const ExtremeScenario scenario =
      worst ? weigh.worst_scenario(*worst)
            : ExtremeScenario{ScenarioKind::kBias, 0};
  return {bias + spike, scenario};
}

const Tariff& mixed_tariff(const Tariff& tariff, const SweepOptions& options,
                           std::optional<Tariff>& storage) {
  if (tariff.is_convex()) return tariff;
  if (!options.allow_convexify) {
    throw NonConvexTariffError(
        "mixed solver needs a convex tariff (enable convexify to use the "
        "convex majorant)");
  }
  storage.emplace(tariff.convexified());
  return *storage;
}

// Smallest, smallest positive and largest eligible spike. The grid
// constructions only look at these, so the full list is not materialized.
std::vector<double> spike_extremes(const DispatchGraph& graph,
                                   const EdgeCosts& costs) {
  double lo = kInfiniteCost;
  double lo_pos = kInfiniteCost;
  double hi = -kInfiniteCost;
  for (NodeId u = 1; u < graph.sink(); ++u) {
    if (!graph.is_reachable(u)) continue;
    graph.for_each_out_edge(u, [&](const EdgeRef& e) {
      if (!graph.reaches_sink(e.head) || costs.bias[e.id] == kInfiniteCost) {
        return;
      }
      const double s = costs.spike[e.id];
      lo = std::min(lo, s);
      hi = std::max(hi, s);
      if (s > 0.0) lo_pos = std::min(lo_pos, s);
    });
  }
  std::vector<double> out;
  if (hi < lo) return out;
  out = {lo, lo_pos, hi};
  if (lo_pos == kInfiniteCost) out.erase(out.begin() + 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class MakeThresholds>
RobustSolution solve_mixed(const DispatchGraph& graph, const MixedSet& set,
                           const Tariff& tariff, const SweepOptions& options,
                           Algorithm algorithm, bool all_spikes,
                           MakeThresholds&& make) {
  std::optional<Tariff> storage;
  const Tariff& eff = mixed_tariff(tariff, options, storage);
  const BiasSpikeWeigher weigh(graph, set, eff);
  const EdgeCosts costs = compute_edge_costs(graph, set, eff);
  std::vector<double> thresholds;
  std::size_t distinct = 0;
  if (all_spikes) {
    const std::vector<double> spikes = spike_values(graph, costs);
    distinct = exact_thresholds(spikes, true).size();
    thresholds = make(spikes);
  } else {
    thresholds = make(spike_extremes(graph, costs));
  }
  RobustSolution sol =
      sweep_thresholds(graph, costs, thresholds, options.threads);
  sol.algorithm = algorithm;
  sol.distinct_spikes = distinct;
  if (sol.feasible()) {
    const WorstCase wc = mixed_worst_case(sol.path.edges, weigh);
    sol.worst_case_cost = wc.cost;
    sol.worst_scenario = wc.scenario;
  }
  return sol;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kNominal:
      return "nominal";
    case Algorithm::kBox:
      return "box";
    case Algorithm::kMixedExact:
      return "mixed-exact";
    case Algorithm::kMixedAdditive:
      return "mixed-add";
    case Algorithm::kMixedMultiplicative:
      return "mixed-mul";
    case Algorithm::kBruteForce:
      return "brute-force";
  }
  return "unknown";
}

RobustSolution solve_nominal(const DispatchGraph& graph,
                             const DemandProfile& demand,
                             const Tariff& tariff) {
  const EdgeWeigher weigh(graph, demand, tariff);
  RobustSolution sol;
  sol.algorithm = Algorithm::kNominal;
  sol.path = shortest_path_dag(graph, weigh);
  sol.worst_case_cost = sol.path.total;
  sol.worst_scenario = {ScenarioKind::kNominal, 0};
  return sol;
}

RobustSolution solve_box(const DispatchGraph& graph, const BoxSet& set,
                         const Tariff& tariff) {
  RobustSolution sol = solve_nominal(graph, worst_corner(set), tariff);
  sol.algorithm = Algorithm::kBox;
  sol.worst_scenario = {ScenarioKind::kBoxCorner, 0};
  return sol;
}

RobustSolution solve_mixed_exact(const DispatchGraph& graph,
                                 const MixedSet& set, const Tariff& tariff,
                                 const SweepOptions& options) {
  return solve_mixed(graph, set, tariff, options, Algorithm::kMixedExact, true,
                     [&](const std::vector<double>& s) {
                       return exact_thresholds(s, options.dedup);
                     });
}

RobustSolution solve_mixed_additive(const DispatchGraph& graph,
                                    const MixedSet& set, const Tariff& tariff,
                                    double epsilon,
                                    const SweepOptions& options) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("mixed-add: epsilon must be > 0");
  }
  return solve_mixed(graph, set, tariff, options, Algorithm::kMixedAdditive,
                     false, [&](const std::vector<double>& s) {
                       return additive_thresholds(s, epsilon);
                     });
}

RobustSolution solve_mixed_additive_grid(const DispatchGraph& graph,
                                         const MixedSet& set,
                                         const Tariff& tariff,
                                         std::size_t grid_n,
                                         const SweepOptions& options) {
  if (grid_n < 1) throw std::invalid_argument("mixed-add: grid-n must be >= 1");
  return solve_mixed(graph, set, tariff, options, Algorithm::kMixedAdditive,
                     false, [&](const std::vector<double>& s) {
                       return grid_thresholds(s, grid_n);
                     });
}

RobustSolution solve_mixed_multiplicative(const DispatchGraph& graph,
                                          const MixedSet& set,
                                          const Tariff& tariff, double mu,
                                          const SweepOptions& options) {
  if (!(mu > 0.0)) throw std::invalid_argument("mixed-mul: mu must be > 0");
  return solve_mixed(graph, set, tariff, options,
                     Algorithm::kMixedMultiplicative, false,
                     [&](const std::vector<double>& s) {
                       return multiplicative_thresholds(s, mu);
                     });
}

std::vector<double> spike_values(const DispatchGraph& graph,
                                 const EdgeCosts& costs) {
  std::vector<double> out;
  for (NodeId u = 1; u < graph.sink(); ++u) {
    if (!graph.is_reachable(u)) continue;
    graph.for_each_out_edge(u, [&](const EdgeRef& e) {
      if (graph.reaches_sink(e.head) && costs.bias[e.id] != kInfiniteCost) {
        out.push_back(costs.spike[e.id]);
      }
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> exact_thresholds(std::span<const double> sorted_spikes,
                                     bool dedup) {
  std::vector<double> out(sorted_spikes.begin(), sorted_spikes.end());
  if (dedup) out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> additive_thresholds(std::span<const double> sorted_spikes,
                                        double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  std::vector<double> out;
  if (sorted_spikes.empty()) return out;
  const double lo = sorted_spikes.front();
  const double hi = sorted_spikes.back();
  if ((hi - lo) / epsilon > static_cast<double>(kMaxThresholds)) {
    throw std::invalid_argument("epsilon too small for the spike range");
  }
  for (std::size_t k = 0;; ++k) {
    const double v = lo + static_cast<double>(k) * epsilon;
    if (!(v < hi)) break;
    out.push_back(v);
  }
  out.push_back(hi);
  return out;
}

std::vector<double> grid_thresholds(std::span<const double> sorted_spikes,
                                    std::size_t n) {
  if (n < 1) throw std::invalid_argument("grid size must be >= 1");
  std::vector<double> out;
  if (sorted_spikes.empty()) return out;
  const double lo = sorted_spikes.front();
  const double hi = sorted_spikes.back();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    out.push_back(lo + (hi - lo) * static_cast<double>(k) /
                           static_cast<double>(n - 1));
  }
  out.push_back(hi);
  return out;
}

std::vector<double> multiplicative_thresholds(
    std::span<const double> sorted_spikes, double mu) {
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be > 0");
  std::vector<double> out;
  if (sorted_spikes.empty()) return out;
  const double hi = sorted_spikes.back();
  if (sorted_spikes.front() == 0.0) out.push_back(0.0);
  const auto first_positive =
      std::upper_bound(sorted_spikes.begin(), sorted_spikes.end(), 0.0);
  if (first_positive == sorted_spikes.end()) return out;
  const double lo = *first_positive;
  if (std::log(hi / lo) / std::log1p(mu) >
      static_cast<double>(kMaxThresholds)) {
    throw std::invalid_argument("mu too small for the spike range");
  }
  for (std::size_t k = 0;; ++k) {
    const double v = lo * std::pow(1.0 + mu, static_cast<double>(k));
    if (!(v < hi)) break;
    out.push_back(v);
  }
  out.push_back(hi);
  return out;
}

RobustSolution sweep_thresholds(const DispatchGraph& graph,
                                const EdgeCosts& costs,
                                std::span<const double> thresholds,
                                unsigned threads) {
  std::vector<SweepResult> results(thresholds.size());
  auto run = [&](std::size_t begin, std::size_t stride) {
    RestrictedPathSolver solver(graph, costs);
    for (std::size_t i = begin; i < thresholds.size(); i += stride) {
      SweepResult& r = results[i];
      r.alpha = thresholds[i];
      r.path = solver.solve(thresholds[i]);
      if (r.path.feasible) r.value = r.path.total + r.path.aux_max;
    }
  };
  const std::size_t workers = std::min<std::size_t>(
      std::max(1u, threads), std::max<std::size_t>(1, thresholds.size()));
  if (workers <= 1) {
    run(0, 1);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          run(w, workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }

  RobustSolution sol;
  sol.thresholds_evaluated = thresholds.size();
  const SweepResult* best = nullptr;
  for (const SweepResult& r : results) {
    if (!r.path.feasible) continue;
    if (!best || better(r, *best)) best = &r;
  }
  if (best) {
    sol.path = best->path;
    sol.alpha = best->alpha;
    sol.worst_case_cost = best->value;
    sol.worst_scenario = {ScenarioKind::kBias, 0};
  }
  return sol;
}

WorstCase path_worstcase_cost(const DispatchGraph& graph,
                              std::span<const EdgeRef> path,
                              const UncertaintySet& set,
                              const Tariff& tariff) {
  check_path(graph, path);
  if (const auto* box = std::get_if<BoxSet>(&set)) {
    return {path_cost(graph, path, worst_corner(*box), tariff),
            {ScenarioKind::kBoxCorner, 0}};
  }
  const BiasSpikeWeigher weigh(graph, std::get<MixedSet>(set), tariff);
  return mixed_worst_case(path, weigh);
}

double path_cost(const DispatchGraph& graph, std::span<const EdgeRef> path,
                 const DemandProfile& demand, const Tariff& tariff) {
  check_path(graph, path);
  const EdgeWeigher weigh(graph, demand, tariff);
  double total = 0.0;
  for (const EdgeRef& e : path) total += weigh(e);
  return total;
}

namespace {

// Depth-first enumeration of s -> q paths, children visited by ascending
// (head, edge id). `visit` sees each complete path.
template <class Enter, class Leave, class Visit>
void enumerate_paths(const DispatchGraph& graph, Enter&& enter, Leave&& leave,
                     Visit&& visit) {
  std::vector<std::vector<EdgeRef>> out(graph.num_nodes());
  for (NodeId u = 0; u < graph.sink(); ++u) {
    graph.for_each_out_edge(u, [&](const EdgeRef& e) { out[u].push_back(e); });
    std::sort(out[u].begin(), out[u].end(),
              [](const EdgeRef& a, const EdgeRef& b) {
                return a.head != b.head ? a.head < b.head : a.id < b.id;
              });
  }
  std::vector<EdgeRef> path;
  struct Frame {
    NodeId node;
    std::size_t next;
  };
  std::vector<Frame> stack{{graph.source(), 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.node == graph.sink()) {
      visit(path);
      stack.pop_back();
      if (!path.empty()) {
        leave(path.back());
        path.pop_back();
      }
      continue;
    }
    if (f.next == out[f.node].size()) {
      stack.pop_back();
      if (!path.empty()) {
        leave(path.back());
        path.pop_back();
      }
      continue;
    }
    const EdgeRef e = out[f.node][f.next++];
    path.push_back(e);
    enter(e);
    stack.push_back({e.head, 0});
  }
}

}  // namespace

RobustSolution brute_force_oracle(const DispatchGraph& graph,
                                  const UncertaintySet& set,
                                  const Tariff& tariff,
                                  std::uint64_t path_limit, OracleMode mode) {
  const std::uint64_t n_paths = count_paths(graph);
  if (n_paths > path_limit) {
    throw std::length_error("brute force: " + std::to_string(n_paths) +
                            " paths exceed the limit of " +
                            std::to_string(path_limit));
  }
  RobustSolution sol;
  sol.algorithm = Algorithm::kBruteForce;

  // Scenario list: the box corner, or the bias profile followed by the
  // single-spike profiles.
  std::vector<ExtremeScenario> scenarios;
  std::vector<DemandProfile> profiles;
  if (const auto* box = std::get_if<BoxSet>(&set)) {
    scenarios.push_back({ScenarioKind::kBoxCorner, 0});
    profiles.push_back(worst_corner(*box));
  } else {
    const MixedSet& mixed = std::get<MixedSet>(set);
    if (!tariff.is_convex()) {
      throw NonConvexTariffError("brute force: mixed set needs a convex tariff");
    }
    scenarios = extreme_scenarios(mixed);
    for (const auto& sc : scenarios) {
      profiles.push_back(scenario_profile(mixed, sc));
    }
  }

  const bool by_scenarios =
      mode == OracleMode::kScenarios || std::holds_alternative<BoxSet>(set);
  std::vector<EdgeRef> best_path;
  double best = kInfiniteCost;

  if (by_scenarios) {
    std::vector<std::vector<double>> weight(profiles.size());
    for (std::size_t k = 0; k < profiles.size(); ++k) {
      const EdgeWeigher weigh(graph, profiles[k], tariff);
      weight[k].assign(graph.edge_id_bound(), 0.0);
      for (const EdgeRef& e : graph.edges()) weight[k][e.id] = weigh(e);
    }
    // partial[depth][k]: cost of the current prefix under scenario k.
    std::vector<std::vector<double>> partial{
        std::vector<double>(profiles.size(), 0.0)};
    enumerate_paths(
        graph,
        [&](const EdgeRef& e) {
          std::vector<double> next = partial.back();
          for (std::size_t k = 0; k < next.size(); ++k) {
            next[k] += weight[k][e.id];
          }
          partial.push_back(std::move(next));
        },
        [&](const EdgeRef&) { partial.pop_back(); },
        [&](const std::vector<EdgeRef>& path) {
          const auto& sums = partial.back();
          std::size_t arg = 0;
          for (std::size_t k = 1; k < sums.size(); ++k) {
            if (sums[k] > sums[arg]) arg = k;
          }
          if (sums[arg] < best) {
            best = sums[arg];
            best_path = path;
            sol.worst_scenario = scenarios[arg];
          }
        });
    if (!best_path.empty()) {
      sol.path.total = best;
      sol.path.aux_max = 0.0;
    }
  } else {
    const MixedSet& mixed = std::get<MixedSet>(set);
    const EdgeCosts costs = compute_edge_costs(graph, mixed, tariff);
    struct Acc {
      double bias;
      double spike;
    };
    std::vector<Acc> acc{{0.0, 0.0}};
    double best_bias = 0.0;
    double best_spike = 0.0;
    enumerate_paths(
        graph,
        [&](const EdgeRef& e) {
          acc.push_back({acc.back().bias + costs.bias[e.id],
                         std::max(acc.back().spike, costs.spike[e.id])});
        },
        [&](const EdgeRef&) { acc.pop_back(); },
        [&](const std::vector<EdgeRef>& path) {
          const double v = acc.back().bias + acc.back().spike;
          if (v < best) {
            best = v;
            best_bias = acc.back().bias;
            best_spike = acc.back().spike;
            best_path = path;
          }
        });
    if (!best_path.empty()) {
      sol.path.total = best_bias;
      sol.path.aux_max = best_spike;
      sol.worst_scenario =
          mixed_worst_case(best_path, BiasSpikeWeigher(graph, mixed, tariff))
              .scenario;
    }
  }

  if (!best_path.empty() && best != kInfiniteCost) {
    sol.path.edges = std::move(best_path);
    sol.path.feasible = true;
    sol.worst_case_cost = best;
  } else {
    sol.path = PathResult{};
  }
  return sol;
}

}  // namespace rdispatch
