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

#ifndef RDISPATCH_SP_CORE_HPP_
#define RDISPATCH_SP_CORE_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "rdispatch/dispatch_graph.hpp"
#include "rdispatch/tariff.hpp"

namespace rdispatch {

struct PathResult {
  std::vector<EdgeRef> edges;  // s -> q, empty when infeasible
  double total = kInfiniteCost;
  double aux_max = 0.0;
  bool feasible = false;
};

// Throws std::invalid_argument unless `edges` is a chain of graph edges
// from the source to the sink.
void check_path(const DispatchGraph& graph, std::span<const EdgeRef> edges);

std::vector<NodeId> path_nodes(std::span<const EdgeRef> edges);

// Number of s -> q paths, saturating at UINT64_MAX.
std::uint64_t count_paths(const DispatchGraph& graph);

namespace detail {

// Walks optimal edges from the source, taking the smallest head (then the
// smallest edge id) among edges that satisfy `on_optimal`. Yields the
// lexicographically smallest node sequence among optimal paths.
template <class OnOptimal>
std::vector<EdgeRef> trace_path(const DispatchGraph& graph,
                                OnOptimal&& on_optimal) {
  std::vector<EdgeRef> path;
  NodeId u = graph.source();
  while (u != graph.sink()) {
    bool found = false;
    EdgeRef best{};
    graph.for_each_out_edge(u, [&](const EdgeRef& e) {
      if (found && (e.head > best.head ||
                    (e.head == best.head && e.id > best.id))) {
        return;
      }
      if (on_optimal(e)) {
        best = e;
        found = true;
      }
    });
    if (!found) return {};
    path.push_back(best);
    u = best.head;
  }
  return path;
}

}  // namespace detail

// Minimum-cost s -> q path for weights given by `weight_of(EdgeRef)`.
// Infinite weights mark unusable edges. The path total is re-accumulated
// forward along the returned edges.
template <class WeightFn>
PathResult shortest_path_dag(const DispatchGraph& graph, WeightFn&& weight_of) {
  std::vector<double> to_go(graph.num_nodes(), kInfiniteCost);
  to_go[graph.sink()] = 0.0;
  for (NodeId u = graph.sink(); u-- > 0;) {
    double best = kInfiniteCost;
    graph.for_each_out_edge(u, [&](const EdgeRef& e) {
      const double rest = to_go[e.head];
      if (rest == kInfiniteCost) return;
      const double w = weight_of(e);
      if (w == kInfiniteCost) return;
      best = std::min(best, w + rest);
    });
    to_go[u] = best;
  }
  PathResult result;
  if (to_go[graph.source()] == kInfiniteCost) return result;
  result.edges = detail::trace_path(graph, [&](const EdgeRef& e) {
    const double rest = to_go[e.head];
    if (rest == kInfiniteCost) return false;
    const double w = weight_of(e);
    return w != kInfiniteCost && w + rest == to_go[e.tail];
  });
  if (result.edges.empty()) return result;
  double total = 0.0;
  for (const EdgeRef& e : result.edges) total += weight_of(e);
  result.total = total;
  result.feasible = true;
  return result;
}

// Shortest path on the alpha-restricted graph: weight w_bias, edges with
// w_spike > alpha removed. Among minimum-bias paths the one with the smallest
// maximum spike wins; aux_max reports that maximum. Buffers are reused
// across calls, so one solver instance per thread.
class RestrictedPathSolver {
 public:
  RestrictedPathSolver(const DispatchGraph& graph, const EdgeCosts& costs);

  PathResult solve(double alpha);

 private:
  const DispatchGraph* graph_;
  const EdgeCosts* costs_;
  std::vector<double> bias_;
  std::vector<double> spike_;
};

PathResult shortest_path_restricted(const DispatchGraph& graph,
                                    const EdgeCosts& costs, double alpha);

}  // namespace rdispatch

#endif  // RDISPATCH_SP_CORE_HPP_
