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

#include "rdispatch/sp_core.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace rdispatch {

void check_path(const DispatchGraph& graph, std::span<const EdgeRef> edges) {
  if (edges.empty()) throw std::invalid_argument("path: empty");
  NodeId at = graph.source();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeRef& e = edges[i];
    if (!graph.is_edge(e.id)) {
      throw std::invalid_argument("path: edge " + std::to_string(i) +
                                  " is not in the graph");
    }
    const EdgeRef ref = graph.edge(e.id);
    if (ref.tail != e.tail || ref.head != e.head) {
      throw std::invalid_argument("path: edge " + std::to_string(i) +
                                  " does not match graph edge " +
                                  std::to_string(e.id));
    }
    if (e.tail != at) {
      throw std::invalid_argument("path: edge " + std::to_string(i) +
                                  " does not continue the path");
    }
    at = e.head;
  }
  if (at != graph.sink()) {
    throw std::invalid_argument("path: does not end at the sink");
  }
}

std::vector<NodeId> path_nodes(std::span<const EdgeRef> edges) {
  std::vector<NodeId> nodes;
  if (edges.empty()) return nodes;
  nodes.push_back(edges.front().tail);
  for (const EdgeRef& e : edges) nodes.push_back(e.head);
  return nodes;
}

std::uint64_t count_paths(const DispatchGraph& graph) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> count(graph.num_nodes(), 0);
  count[graph.sink()] = 1;
  for (NodeId u = graph.sink(); u-- > 0;) {
    std::uint64_t n = 0;
    graph.for_each_out_edge(u, [&](const EdgeRef& e) {
      const std::uint64_t c = count[e.head];
      n = (c > kMax - n) ? kMax : n + c;
    });
    count[u] = n;
  }
  return count[graph.source()];
}

RestrictedPathSolver::RestrictedPathSolver(const DispatchGraph& graph,
                                           const EdgeCosts& costs)
    : graph_(&graph), costs_(&costs) {
  if (costs.bias.size() != graph.edge_id_bound() ||
      costs.spike.size() != graph.edge_id_bound()) {
    throw std::invalid_argument("restricted path: edge costs do not match graph");
  }
}

PathResult RestrictedPathSolver::solve(double alpha) {
  const DispatchGraph& g = *graph_;
  const std::vector<double>& wb = costs_->bias;
  const std::vector<double>& ws = costs_->spike;
  bias_.assign(g.num_nodes(), kInfiniteCost);
  spike_.assign(g.num_nodes(), 0.0);
  bias_[g.sink()] = 0.0;
  for (NodeId u = g.sink(); u-- > 0;) {
    double best_b = kInfiniteCost;
    double best_s = 0.0;
    g.for_each_out_edge(u, [&](const EdgeRef& e) {
      const double rest = bias_[e.head];
      if (rest == kInfiniteCost) return;
      const double s = ws[e.id];
      if (s > alpha || wb[e.id] == kInfiniteCost) return;
      const double b = wb[e.id] + rest;
      const double m = std::max(s, spike_[e.head]);
      if (b < best_b || (b == best_b && m < best_s)) {
        best_b = b;
        best_s = m;
      }
    });
    bias_[u] = best_b;
    spike_[u] = best_s;
  }
  PathResult result;
  if (bias_[g.source()] == kInfiniteCost) return result;
  result.edges = detail::trace_path(g, [&](const EdgeRef& e) {
    const double rest = bias_[e.head];
    const double s = ws[e.id];
    if (rest == kInfiniteCost || s > alpha || wb[e.id] == kInfiniteCost) {
      return false;
    }
    return wb[e.id] + rest == bias_[e.tail] &&
           std::max(s, spike_[e.head]) == spike_[e.tail];
  });
  if (result.edges.empty()) return result;
  double total = 0.0;
  double aux = 0.0;
  for (const EdgeRef& e : result.edges) {
    total += wb[e.id];
    aux = std::max(aux, ws[e.id]);
  }
  result.total = total;
  result.aux_max = aux;
  result.feasible = true;
  return result;
}

PathResult shortest_path_restricted(const DispatchGraph& graph,
                                    const EdgeCosts& costs, double alpha) {
  return RestrictedPathSolver(graph, costs).solve(alpha);
}

}  // namespace rdispatch
