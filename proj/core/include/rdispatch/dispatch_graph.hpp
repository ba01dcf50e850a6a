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

#ifndef RDISPATCH_DISPATCH_GRAPH_HPP_
#define RDISPATCH_DISPATCH_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rdispatch/demand.hpp"
#include "rdispatch/model.hpp"
#include "rdispatch/tariff.hpp"

namespace rdispatch {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct StateSelection {
  bool any = true;
  std::vector<std::string> states;

  static StateSelection all() { return {}; }
  static StateSelection only(std::vector<std::string> names) {
    return {false, std::move(names)};
  }
};

// An edge of the dispatch graph. Source edges s -> (0, x) carry no
// transition (transition == kSourceEdge) and cost nothing. A transition edge
// covers steps [t_begin, t_end); when t_end equals the horizon its head is
// the sink q and `next_state` is the state the turbine is left in.
struct EdgeRef {
  static constexpr std::int32_t kSourceEdge = -1;

  EdgeId id;
  NodeId tail;
  NodeId head;
  std::int32_t transition;
  std::uint32_t t_begin;
  std::uint32_t t_end;
  StateIndex next_state;

  bool is_source() const { return transition == kSourceEdge; }
};

// Time-expanded DAG over nodes (t, x), t in [0, T), plus source s and sink
// q. Node ids are topologically ordered: s = 0, (t, x) = 1 + t * |X| + x,
// q = last. Edges are implicit in (t, transition) so large horizons need no
// per-edge structure storage; edge ids are dense except for transitions that
// would overrun the horizon, which are holes.
class DispatchGraph {
 public:
  DispatchGraph(TurbineModel model, std::size_t horizon,
                const StateSelection& initial = StateSelection::all(),
                const StateSelection& final = StateSelection::all());
  DispatchGraph(std::shared_ptr<const IndexedModel> model, std::size_t horizon,
                const StateSelection& initial = StateSelection::all(),
                const StateSelection& final = StateSelection::all());

  const IndexedModel& model() const { return *model_; }
  std::size_t horizon() const { return horizon_; }
  std::size_t num_states() const { return num_states_; }

  NodeId source() const { return 0; }
  NodeId sink() const { return static_cast<NodeId>(num_nodes_ - 1); }
  std::size_t num_nodes() const { return num_nodes_; }
  NodeId node(std::size_t t, StateIndex x) const {
    return static_cast<NodeId>(1 + t * num_states_ + x);
  }
  // (t, x) of a state node; undefined for s and q.
  std::pair<std::size_t, StateIndex> position(NodeId u) const {
    return {(u - 1) / num_states_, static_cast<StateIndex>((u - 1) % num_states_)};
  }

  std::size_t num_edges() const { return num_edges_; }
  // Every edge id is below this bound; arrays indexed by EdgeId use it.
  std::size_t edge_id_bound() const { return edge_id_bound_; }
  bool is_edge(EdgeId id) const;
  // Throws std::out_of_range for ids that are not edges.
  EdgeRef edge(EdgeId id) const;

  const std::vector<StateIndex>& initial_states() const { return initial_; }
  bool is_final_state(StateIndex x) const { return final_mask_[x] != 0; }

  // Reachable from s / can reach q. Nodes failing either test lie on no
  // s -> q path; they are kept in the graph.
  bool is_reachable(NodeId u) const { return (flags_[u] & kForward) != 0; }
  bool reaches_sink(NodeId u) const { return (flags_[u] & kBackward) != 0; }
  bool is_live(const EdgeRef& e) const {
    return is_reachable(e.tail) && reaches_sink(e.head);
  }
  std::size_t num_dead_nodes() const { return dead_nodes_; }

  template <class F>
  void for_each_out_edge(NodeId u, F&& f) const {
    if (u == source()) {
      for (std::size_t i = 0; i < initial_.size(); ++i) {
        f(EdgeRef{static_cast<EdgeId>(i), u, node(0, initial_[i]),
                  EdgeRef::kSourceEdge, 0, 0, initial_[i]});
      }
      return;
    }
    if (u == sink()) return;
    const auto [t, x] = position(u);
    const std::size_t first = model_->first_transition(x);
    const auto range = model_->transitions_from(x);
    const std::size_t base = initial_.size() + t * transitions_per_step_;
    for (std::size_t j = 0; j < range.size(); ++j) {
      const Transition& tr = range[j];
      const std::size_t end = t + tr.duration_steps;
      if (end > horizon_) continue;
      NodeId head;
      if (end == horizon_) {
        if (!final_mask_[tr.to]) continue;
        head = sink();
      } else {
        head = node(end, tr.to);
      }
      const std::size_t k = first + j;
      f(EdgeRef{static_cast<EdgeId>(base + k), u, head,
                static_cast<std::int32_t>(k), static_cast<std::uint32_t>(t),
                static_cast<std::uint32_t>(end), tr.to});
    }
  }

  // All edges in id order (small graphs and tests).
  std::vector<EdgeRef> edges() const;

 private:
  static constexpr std::uint8_t kForward = 1;
  static constexpr std::uint8_t kBackward = 2;

  void init(const StateSelection& initial, const StateSelection& final);

  std::shared_ptr<const IndexedModel> model_;
  std::size_t horizon_;
  std::size_t num_states_;
  std::size_t transitions_per_step_;
  std::size_t num_nodes_;
  std::size_t num_edges_ = 0;
  std::size_t edge_id_bound_ = 0;
  std::size_t dead_nodes_ = 0;
  std::vector<StateIndex> initial_;
  std::vector<std::uint8_t> final_mask_;
  std::vector<std::uint8_t> flags_;
};

// Edge cost under a fixed demand profile:
//   C_MGT + sum over t in [t_begin, t_end) of C^P_t(P(t) - P_MGT) +
//   C^H_t(H(t) - H_MGT),
// +inf when a purchase falls on a forbidden branch. Source edges cost 0.
class EdgeWeigher {
 public:
  // Throws std::invalid_argument when the demand or tariff horizon differs
  // from the graph horizon.
  EdgeWeigher(const DispatchGraph& graph, const DemandProfile& demand,
              const Tariff& tariff);

  double operator()(const EdgeRef& e) const {
    if (e.is_source()) return 0.0;
    const Transition& tr = graph_->model().transition(e.transition);
    double w = tr.op_cost;
    for (std::size_t t = e.t_begin; t < e.t_end; ++t) {
      w += tariff_->power_at(t)(power_[t] - tr.power_kw) +
           tariff_->heat_at(t)(heat_[t] - tr.heat_kw);
    }
    return w;
  }

 private:
  const DispatchGraph* graph_;
  const Tariff* tariff_;
  const double* power_;
  const double* heat_;
};

double edge_weight(const DispatchGraph& graph, const EdgeRef& edge,
                   const DemandProfile& demand, const Tariff& tariff);

struct BiasSpike {
  double bias;   // cost at the worst spikeless profile
  double spike;  // largest extra cost one spike inside the span can add
};

// Per-edge (bias, spike) pair for a mixed set. Requires a convex tariff and
// throws NonConvexTariffError otherwise. Edges with infinite bias get spike 0.
class BiasSpikeWeigher {
 public:
  BiasSpikeWeigher(const DispatchGraph& graph, const MixedSet& set,
                   const Tariff& tariff);

  BiasSpike operator()(const EdgeRef& e) const;
  // Scenario attaining the edge's spike: earliest step, power before heat;
  // kBias when the spike is zero.
  ExtremeScenario worst_scenario(const EdgeRef& e) const;

 private:
  const DispatchGraph* graph_;
  const Tariff* tariff_;
  DemandProfile bias_;
  std::vector<double> power_spike_;
  std::vector<double> heat_spike_;
  std::vector<std::uint8_t> power_enabled_;
  std::vector<std::uint8_t> heat_enabled_;
};

BiasSpike edge_bias_spike(const DispatchGraph& graph, const EdgeRef& edge,
                          const MixedSet& set, const Tariff& tariff);

// (bias, spike) for every edge, indexed by EdgeId (holes hold zeros).
struct EdgeCosts {
  std::vector<double> bias;
  std::vector<double> spike;
};

EdgeCosts compute_edge_costs(const DispatchGraph& graph, const MixedSet& set,
                             const Tariff& tariff);

// Debug dump, one line per edge:
// tail_t,tail_state,head_t,head_state,control,w_bias,w_spike
void write_edge_dump(std::ostream& out, const DispatchGraph& graph,
                     const EdgeCosts& costs);

}  // namespace rdispatch

#endif  // RDISPATCH_DISPATCH_GRAPH_HPP_
