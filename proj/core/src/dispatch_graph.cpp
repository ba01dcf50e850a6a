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

#include "rdispatch/dispatch_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "rdispatch/errors.hpp"

namespace rdispatch {

DispatchGraph::DispatchGraph(TurbineModel model, std::size_t horizon,
                             const StateSelection& initial,
                             const StateSelection& final)
    : DispatchGraph(std::make_shared<const IndexedModel>(std::move(model)),
                    horizon, initial, final) {}

DispatchGraph::DispatchGraph(std::shared_ptr<const IndexedModel> model,
                             std::size_t horizon,
                             const StateSelection& initial,
                             const StateSelection& final)
    : model_(std::move(model)),
      horizon_(horizon),
      num_states_(model_->num_states()),
      transitions_per_step_(model_->num_transitions()),
      num_nodes_(horizon * model_->num_states() + 2) {
  if (horizon_ < 1) {
    throw std::invalid_argument("dispatch graph: horizon must be >= 1");
  }
  init(initial, final);
}

void DispatchGraph::init(const StateSelection& initial,
                         const StateSelection& final) {
  auto resolve = [this](const StateSelection& sel, const char* what) {
    std::vector<StateIndex> out;
    if (sel.any) {
      for (StateIndex x = 0; x < num_states_; ++x) out.push_back(x);
      return out;
    }
    if (sel.states.empty()) {
      throw std::invalid_argument(std::string("dispatch graph: empty ") +
                                  what + " state set");
    }
    for (const auto& name : sel.states) {
      const auto x = model_->find_state(name);
      if (!x) {
        throw std::invalid_argument(std::string("dispatch graph: unknown ") +
                                    what + " state '" + name + "'");
      }
      out.push_back(*x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  initial_ = resolve(initial, "initial");
  final_mask_.assign(num_states_, 0);
  for (StateIndex x : resolve(final, "final")) final_mask_[x] = 1;

  const std::size_t bound =
      initial_.size() + horizon_ * transitions_per_step_;
  if (bound > std::numeric_limits<EdgeId>::max() ||
      num_nodes_ > std::numeric_limits<NodeId>::max()) {
    throw std::length_error("dispatch graph: too many edges for 32-bit ids");
  }
  edge_id_bound_ = bound;

  flags_.assign(num_nodes_, 0);
  flags_[source()] = kForward;
  num_edges_ = 0;
  for (NodeId u = 0; u < sink(); ++u) {
    const bool reached = (flags_[u] & kForward) != 0;
    for_each_out_edge(u, [&](const EdgeRef& e) {
      ++num_edges_;
      if (reached) flags_[e.head] |= kForward;
    });
  }
  flags_[sink()] |= kBackward;
  for (NodeId u = sink(); u-- > 0;) {
    bool reaches = false;
    for_each_out_edge(u, [&](const EdgeRef& e) {
      reaches = reaches || (flags_[e.head] & kBackward) != 0;
    });
    if (reaches) flags_[u] |= kBackward;
  }
  dead_nodes_ = static_cast<std::size_t>(std::count_if(
      flags_.begin(), flags_.end(),
      [](std::uint8_t f) { return f != (kForward | kBackward); }));
}

bool DispatchGraph::is_edge(EdgeId id) const {
  if (id < initial_.size()) return true;
  const std::size_t rel = id - initial_.size();
  const std::size_t t = rel / transitions_per_step_;
  if (t >= horizon_) return false;
  const Transition& tr = model_->transition(rel % transitions_per_step_);
  const std::size_t end = t + tr.duration_steps;
  if (end > horizon_) return false;
  return end < horizon_ || final_mask_[tr.to] != 0;
}

EdgeRef DispatchGraph::edge(EdgeId id) const {
  if (!is_edge(id)) {
    throw std::out_of_range("dispatch graph: " + std::to_string(id) +
                            " is not an edge id");
  }
  if (id < initial_.size()) {
    return EdgeRef{id, source(), node(0, initial_[id]), EdgeRef::kSourceEdge,
                   0, 0, initial_[id]};
  }
  const std::size_t rel = id - initial_.size();
  const std::size_t t = rel / transitions_per_step_;
  const std::size_t k = rel % transitions_per_step_;
  const Transition& tr = model_->transition(k);
  const std::size_t end = t + tr.duration_steps;
  return EdgeRef{id,
                 node(t, tr.from),
                 end == horizon_ ? sink() : node(end, tr.to),
                 static_cast<std::int32_t>(k),
                 static_cast<std::uint32_t>(t),
                 static_cast<std::uint32_t>(end),
                 tr.to};
}

std::vector<EdgeRef> DispatchGraph::edges() const {
  std::vector<EdgeRef> out;
  out.reserve(num_edges_);
  for (NodeId u = 0; u < sink(); ++u) {
    for_each_out_edge(u, [&](const EdgeRef& e) { out.push_back(e); });
  }
  std::sort(out.begin(), out.end(),
            [](const EdgeRef& a, const EdgeRef& b) { return a.id < b.id; });
  return out;
}

EdgeWeigher::EdgeWeigher(const DispatchGraph& graph,
                         const DemandProfile& demand, const Tariff& tariff)
    : graph_(&graph),
      tariff_(&tariff),
      power_(demand.power_kw.data()),
      heat_(demand.heat_kw.data()) {
  if (demand.power_kw.size() != graph.horizon() ||
      demand.heat_kw.size() != graph.horizon()) {
    throw std::invalid_argument(
        "edge weight: demand length " + std::to_string(demand.size()) +
        " does not match horizon " + std::to_string(graph.horizon()));
  }
  if (tariff.horizon() != graph.horizon()) {
    throw std::invalid_argument(
        "edge weight: tariff horizon " + std::to_string(tariff.horizon()) +
        " does not match horizon " + std::to_string(graph.horizon()));
  }
}

double edge_weight(const DispatchGraph& graph, const EdgeRef& edge,
                   const DemandProfile& demand, const Tariff& tariff) {
  return EdgeWeigher(graph, demand, tariff)(edge);
}

BiasSpikeWeigher::BiasSpikeWeigher(const DispatchGraph& graph,
                                   const MixedSet& set, const Tariff& tariff)
    : graph_(&graph), tariff_(&tariff) {
  if (!tariff.is_convex()) {
    throw NonConvexTariffError(
        "mixed uncertainty requires a convex tariff; see check_convexity or "
        "opt into the convex approximation");
  }
  check_set(set);
  if (set.size() != graph.horizon() || tariff.horizon() != graph.horizon()) {
    throw std::invalid_argument(
        "bias/spike weights: set or tariff horizon does not match graph");
  }
  bias_ = bias_profile(set);
  power_spike_.resize(set.size());
  heat_spike_.resize(set.size());
  for (std::size_t t = 0; t < set.size(); ++t) {
    power_spike_[t] = set.power_spike(t);
    heat_spike_[t] = set.heat_spike(t);
  }
  power_enabled_ = set.power_spike_enabled;
  heat_enabled_ = set.heat_spike_enabled;
}

BiasSpike BiasSpikeWeigher::operator()(const EdgeRef& e) const {
  if (e.is_source()) return {0.0, 0.0};
  const Transition& tr = graph_->model().transition(e.transition);
  double bias = tr.op_cost;
  double spike = 0.0;
  for (std::size_t t = e.t_begin; t < e.t_end; ++t) {
    const PiecewiseLinearCost& cp = tariff_->power_at(t);
    const PiecewiseLinearCost& ch = tariff_->heat_at(t);
    const double base_p = cp(bias_.power_kw[t] - tr.power_kw);
    const double base_h = ch(bias_.heat_kw[t] - tr.heat_kw);
    bias += base_p + base_h;
    if (power_enabled_[t]) {
      spike = std::max(
          spike, cp((bias_.power_kw[t] + power_spike_[t]) - tr.power_kw) -
                     base_p);
    }
    if (heat_enabled_[t]) {
      spike = std::max(
          spike,
          ch((bias_.heat_kw[t] + heat_spike_[t]) - tr.heat_kw) - base_h);
    }
  }
  if (!std::isfinite(bias) || !std::isfinite(spike)) spike = 0.0;
  return {bias, spike};
}

ExtremeScenario BiasSpikeWeigher::worst_scenario(const EdgeRef& e) const {
  const double target = (*this)(e).spike;
  if (e.is_source() || !(target > 0.0)) return {ScenarioKind::kBias, 0};
  const Transition& tr = graph_->model().transition(e.transition);
  for (std::size_t t = e.t_begin; t < e.t_end; ++t) {
    const PiecewiseLinearCost& cp = tariff_->power_at(t);
    const PiecewiseLinearCost& ch = tariff_->heat_at(t);
    const double base_p = cp(bias_.power_kw[t] - tr.power_kw);
    const double base_h = ch(bias_.heat_kw[t] - tr.heat_kw);
    if (power_enabled_[t] &&
        cp((bias_.power_kw[t] + power_spike_[t]) - tr.power_kw) - base_p ==
            target) {
      return {ScenarioKind::kPowerSpike, t};
    }
    if (heat_enabled_[t] &&
        ch((bias_.heat_kw[t] + heat_spike_[t]) - tr.heat_kw) - base_h ==
            target) {
      return {ScenarioKind::kHeatSpike, t};
    }
  }
  return {ScenarioKind::kBias, 0};
}

BiasSpike edge_bias_spike(const DispatchGraph& graph, const EdgeRef& edge,
                          const MixedSet& set, const Tariff& tariff) {
  return BiasSpikeWeigher(graph, set, tariff)(edge);
}

EdgeCosts compute_edge_costs(const DispatchGraph& graph, const MixedSet& set,
                             const Tariff& tariff) {
  const BiasSpikeWeigher weigh(graph, set, tariff);
  EdgeCosts costs;
  costs.bias.assign(graph.edge_id_bound(), 0.0);
  costs.spike.assign(graph.edge_id_bound(), 0.0);
  for (NodeId u = 0; u < graph.sink(); ++u) {
    graph.for_each_out_edge(u, [&](const EdgeRef& e) {
      const BiasSpike bs = weigh(e);
      costs.bias[e.id] = bs.bias;
      costs.spike[e.id] = bs.spike;
    });
  }
  return costs;
}

namespace {

void put_number(std::ostream& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, res.ptr - buf);
}

}  // namespace

void write_edge_dump(std::ostream& out, const DispatchGraph& graph,
                     const EdgeCosts& costs) {
  const IndexedModel& m = graph.model();
  out << "tail_t,tail_state,head_t,head_state,control,w_bias,w_spike\n";
  for (const EdgeRef& e : graph.edges()) {
    if (e.is_source()) {
      out << "-,s,0," << m.state_name(e.next_state) << ",-,";
    } else {
      const Transition& tr = m.transition(e.transition);
      out << e.t_begin << ',' << m.state_name(tr.from) << ',' << e.t_end << ','
          << m.state_name(tr.to) << ',' << m.control_name(e.transition) << ',';
    }
    put_number(out, costs.bias[e.id]);
    out << ',';
    put_number(out, costs.spike[e.id]);
    out << '\n';
  }
}

}  // namespace rdispatch
