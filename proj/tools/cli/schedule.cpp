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

#include "cli/schedule.hpp"

#include "rdispatch/io.hpp"
#include "rdispatch/sp_core.hpp"

namespace rdispatch::cli {

Schedule build_schedule(const DispatchGraph& graph,
                        std::span<const EdgeRef> path,
                        const DemandProfile& demand, const Tariff& tariff) {
  check_path(graph, path);
  if (demand.size() != graph.horizon()) {
    throw std::invalid_argument("schedule: demand length does not match horizon");
  }
  const IndexedModel& m = graph.model();
  Schedule s;
  s.demand = demand;
  for (const EdgeRef& e : path) {
    if (e.is_source()) continue;
    const Transition& tr = m.transition(e.transition);
    for (std::size_t t = e.t_begin; t < e.t_end; ++t) {
      ScheduleRow row{t,
                      m.state_name(tr.from),
                      m.control_name(e.transition),
                      tr.power_kw,
                      tr.heat_kw,
                      demand.power_kw[t] - tr.power_kw,
                      demand.heat_kw[t] - tr.heat_kw,
                      0.0};
      row.step_cost = tariff.power_at(t)(row.p_util_kw) +
                      tariff.heat_at(t)(row.h_util_kw);
      if (t == e.t_begin) row.step_cost += tr.op_cost;
      s.total += row.step_cost;
      s.rows.push_back(std::move(row));
    }
  }
  return s;
}

std::string schedule_to_csv(const Schedule& schedule) {
  std::string out =
      "t,state,control,p_mgt_kw,h_mgt_kw,p_util_kw,h_util_kw,step_cost\n";
  for (const ScheduleRow& r : schedule.rows) {
    out += std::to_string(r.t);
    for (const std::string* text : {&r.state, &r.control}) {
      out += ',';
      out += *text;
    }
    for (double v : {r.p_mgt_kw, r.h_mgt_kw, r.p_util_kw, r.h_util_kw,
                     r.step_cost}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace rdispatch::cli
