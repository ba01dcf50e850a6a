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

#ifndef RDISPATCH_TOOLS_CLI_SCHEDULE_HPP_
#define RDISPATCH_TOOLS_CLI_SCHEDULE_HPP_

#include <span>
#include <string>
#include <vector>

#include "rdispatch/demand.hpp"
#include "rdispatch/dispatch_graph.hpp"
#include "rdispatch/tariff.hpp"

namespace rdispatch::cli {

struct ScheduleRow {
  std::size_t t;
  std::string state;    // state the step starts from
  std::string control;  // control of the transition covering the step
  double p_mgt_kw;
  double h_mgt_kw;
  double p_util_kw;  // P(t) - P_MGT, negative when selling
  double h_util_kw;
  double step_cost;  // utility purchases, plus op_cost on a transition's first step
};

struct Schedule {
  std::vector<ScheduleRow> rows;
  double total = 0.0;  // sum of step_cost in step order
  DemandProfile demand;
};

// Per-step dispatch of an s -> q path under `demand`.
Schedule build_schedule(const DispatchGraph& graph,
                        std::span<const EdgeRef> path,
                        const DemandProfile& demand, const Tariff& tariff);

// Header t,state,control,p_mgt_kw,h_mgt_kw,p_util_kw,h_util_kw,step_cost.
std::string schedule_to_csv(const Schedule& schedule);

}  // namespace rdispatch::cli

#endif  // RDISPATCH_TOOLS_CLI_SCHEDULE_HPP_
