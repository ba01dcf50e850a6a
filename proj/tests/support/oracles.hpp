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

#ifndef RDISPATCH_TESTS_SUPPORT_ORACLES_HPP_
#define RDISPATCH_TESTS_SUPPORT_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rdispatch/demand.hpp"
#include "rdispatch/dispatch_graph.hpp"
#include "rdispatch/model.hpp"
#include "support/random_instances.hpp"

namespace rdispatch::testing {

// Schedules enumerated straight from the transition records, without the
// dispatch graph. A schedule is the start state plus the list of record
// indices; it must cover exactly `horizon` steps.
struct RecordSchedule {
  std::size_t start_state;
  std::vector<std::size_t> records;
};

// Initial/final restrictions by state name; empty means any.
void for_each_schedule(const TurbineModel& model, std::size_t horizon,
                       const std::vector<std::string>& initial,
                       const std::vector<std::string>& final,
                       const std::function<void(const RecordSchedule&)>& visit);

std::uint64_t count_schedules(const TurbineModel& model, std::size_t horizon);

// Structure counts derived from the transition rules alone.
struct StructureCounts {
  std::size_t nodes;
  std::size_t edges;
  std::uint64_t paths;
};
StructureCounts expected_structure(const TurbineModel& model,
                                   std::size_t horizon);

// Objective of the dispatch problem summed step by step: utility purchases
// at every step plus the operating cost of every transition.
double schedule_cost(const TurbineModel& model, const RecordSchedule& s,
                     const DemandProfile& demand, const RawTariff& tariff);

// The bias profile followed by one single-spike profile per enabled
// (step, commodity), built from the set's fields.
std::vector<DemandProfile> mixed_scenarios(const MixedSet& set);
DemandProfile box_corner(const BoxSet& set);

struct OracleBest {
  double cost;
  std::uint64_t schedules;
};

// min over schedules of max over scenarios of schedule_cost.
OracleBest robust_oracle(const TurbineModel& model, std::size_t horizon,
                         std::span<const DemandProfile> scenarios,
                         const RawTariff& tariff);

// Record schedule of a graph path.
RecordSchedule to_record_schedule(const DispatchGraph& graph,
                                  std::span<const EdgeRef> path);

bool near(double a, double b, double rel = 1e-9);

}  // namespace rdispatch::testing

#endif  // RDISPATCH_TESTS_SUPPORT_ORACLES_HPP_
