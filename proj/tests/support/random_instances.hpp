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

#ifndef RDISPATCH_TESTS_SUPPORT_RANDOM_INSTANCES_HPP_
#define RDISPATCH_TESTS_SUPPORT_RANDOM_INSTANCES_HPP_

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "rdispatch/demand.hpp"
#include "rdispatch/model.hpp"
#include "rdispatch/tariff.hpp"

namespace rdispatch::testing {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
int uniform_int(Rng& rng, int lo, int hi);  // inclusive
bool coin(Rng& rng, double p);

// Piecewise-linear cost held as plain breakpoints so tests can evaluate it
// without the library. Pieces start at 0 and strictly increase.
struct RawCost {
  std::optional<double> below_slope;  // nullopt: +inf below zero
  std::vector<double> starts;
  std::vector<double> slopes;
};

struct RawTariff {
  std::vector<RawCost> power;  // per step
  std::vector<RawCost> heat;
};

double eval_raw(const RawCost& c, double x);
Tariff to_tariff(const RawTariff& raw, double step_seconds = 15.0);

struct InstanceConfig {
  int min_states = 2;
  int max_states = 6;
  int max_controls = 3;
  int max_duration = 3;
  std::size_t min_horizon = 1;
  std::size_t max_horizon = 10;
  // Selling earns money at a positive rate; otherwise the sell slope is 0
  // or selling is forbidden, and every cost is non-negative.
  bool allow_revenue = true;
  double forbid_sell_probability = 0.25;
  bool convex = true;
};

struct Instance {
  TurbineModel model;
  std::size_t horizon = 0;
  RawTariff raw_tariff;
  Tariff tariff;
  MixedSet mixed;
  BoxSet box;
};

TurbineModel random_model(Rng& rng, const InstanceConfig& cfg);
RawTariff random_raw_tariff(Rng& rng, std::size_t horizon,
                            const InstanceConfig& cfg);
MixedSet random_mixed_set(Rng& rng, std::size_t horizon);
BoxSet random_box_set(Rng& rng, std::size_t horizon);
DemandProfile random_demand(Rng& rng, std::size_t horizon, double max_power,
                            double max_heat);
Instance random_instance(Rng& rng, const InstanceConfig& cfg = {});

// Two-state plant: on/keep generates (10 kW, 20 kW) for cost 2, stop and
// start cost 1, off/keep is free.
TurbineModel tiny_plant();

// Per-step linear tariff: buy slope `power`, sell at `sell` (nullopt =
// forbidden), heat slope `heat`.
Tariff flat_tariff(std::size_t horizon, double power,
                   std::optional<double> sell, double heat);

}  // namespace rdispatch::testing

#endif  // RDISPATCH_TESTS_SUPPORT_RANDOM_INSTANCES_HPP_
