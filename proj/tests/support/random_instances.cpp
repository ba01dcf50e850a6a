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

#include "support/random_instances.hpp"

#include <algorithm>
#include <string>

namespace rdispatch::testing {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return uniform(rng, 0.0, 1.0) < p; }

double eval_raw(const RawCost& c, double x) {
  if (x < 0.0) {
    return c.below_slope ? *c.below_slope * x : kInfiniteCost;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < c.starts.size(); ++i) {
    const double lo = c.starts[i];
    const double hi =
        i + 1 < c.starts.size() ? c.starts[i + 1] : kInfiniteCost;
    if (x <= lo) break;
    total += c.slopes[i] * (std::min(x, hi) - lo);
  }
  return total;
}

namespace {

PiecewiseLinearCost to_cost(const RawCost& c) {
  std::vector<PiecewiseLinearCost::Piece> pieces;
  for (std::size_t i = 0; i < c.starts.size(); ++i) {
    pieces.push_back({c.starts[i], c.slopes[i]});
  }
  return PiecewiseLinearCost(c.below_slope, std::move(pieces));
}

RawCost random_cost(Rng& rng, const InstanceConfig& cfg, bool heat) {
  RawCost c;
  const int n = uniform_int(rng, 1, 3);
  double start = 0.0;
  double slope = uniform(rng, 0.02, 0.6);
  for (int i = 0; i < n; ++i) {
    c.starts.push_back(start);
    c.slopes.push_back(slope);
    start += uniform(rng, 1.0, 12.0);
    slope = cfg.convex ? slope + uniform(rng, 0.0, 0.5)
                       : uniform(rng, 0.02, 1.0);
  }
  if (heat) {
    c.below_slope = 0.0;
  } else if (coin(rng, cfg.forbid_sell_probability)) {
    c.below_slope = std::nullopt;
  } else if (cfg.allow_revenue) {
    const double first = c.slopes.front();
    c.below_slope = cfg.convex ? uniform(rng, 0.0, first)
                               : uniform(rng, 0.0, 1.0);
  } else {
    c.below_slope = 0.0;
  }
  return c;
}

}  // namespace

Tariff to_tariff(const RawTariff& raw, double step_seconds) {
  std::vector<PiecewiseLinearCost> power;
  std::vector<PiecewiseLinearCost> heat;
  for (const auto& c : raw.power) power.push_back(to_cost(c));
  for (const auto& c : raw.heat) heat.push_back(to_cost(c));
  return Tariff(step_seconds, std::move(power), std::move(heat));
}

TurbineModel random_model(Rng& rng, const InstanceConfig& cfg) {
  TurbineModel m;
  const int n = uniform_int(rng, cfg.min_states, cfg.max_states);
  for (int i = 0; i < n; ++i) m.states.push_back("x" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    const int controls = uniform_int(rng, 1, cfg.max_controls);
    for (int u = 0; u < controls; ++u) {
      TransitionRecord r;
      r.from = m.states[i];
      r.control = "u" + std::to_string(u);
      // The first state can always idle for one step, so short horizons
      // stay feasible.
      if (i == 0 && u == 0) {
        r.to = r.from;
        r.duration_steps = 1;
      } else {
        r.to = m.states[uniform_int(rng, 0, n - 1)];
        r.duration_steps = uniform_int(rng, 1, cfg.max_duration);
      }
      const bool idle = coin(rng, 0.2);
      r.power_kw = idle ? 0.0 : uniform(rng, 0.0, 20.0);
      r.heat_kw = idle ? 0.0 : uniform(rng, 0.0, 30.0);
      r.op_cost = uniform(rng, 0.0, 3.0);
      m.transitions.push_back(r);
    }
  }
  return m;
}

RawTariff random_raw_tariff(Rng& rng, std::size_t horizon,
                            const InstanceConfig& cfg) {
  RawTariff raw;
  for (std::size_t t = 0; t < horizon; ++t) {
    raw.power.push_back(random_cost(rng, cfg, false));
    raw.heat.push_back(random_cost(rng, cfg, true));
  }
  return raw;
}

MixedSet random_mixed_set(Rng& rng, std::size_t horizon) {
  MixedSet s;
  s.budget = coin(rng, 0.1) ? 0.0 : uniform(rng, 0.0, 6.0);
  for (std::size_t t = 0; t < horizon; ++t) {
    s.nominal_power.push_back(uniform(rng, 0.0, 25.0));
    s.nominal_heat.push_back(uniform(rng, 0.0, 35.0));
    s.power_dev.push_back(uniform(rng, 0.0, 3.0));
    s.heat_dev.push_back(uniform(rng, 0.0, 3.0));
    const bool p_on = !coin(rng, 0.2);
    const bool h_on = !coin(rng, 0.2);
    s.power_spike_enabled.push_back(p_on);
    s.heat_spike_enabled.push_back(h_on);
    s.power_weight.push_back(p_on ? uniform(rng, 0.1, 2.0) : 1.0);
    s.heat_weight.push_back(h_on ? uniform(rng, 0.1, 2.0) : 1.0);
  }
  return s;
}

BoxSet random_box_set(Rng& rng, std::size_t horizon) {
  BoxSet s;
  for (std::size_t t = 0; t < horizon; ++t) {
    s.nominal_power.push_back(uniform(rng, 0.0, 25.0));
    s.nominal_heat.push_back(uniform(rng, 0.0, 35.0));
    s.power_dev.push_back(coin(rng, 0.2) ? 0.0 : uniform(rng, 0.0, 6.0));
    s.heat_dev.push_back(coin(rng, 0.2) ? 0.0 : uniform(rng, 0.0, 6.0));
  }
  return s;
}

DemandProfile random_demand(Rng& rng, std::size_t horizon, double max_power,
                            double max_heat) {
  DemandProfile d;
  for (std::size_t t = 0; t < horizon; ++t) {
    d.power_kw.push_back(uniform(rng, 0.0, max_power));
    d.heat_kw.push_back(uniform(rng, 0.0, max_heat));
  }
  return d;
}

Instance random_instance(Rng& rng, const InstanceConfig& cfg) {
  Instance inst;
  inst.model = random_model(rng, cfg);
  inst.horizon = static_cast<std::size_t>(uniform_int(
      rng, static_cast<int>(cfg.min_horizon), static_cast<int>(cfg.max_horizon)));
  inst.raw_tariff = random_raw_tariff(rng, inst.horizon, cfg);
  inst.tariff = to_tariff(inst.raw_tariff, inst.model.step_seconds);
  inst.mixed = random_mixed_set(rng, inst.horizon);
  inst.box = random_box_set(rng, inst.horizon);
  return inst;
}

TurbineModel tiny_plant() {
  TurbineModel m;
  m.step_seconds = 15.0;
  m.states = {"on", "off"};
  m.transitions = {
      {"on", "keep", "on", 1, 10.0, 20.0, 2.0},
      {"on", "stop", "off", 1, 0.0, 0.0, 1.0},
      {"off", "keep", "off", 1, 0.0, 0.0, 0.0},
      {"off", "start", "on", 1, 0.0, 0.0, 1.0},
  };
  return m;
}

Tariff flat_tariff(std::size_t horizon, double power,
                   std::optional<double> sell, double heat) {
  std::vector<PiecewiseLinearCost> p(
      horizon, PiecewiseLinearCost::linear(power, sell));
  std::vector<PiecewiseLinearCost> h(horizon,
                                     PiecewiseLinearCost::linear(heat, 0.0));
  return Tariff(15.0, std::move(p), std::move(h));
}

}  // namespace rdispatch::testing
