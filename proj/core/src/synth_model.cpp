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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rdispatch/model.hpp"

namespace rdispatch {
namespace {

struct GridPoint {
  double power_kw;
  double heat_kw;
  double fuel_cost_per_step;
};

std::string active_name(int speed, int valve) {
  return "s" + std::to_string(speed) + "_v" + std::to_string(valve);
}

std::string move_name(int dspeed, int dvalve) {
  if (dspeed == 0 && dvalve == 0) return "keep";
  auto part = [](const char* tag, int d) {
    return std::string(tag) + (d > 0 ? "+1" : "-1");
  };
  if (dvalve == 0) return part("spd", dspeed);
  if (dspeed == 0) return part("vlv", dvalve);
  return part("spd", dspeed) + "_" + part("vlv", dvalve);
}

int steps_for(double minutes, double step_seconds) {
  return std::max(1, static_cast<int>(std::ceil(minutes * 60.0 / step_seconds -
                                                1e-9)));
}

void check_ranges(const SynthRanges& r) {
  auto ordered = [](double lo, double hi, const char* what) {
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
      throw std::invalid_argument(std::string("synth_c65_like: invalid ") +
                                  what + " range (min > max)");
    }
  };
  ordered(r.power_min_kw, r.power_max_kw, "power");
  ordered(r.heat_min_kw, r.heat_max_kw, "heat");
  ordered(r.efficiency_min, r.efficiency_max, "efficiency");
  if (r.power_min_kw < 0.0 || r.heat_min_kw < 0.0) {
    throw std::invalid_argument("synth_c65_like: outputs must be >= 0");
  }
  if (!(r.efficiency_min > 0.0) || !(r.total_efficiency > 0.0)) {
    throw std::invalid_argument("synth_c65_like: efficiency must be > 0");
  }
  if (!(r.step_seconds > 0.0) || !(r.gas_kwh_per_kg > 0.0) ||
      r.gas_price_per_kg < 0.0 || r.cycling_cost < 0.0 ||
      r.startup_minutes < 0.0 || r.shutdown_minutes < 0.0) {
    throw std::invalid_argument("synth_c65_like: invalid scalar parameter");
  }
}

}  // namespace

TurbineModel synth_c65_like(int n_speeds, int n_valves,
                            const SynthRanges& ranges) {
  if (n_speeds < 1 || n_valves < 1) {
    throw std::invalid_argument("synth_c65_like: n_speeds, n_valves >= 1");
  }
  check_ranges(ranges);

  // Linear in grid indices: power rises with speed; heat rises with speed and
  // falls as the recuperator bypass valve opens. Fuel covers the electrical
  // efficiency and the combined output at the total efficiency cap.
  auto point = [&](int i, int j) {
    const double x = n_speeds == 1 ? 0.0 : double(i) / (n_speeds - 1);
    const double y = n_valves == 1 ? 0.0 : double(j) / (n_valves - 1);
    const double p =
        ranges.power_min_kw + (ranges.power_max_kw - ranges.power_min_kw) * x;
    const double h = ranges.heat_min_kw +
                     (ranges.heat_max_kw - ranges.heat_min_kw) * x *
                         (1.0 - 0.5 * y);
    const double eff = ranges.efficiency_min +
                       (ranges.efficiency_max - ranges.efficiency_min) * x;
    const double fuel_kw = std::max(p / eff, (p + h) / ranges.total_efficiency);
    const double fuel_kwh = fuel_kw * ranges.step_seconds / 3600.0;
    return GridPoint{p, h,
                     fuel_kwh / ranges.gas_kwh_per_kg * ranges.gas_price_per_kg};
  };

  TurbineModel m;
  m.step_seconds = ranges.step_seconds;
  m.states.reserve(static_cast<std::size_t>(n_speeds) * n_valves + 1);
  for (int i = 0; i < n_speeds; ++i) {
    for (int j = 0; j < n_valves; ++j) m.states.push_back(active_name(i, j));
  }
  m.states.push_back("off");

  const int startup_steps = steps_for(ranges.startup_minutes,
                                      ranges.step_seconds);
  const int shutdown_steps = steps_for(ranges.shutdown_minutes,
                                       ranges.step_seconds);

  for (int i = 0; i < n_speeds; ++i) {
    for (int j = 0; j < n_valves; ++j) {
      const GridPoint a = point(i, j);
      for (int di = -1; di <= 1; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          const int ni = i + di;
          const int nj = j + dj;
          if (ni < 0 || ni >= n_speeds || nj < 0 || nj >= n_valves) continue;
          const GridPoint b = point(ni, nj);
          const int duration = di > 0 ? 2 : 1;
          m.transitions.push_back({
              active_name(i, j),
              move_name(di, dj),
              active_name(ni, nj),
              duration,
              (a.power_kw + b.power_kw) / 2.0,
              (a.heat_kw + b.heat_kw) / 2.0,
              duration * (a.fuel_cost_per_step + b.fuel_cost_per_step) / 2.0,
          });
        }
      }
      if (i == 0) {
        m.transitions.push_back({active_name(i, j), "shutdown", "off",
                                 shutdown_steps, 0.0, 0.0,
                                 ranges.cycling_cost});
      }
    }
  }
  m.transitions.push_back({"off", "keep", "off", 1, 0.0, 0.0, 0.0});
  m.transitions.push_back({"off", "start", active_name(0, 0), startup_steps,
                           0.0, 0.0, ranges.cycling_cost});
  return m;
}

}  // namespace rdispatch
