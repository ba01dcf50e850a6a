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
#include <numbers>
#include <random>
#include <stdexcept>

#include "rdispatch/demand.hpp"

namespace rdispatch {
namespace {

// Uniform in [0, 1) and standard normal draws from raw mt19937_64 output, so
// generated files are identical across standard library implementations.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}

  double uniform() { return double(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 rng_;
};

struct SeasonShape {
  double power_level;
  double heat_level;
  double heat_base;  // fraction of heat demand that is flat over the day
  double cooling;    // afternoon power bump
};

SeasonShape shape_for(const std::string& season) {
  if (season == "winter") return {0.90, 1.00, 0.60, 0.00};
  if (season == "spring") return {0.80, 0.60, 0.45, 0.05};
  if (season == "summer") return {1.05, 0.22, 0.20, 0.55};
  if (season == "autumn") return {0.85, 0.35, 0.30, 0.20};
  throw std::invalid_argument("synth_days: unknown season '" + season + "'");
}

double bump(double hour, double center, double width) {
  const double d = (hour - center) / width;
  return std::exp(-0.5 * d * d);
}

}  // namespace

std::vector<DemandProfile> synth_days(const SyntheticDayConfig& config,
                                      std::size_t days, std::uint64_t seed) {
  if (config.steps == 0 || !(config.step_seconds > 0.0)) {
    throw std::invalid_argument("synth_days: steps and step_seconds > 0");
  }
  const SeasonShape shape = shape_for(config.season);
  Draws draws(seed);

  std::vector<DemandProfile> out;
  out.reserve(days);
  for (std::size_t d = 0; d < days; ++d) {
    const double power_level =
        std::max(0.2, 1.0 + config.noise * draws.normal());
    const double heat_level =
        std::max(0.2, 1.0 + config.noise * draws.normal());
    // Slow intra-day drift: a couple of low-frequency waves per commodity.
    double phase[4];
    for (double& p : phase) p = draws.uniform(0.0, 2.0 * std::numbers::pi);
    const double evening_shift = draws.uniform(-0.75, 0.75);

    DemandProfile day;
    day.power_kw.resize(config.steps);
    day.heat_kw.resize(config.steps);
    for (std::size_t t = 0; t < config.steps; ++t) {
      const double hour =
          std::fmod(double(t) * config.step_seconds / 3600.0, 24.0);
      const double w = 2.0 * std::numbers::pi * hour / 24.0;
      const double drift_p = 0.5 * config.noise *
                             (std::sin(2 * w + phase[0]) + std::sin(3 * w + phase[1]));
      const double drift_h = 0.5 * config.noise *
                             (std::sin(2 * w + phase[2]) + std::sin(3 * w + phase[3]));

      const double power = 0.35 + 0.30 * bump(hour, 7.5, 1.3) +
                           0.55 * bump(hour, 19.0 + evening_shift, 2.2) +
                           shape.cooling * bump(hour, 15.0, 2.8);
      const double heat = shape.heat_base +
                          (1.0 - shape.heat_base) *
                              (0.9 * bump(hour, 7.0, 1.5) +
                               0.7 * bump(hour, 20.0 + evening_shift, 2.0));
      day.power_kw[t] = std::max(
          0.0, config.power_scale_kw * shape.power_level * power *
                   (power_level + drift_p));
      day.heat_kw[t] =
          std::max(0.0, config.heat_scale_kw * shape.heat_level * heat *
                            (heat_level + drift_h));
    }

    // Short demand spikes (appliances, showers): exponential arrivals.
    const double day_seconds = double(config.steps) * config.step_seconds;
    double at = 0.0;
    const double mean_gap =
        config.spike_rate_per_day > 0.0 ? 86400.0 / config.spike_rate_per_day
                                        : day_seconds * 2.0;
    while (true) {
      at += -std::log(1.0 - draws.uniform()) * mean_gap;
      if (at >= day_seconds) break;
      const bool heat_spike = draws.uniform() < 0.5;
      const double minutes = draws.uniform(1.0, 20.0);
      const double amplitude = draws.uniform(0.3, 0.8);
      const auto first = static_cast<std::size_t>(at / config.step_seconds);
      const auto len = std::max<std::size_t>(
          1, static_cast<std::size_t>(minutes * 60.0 / config.step_seconds));
      auto& column = heat_spike ? day.heat_kw : day.power_kw;
      const double scale =
          heat_spike ? config.heat_scale_kw * shape.heat_level
                     : config.power_scale_kw * shape.power_level;
      for (std::size_t t = first; t < std::min(config.steps, first + len); ++t) {
        column[t] += amplitude * scale;
      }
    }
    out.push_back(std::move(day));
  }
  return out;
}

}  // namespace rdispatch
