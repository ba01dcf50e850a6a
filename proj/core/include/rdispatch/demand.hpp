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

#ifndef RDISPATCH_DEMAND_HPP_
#define RDISPATCH_DEMAND_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rdispatch {

// Per-step power and heat demand in kW over steps [0, T).
struct DemandProfile {
  std::vector<double> power_kw;
  std::vector<double> heat_kw;

  std::size_t size() const { return power_kw.size(); }
  bool operator==(const DemandProfile&) const = default;
};

// Shape and value problems (length mismatch, negative or non-finite values).
std::vector<std::string> check_profile(const DemandProfile& profile,
                                       std::size_t expected_steps);

// Per time-of-day sample mean and standard deviation over several days.
struct Forecast {
  std::vector<double> mu_power;
  std::vector<double> mu_heat;
  std::vector<double> sigma_power;
  std::vector<double> sigma_heat;

  std::size_t size() const { return mu_power.size(); }
  DemandProfile mean() const { return {mu_power, mu_heat}; }
};

// Standard deviation uses the population divisor n. Throws
// std::invalid_argument for fewer than two days or differing lengths.
Forecast forecast_from_history(std::span<const DemandProfile> history);

// |P(t) - P0(t)| <= dP(t), |H(t) - H0(t)| <= dH(t).
struct BoxSet {
  std::vector<double> nominal_power;
  std::vector<double> nominal_heat;
  std::vector<double> power_dev;
  std::vector<double> heat_dev;

  std::size_t size() const { return nominal_power.size(); }
};

// Mixed l1/l-inf set: P = P0 + spike + bias with |bias(t)| <= dP(t) and a
// shared budget sum_t [delta_P(t)|spikeP(t)| + delta_H(t)|spikeH(t)] <= mu1.
// A step whose spike is disabled admits no spike for that commodity.
struct MixedSet {
  std::vector<double> nominal_power;
  std::vector<double> nominal_heat;
  std::vector<double> power_dev;
  std::vector<double> heat_dev;
  std::vector<double> power_weight;  // delta_P(t)
  std::vector<double> heat_weight;   // delta_H(t)
  std::vector<std::uint8_t> power_spike_enabled;
  std::vector<std::uint8_t> heat_spike_enabled;
  double budget = 0.0;  // mu1

  std::size_t size() const { return nominal_power.size(); }

  // Largest admissible single spike at step t (0 when disabled).
  double power_spike(std::size_t t) const {
    return power_spike_enabled[t] ? budget / power_weight[t] : 0.0;
  }
  double heat_spike(std::size_t t) const {
    return heat_spike_enabled[t] ? budget / heat_weight[t] : 0.0;
  }
};

using UncertaintySet = std::variant<BoxSet, MixedSet>;

// Throws std::invalid_argument on shape mismatch or a negative deviation,
// weight or budget.
void check_set(const BoxSet& set);
void check_set(const MixedSet& set);

// P0 = mu, dP = alpha * sigma (likewise heat).
BoxSet box_set(const Forecast& forecast, double alpha);

// P0 = mu, dP = alpha1 * sigma, delta_P = 1 / sigma, mu1 = alpha2. Steps
// with sigma = 0 have the spike disabled.
MixedSet mixed_set(const Forecast& forecast, double alpha1, double alpha2);

// The unique positively-extreme point (P0 + dP, H0 + dH).
DemandProfile worst_corner(const BoxSet& set);
// Throws std::invalid_argument for a MixedSet.
DemandProfile worst_corner(const UncertaintySet& set);

// Worst spikeless demand (P0 + dP, H0 + dH).
DemandProfile bias_profile(const MixedSet& set);

enum class ScenarioKind { kNominal, kBoxCorner, kBias, kPowerSpike, kHeatSpike };

std::string_view to_string(ScenarioKind kind);

struct ExtremeScenario {
  ScenarioKind kind;
  std::size_t step = 0;  // spike position; 0 for non-spike kinds

  bool operator==(const ExtremeScenario&) const = default;
};

// Descriptors of the bias profile followed by, for every step, the power
// spike then the heat spike (disabled spikes omitted). Profiles are built on
// demand with scenario_profile.
std::vector<ExtremeScenario> extreme_scenarios(const MixedSet& set);
// Throws std::invalid_argument for a BoxSet.
std::vector<ExtremeScenario> extreme_scenarios(const UncertaintySet& set);

DemandProfile scenario_profile(const MixedSet& set,
                               const ExtremeScenario& scenario);

// Membership tests with absolute tolerance `tol`.
bool contains(const BoxSet& set, const DemandProfile& xi, double tol = 1e-9);
// Decomposes xi - P0 as bias clamped to [-dP, dP] plus spike and checks the
// weighted spike budget.
bool contains(const MixedSet& set, const DemandProfile& xi, double tol = 1e-9);

// Synthetic daily demand for one season; deterministic given the seed.
struct SyntheticDayConfig {
  std::size_t steps = 5760;
  double step_seconds = 15.0;
  std::string season = "winter";  // winter | spring | summer | autumn
  double power_scale_kw = 60.0;
  double heat_scale_kw = 120.0;
  double noise = 0.08;          // relative day-to-day level noise
  double spike_rate_per_day = 6.0;
};

std::vector<DemandProfile> synth_days(const SyntheticDayConfig& config,
                                      std::size_t days, std::uint64_t seed);

}  // namespace rdispatch

#endif  // RDISPATCH_DEMAND_HPP_
