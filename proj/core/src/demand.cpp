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

#include "rdispatch/demand.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rdispatch {

std::vector<std::string> check_profile(const DemandProfile& profile,
                                       std::size_t expected_steps) {
  std::vector<std::string> issues;
  if (profile.power_kw.size() != profile.heat_kw.size()) {
    issues.push_back("power and heat columns differ in length");
  }
  if (profile.power_kw.size() != expected_steps) {
    issues.push_back("expected " + std::to_string(expected_steps) +
                     " steps, found " + std::to_string(profile.power_kw.size()));
  }
  auto scan = [&issues](const std::vector<double>& v, const char* what) {
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (!std::isfinite(v[t]) || v[t] < 0.0) {
        issues.push_back(std::string(what) + " at step " + std::to_string(t) +
                         " is negative or non-finite");
        return;
      }
    }
  };
  scan(profile.power_kw, "power_kw");
  scan(profile.heat_kw, "heat_kw");
  return issues;
}

Forecast forecast_from_history(std::span<const DemandProfile> history) {
  if (history.size() < 2) {
    throw std::invalid_argument("forecast: need at least two days of history");
  }
  const std::size_t steps = history.front().size();
  for (const auto& day : history) {
    if (day.power_kw.size() != steps || day.heat_kw.size() != steps) {
      throw std::invalid_argument("forecast: history days differ in length");
    }
  }

  const double n = static_cast<double>(history.size());
  Forecast f;
  f.mu_power.resize(steps);
  f.mu_heat.resize(steps);
  f.sigma_power.resize(steps);
  f.sigma_heat.resize(steps);

  // Values are sorted per step before summing so the result does not depend
  // on the order of the days.
  std::vector<double> column(history.size());
  auto moments = [&](auto pick, std::size_t t, double& mu, double& sigma) {
    for (std::size_t d = 0; d < history.size(); ++d) {
      column[d] = pick(history[d])[t];
    }
    std::sort(column.begin(), column.end());
    double sum = 0.0;
    for (double v : column) sum += v;
    mu = sum / n;
    for (double& v : column) v = (v - mu) * (v - mu);
    std::sort(column.begin(), column.end());
    double ss = 0.0;
    for (double v : column) ss += v;
    sigma = std::sqrt(ss / n);
  };
  for (std::size_t t = 0; t < steps; ++t) {
    moments([](const DemandProfile& d) -> const auto& { return d.power_kw; }, t,
            f.mu_power[t], f.sigma_power[t]);
    moments([](const DemandProfile& d) -> const auto& { return d.heat_kw; }, t,
            f.mu_heat[t], f.sigma_heat[t]);
  }
  return f;
}

namespace {

void require_len(std::size_t n, std::size_t want, const char* what) {
  if (n != want) {
    throw std::invalid_argument(std::string("uncertainty set: ") + what +
                                " has wrong length");
  }
}

void require_nonneg(const std::vector<double>& v, const char* what) {
  for (double x : v) {
    if (!(x >= 0.0)) {
      throw std::invalid_argument(std::string("uncertainty set: ") + what +
                                  " must be non-negative");
    }
  }
}

}  // namespace

void check_set(const BoxSet& set) {
  const std::size_t n = set.size();
  require_len(set.nominal_heat.size(), n, "nominal_heat");
  require_len(set.power_dev.size(), n, "power_dev");
  require_len(set.heat_dev.size(), n, "heat_dev");
  require_nonneg(set.power_dev, "power_dev");
  require_nonneg(set.heat_dev, "heat_dev");
}

void check_set(const MixedSet& set) {
  const std::size_t n = set.size();
  require_len(set.nominal_heat.size(), n, "nominal_heat");
  require_len(set.power_dev.size(), n, "power_dev");
  require_len(set.heat_dev.size(), n, "heat_dev");
  require_len(set.power_weight.size(), n, "power_weight");
  require_len(set.heat_weight.size(), n, "heat_weight");
  require_len(set.power_spike_enabled.size(), n, "power_spike_enabled");
  require_len(set.heat_spike_enabled.size(), n, "heat_spike_enabled");
  require_nonneg(set.power_dev, "power_dev");
  require_nonneg(set.heat_dev, "heat_dev");
  if (!(set.budget >= 0.0) || !std::isfinite(set.budget)) {
    throw std::invalid_argument("uncertainty set: budget must be >= 0");
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (set.power_spike_enabled[t] && !(set.power_weight[t] > 0.0)) {
      throw std::invalid_argument(
          "uncertainty set: power weight must be > 0 where spikes are enabled");
    }
    if (set.heat_spike_enabled[t] && !(set.heat_weight[t] > 0.0)) {
      throw std::invalid_argument(
          "uncertainty set: heat weight must be > 0 where spikes are enabled");
    }
  }
}

BoxSet box_set(const Forecast& forecast, double alpha) {
  if (!(alpha >= 0.0)) {
    throw std::invalid_argument("box_set: alpha must be >= 0");
  }
  BoxSet set{forecast.mu_power, forecast.mu_heat, {}, {}};
  set.power_dev.reserve(forecast.size());
  set.heat_dev.reserve(forecast.size());
  for (std::size_t t = 0; t < forecast.size(); ++t) {
    set.power_dev.push_back(alpha * forecast.sigma_power[t]);
    set.heat_dev.push_back(alpha * forecast.sigma_heat[t]);
  }
  return set;
}

MixedSet mixed_set(const Forecast& forecast, double alpha1, double alpha2) {
  if (!(alpha1 >= 0.0) || !(alpha2 >= 0.0)) {
    throw std::invalid_argument("mixed_set: alpha1, alpha2 must be >= 0");
  }
  const std::size_t n = forecast.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  MixedSet set;
  set.nominal_power = forecast.mu_power;
  set.nominal_heat = forecast.mu_heat;
  set.budget = alpha2;
  set.power_dev.resize(n);
  set.heat_dev.resize(n);
  set.power_weight.resize(n);
  set.heat_weight.resize(n);
  set.power_spike_enabled.resize(n);
  set.heat_spike_enabled.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double sp = forecast.sigma_power[t];
    const double sh = forecast.sigma_heat[t];
    set.power_dev[t] = alpha1 * sp;
    set.heat_dev[t] = alpha1 * sh;
    set.power_spike_enabled[t] = sp > 0.0;
    set.heat_spike_enabled[t] = sh > 0.0;
    set.power_weight[t] = sp > 0.0 ? 1.0 / sp : kInf;
    set.heat_weight[t] = sh > 0.0 ? 1.0 / sh : kInf;
  }
  return set;
}

DemandProfile worst_corner(const BoxSet& set) {
  check_set(set);
  DemandProfile p;
  p.power_kw.resize(set.size());
  p.heat_kw.resize(set.size());
  for (std::size_t t = 0; t < set.size(); ++t) {
    p.power_kw[t] = set.nominal_power[t] + set.power_dev[t];
    p.heat_kw[t] = set.nominal_heat[t] + set.heat_dev[t];
  }
  return p;
}

DemandProfile worst_corner(const UncertaintySet& set) {
  if (const auto* box = std::get_if<BoxSet>(&set)) return worst_corner(*box);
  throw std::invalid_argument("worst_corner: requires a box uncertainty set");
}

DemandProfile bias_profile(const MixedSet& set) {
  DemandProfile p;
  p.power_kw.resize(set.size());
  p.heat_kw.resize(set.size());
  for (std::size_t t = 0; t < set.size(); ++t) {
    p.power_kw[t] = set.nominal_power[t] + set.power_dev[t];
    p.heat_kw[t] = set.nominal_heat[t] + set.heat_dev[t];
  }
  return p;
}

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kNominal:
      return "nominal";
    case ScenarioKind::kBoxCorner:
      return "box-corner";
    case ScenarioKind::kBias:
      return "bias-only";
    case ScenarioKind::kPowerSpike:
      return "power-spike";
    case ScenarioKind::kHeatSpike:
      return "heat-spike";
  }
  return "unknown";
}

std::vector<ExtremeScenario> extreme_scenarios(const MixedSet& set) {
  check_set(set);
  std::vector<ExtremeScenario> out{{ScenarioKind::kBias, 0}};
  for (std::size_t t = 0; t < set.size(); ++t) {
    if (set.power_spike_enabled[t]) {
      out.push_back({ScenarioKind::kPowerSpike, t});
    }
    if (set.heat_spike_enabled[t]) out.push_back({ScenarioKind::kHeatSpike, t});
  }
  return out;
}

std::vector<ExtremeScenario> extreme_scenarios(const UncertaintySet& set) {
  if (const auto* mixed = std::get_if<MixedSet>(&set)) {
    return extreme_scenarios(*mixed);
  }
  throw std::invalid_argument("extreme_scenarios: requires a mixed set");
}

DemandProfile scenario_profile(const MixedSet& set,
                               const ExtremeScenario& scenario) {
  DemandProfile p = bias_profile(set);
  switch (scenario.kind) {
    case ScenarioKind::kPowerSpike:
      p.power_kw.at(scenario.step) += set.power_spike(scenario.step);
      break;
    case ScenarioKind::kHeatSpike:
      p.heat_kw.at(scenario.step) += set.heat_spike(scenario.step);
      break;
    case ScenarioKind::kBias:
      break;
    default:
      throw std::invalid_argument("scenario_profile: not a mixed-set scenario");
  }
  return p;
}

bool contains(const BoxSet& set, const DemandProfile& xi, double tol) {
  if (xi.power_kw.size() != set.size() || xi.heat_kw.size() != set.size()) {
    return false;
  }
  for (std::size_t t = 0; t < set.size(); ++t) {
    if (std::abs(xi.power_kw[t] - set.nominal_power[t]) >
            set.power_dev[t] + tol ||
        std::abs(xi.heat_kw[t] - set.nominal_heat[t]) > set.heat_dev[t] + tol) {
      return false;
    }
  }
  return true;
}

bool contains(const MixedSet& set, const DemandProfile& xi, double tol) {
  if (xi.power_kw.size() != set.size() || xi.heat_kw.size() != set.size()) {
    return false;
  }
  double used = 0.0;
  auto spend = [&](double residual, double dev, bool enabled,
                   double weight) -> bool {
    const double bias = std::clamp(residual, -dev, dev);
    const double spike = std::abs(residual - bias);
    if (!enabled) return spike <= tol;
    used += weight * spike;
    return true;
  };
  for (std::size_t t = 0; t < set.size(); ++t) {
    if (!spend(xi.power_kw[t] - set.nominal_power[t], set.power_dev[t],
               set.power_spike_enabled[t], set.power_weight[t]) ||
        !spend(xi.heat_kw[t] - set.nominal_heat[t], set.heat_dev[t],
               set.heat_spike_enabled[t], set.heat_weight[t])) {
      return false;
    }
  }
  return used <= set.budget + tol;
}

}  // namespace rdispatch
