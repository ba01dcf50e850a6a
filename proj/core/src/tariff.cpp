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

#include "rdispatch/tariff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "rdispatch/errors.hpp"

namespace rdispatch {

PiecewiseLinearCost::PiecewiseLinearCost(std::optional<double> below_zero_slope,
                                         std::vector<Piece> pieces)
    : below_slope_(below_zero_slope.value_or(0.0)),
      below_forbidden_(!below_zero_slope.has_value()),
      pieces_(std::move(pieces)) {
  if (pieces_.empty() || pieces_.front().start_kw != 0.0) {
    throw std::invalid_argument(
        "piecewise cost: first piece must start at 0 kW");
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!std::isfinite(pieces_[i].slope) ||
        !std::isfinite(pieces_[i].start_kw)) {
      throw std::invalid_argument("piecewise cost: non-finite piece");
    }
    if (i > 0 && !(pieces_[i].start_kw > pieces_[i - 1].start_kw)) {
      throw std::invalid_argument(
          "piecewise cost: piece starts must increase strictly");
    }
  }
  if (!std::isfinite(below_slope_)) {
    throw std::invalid_argument("piecewise cost: non-finite below-zero slope");
  }
  cumulative_.resize(pieces_.size());
  cumulative_[0] = 0.0;
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    cumulative_[i] =
        cumulative_[i - 1] +
        pieces_[i - 1].slope * (pieces_[i].start_kw - pieces_[i - 1].start_kw);
  }
}

PiecewiseLinearCost PiecewiseLinearCost::linear(
    double slope, std::optional<double> below_zero_slope) {
  return PiecewiseLinearCost(below_zero_slope, {{0.0, slope}});
}

bool PiecewiseLinearCost::is_convex() const {
  if (!below_forbidden_ && below_slope_ > pieces_.front().slope) return false;
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i].slope < pieces_[i - 1].slope) return false;
  }
  return true;
}

bool PiecewiseLinearCost::is_non_decreasing() const {
  if (!below_forbidden_ && below_slope_ < 0.0) return false;
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const Piece& p) { return p.slope >= 0.0; });
}

PiecewiseLinearCost PiecewiseLinearCost::convex_majorant() const {
  std::vector<Piece> pieces = pieces_;
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    pieces[i].slope = std::max(pieces[i].slope, pieces[i - 1].slope);
  }
  std::optional<double> below;
  if (!below_forbidden_) below = std::min(below_slope_, pieces.front().slope);
  return PiecewiseLinearCost(below, std::move(pieces));
}

bool PiecewiseLinearCost::operator==(const PiecewiseLinearCost& other) const {
  if (below_forbidden_ != other.below_forbidden_) return false;
  if (!below_forbidden_ && below_slope_ != other.below_slope_) return false;
  if (pieces_.size() != other.pieces_.size()) return false;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].start_kw != other.pieces_[i].start_kw ||
        pieces_[i].slope != other.pieces_[i].slope) {
      return false;
    }
  }
  return true;
}

namespace {

std::vector<std::uint32_t> identity_index(std::size_t n) {
  std::vector<std::uint32_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::uint32_t>(i);
  return idx;
}

}  // namespace

Tariff::Tariff(double step_seconds,
               std::vector<PiecewiseLinearCost> power_by_step,
               std::vector<PiecewiseLinearCost> heat_by_step)
    : step_seconds_(step_seconds),
      power_functions_(std::move(power_by_step)),
      power_index_(identity_index(power_functions_.size())),
      heat_functions_(std::move(heat_by_step)),
      heat_index_(identity_index(heat_functions_.size())) {
  check_and_cache();
}

Tariff::Tariff(double step_seconds,
               std::vector<PiecewiseLinearCost> power_functions,
               std::vector<std::uint32_t> power_index,
               std::vector<PiecewiseLinearCost> heat_functions,
               std::vector<std::uint32_t> heat_index)
    : step_seconds_(step_seconds),
      power_functions_(std::move(power_functions)),
      power_index_(std::move(power_index)),
      heat_functions_(std::move(heat_functions)),
      heat_index_(std::move(heat_index)) {
  check_and_cache();
}

void Tariff::check_and_cache() {
  if (!(step_seconds_ > 0.0)) {
    throw std::invalid_argument("tariff: step_seconds must be positive");
  }
  if (power_index_.size() != heat_index_.size()) {
    throw std::invalid_argument("tariff: power and heat horizons differ");
  }
  for (auto i : power_index_) {
    if (i >= power_functions_.size()) {
      throw std::invalid_argument("tariff: power index out of range");
    }
  }
  for (auto i : heat_index_) {
    if (i >= heat_functions_.size()) {
      throw std::invalid_argument("tariff: heat index out of range");
    }
  }
  auto decreasing = [](const PiecewiseLinearCost& f) {
    return !f.is_non_decreasing();
  };
  if (std::any_of(power_functions_.begin(), power_functions_.end(),
                  decreasing) ||
      std::any_of(heat_functions_.begin(), heat_functions_.end(), decreasing)) {
    throw std::invalid_argument(
        "tariff: cost functions must be non-decreasing (no negative slopes)");
  }
  for (const auto& f : heat_functions_) {
    if (f.forbids_negative() || f.below_zero_slope() != 0.0) {
      throw std::invalid_argument(
          "tariff: heat cost must be zero for non-positive purchases");
    }
  }
  convex_ = std::all_of(power_functions_.begin(), power_functions_.end(),
                        [](const auto& f) { return f.is_convex(); }) &&
            std::all_of(heat_functions_.begin(), heat_functions_.end(),
                        [](const auto& f) { return f.is_convex(); });
}

Tariff Tariff::convexified() const {
  std::vector<PiecewiseLinearCost> power;
  std::vector<PiecewiseLinearCost> heat;
  for (const auto& f : power_functions_) power.push_back(f.convex_majorant());
  for (const auto& f : heat_functions_) heat.push_back(f.convex_majorant());
  return Tariff(step_seconds_, std::move(power), power_index_, std::move(heat),
                heat_index_);
}

double eval_power_cost(const Tariff& tariff, std::size_t t, double x_kw) {
  if (t >= tariff.horizon()) {
    throw std::out_of_range("eval_power_cost: step " + std::to_string(t) +
                            " outside horizon " +
                            std::to_string(tariff.horizon()));
  }
  return tariff.power_at(t)(x_kw);
}

double eval_heat_cost(const Tariff& tariff, std::size_t t, double x_kw) {
  if (t >= tariff.horizon()) {
    throw std::out_of_range("eval_heat_cost: step " + std::to_string(t) +
                            " outside horizon " +
                            std::to_string(tariff.horizon()));
  }
  return tariff.heat_at(t)(x_kw);
}

namespace {

template <class Pred>
void scan_steps(const Tariff& tariff, Pred bad, const char* detail,
                std::vector<TariffIssue>& out) {
  std::vector<char> power_bad(tariff.power_functions().size());
  std::vector<char> heat_bad(tariff.heat_functions().size());
  for (std::size_t i = 0; i < power_bad.size(); ++i) {
    power_bad[i] = bad(tariff.power_functions()[i]);
  }
  for (std::size_t i = 0; i < heat_bad.size(); ++i) {
    heat_bad[i] = bad(tariff.heat_functions()[i]);
  }
  for (std::size_t t = 0; t < tariff.horizon(); ++t) {
    if (power_bad[tariff.power_index()[t]]) {
      out.push_back({t, Commodity::kPower, detail});
    }
    if (heat_bad[tariff.heat_index()[t]]) {
      out.push_back({t, Commodity::kHeat, detail});
    }
  }
}

}  // namespace

std::vector<TariffIssue> check_convexity(const Tariff& tariff) {
  std::vector<TariffIssue> out;
  scan_steps(
      tariff, [](const PiecewiseLinearCost& f) { return !f.is_convex(); },
      "slope sequence decreases", out);
  return out;
}

namespace {

PiecewiseLinearCost make_function(double base_per_kwh,
                                  std::vector<TariffSpec::Tier> tiers,
                                  std::optional<double> below_per_kwh,
                                  double kwh_per_kw_step) {
  std::sort(tiers.begin(), tiers.end(),
            [](const auto& a, const auto& b) { return a.above_kw < b.above_kw; });
  std::vector<PiecewiseLinearCost::Piece> pieces{
      {0.0, base_per_kwh * kwh_per_kw_step}};
  for (const auto& tier : tiers) {
    if (!(tier.above_kw > 0.0)) {
      throw InvariantError("tariff: tier threshold must be > 0 kW");
    }
    pieces.push_back({tier.above_kw, tier.buy_per_kwh * kwh_per_kw_step});
  }
  std::optional<double> below;
  if (below_per_kwh) below = *below_per_kwh * kwh_per_kw_step;
  try {
    return PiecewiseLinearCost(below, std::move(pieces));
  } catch (const std::invalid_argument& e) {
    throw InvariantError(std::string("tariff: ") + e.what());
  }
}

std::uint32_t intern(std::vector<PiecewiseLinearCost>& pool,
                     PiecewiseLinearCost f) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (pool[i] == f) return static_cast<std::uint32_t>(i);
  }
  pool.push_back(std::move(f));
  return static_cast<std::uint32_t>(pool.size() - 1);
}

}  // namespace

Tariff compile_tariff(const TariffSpec& spec) {
  if (!(spec.step_seconds > 0.0)) {
    throw InvariantError("tariff: step_seconds must be positive");
  }
  if (spec.horizon_steps == 0) {
    throw InvariantError("tariff: horizon_steps must be positive");
  }
  const double kwh_per_kw_step = spec.step_seconds / 3600.0;

  auto segments = spec.power;
  std::sort(segments.begin(), segments.end(),
            [](const auto& a, const auto& b) { return a.from_step < b.from_step; });
  std::size_t covered = 0;
  for (const auto& seg : segments) {
    if (seg.from_step != covered || seg.to_step <= seg.from_step) {
      throw InvariantError(
          "tariff: power segments must tile [0, horizon_steps) without gaps "
          "or overlaps (problem at step " +
          std::to_string(covered) + ")");
    }
    covered = seg.to_step;
  }
  if (covered != spec.horizon_steps) {
    throw InvariantError("tariff: power segments cover " +
                         std::to_string(covered) + " of " +
                         std::to_string(spec.horizon_steps) + " steps");
  }

  std::vector<PiecewiseLinearCost> power_pool;
  std::vector<std::uint32_t> power_index(spec.horizon_steps);
  for (const auto& seg : segments) {
    const auto id = intern(power_pool,
                           make_function(seg.buy_per_kwh, seg.tiers,
                                         seg.sell_per_kwh, kwh_per_kw_step));
    std::fill(power_index.begin() + seg.from_step,
              power_index.begin() + seg.to_step, id);
  }
  std::vector<PiecewiseLinearCost> heat_pool{make_function(
      spec.heat_buy_per_kwh, spec.heat_tiers, 0.0, kwh_per_kw_step)};
  std::vector<std::uint32_t> heat_index(spec.horizon_steps, 0);
  try {
    return Tariff(spec.step_seconds, std::move(power_pool),
                  std::move(power_index), std::move(heat_pool),
                  std::move(heat_index));
  } catch (const std::invalid_argument& e) {
    throw InvariantError(e.what());
  }
}

TariffSpec tou_tariff_spec(const TouConfig& config) {
  if (!(config.step_seconds > 0.0) || config.horizon_steps == 0) {
    throw InvariantError("tou tariff: step_seconds and horizon must be > 0");
  }
  if (!(config.peak_start_hour >= 0.0) || !(config.peak_end_hour <= 24.0) ||
      !(config.peak_start_hour < config.peak_end_hour)) {
    throw InvariantError(
        "tou tariff: peak window must satisfy 0 <= start < end <= 24");
  }
  if (!(config.gas_kwh_per_kg > 0.0) || !(config.boiler_efficiency > 0.0)) {
    throw InvariantError("tou tariff: gas conversion factors must be > 0");
  }

  const double peak_begin = config.peak_start_hour * 3600.0;
  const double peak_end = config.peak_end_hour * 3600.0;
  auto is_peak = [&](std::size_t k) {
    const double tod = std::fmod(double(k) * config.step_seconds, 86400.0);
    return tod >= peak_begin && tod < peak_end;
  };

  TariffSpec spec;
  spec.step_seconds = config.step_seconds;
  spec.horizon_steps = config.horizon_steps;
  std::size_t begin = 0;
  while (begin < config.horizon_steps) {
    const bool peak = is_peak(begin);
    std::size_t end = begin + 1;
    while (end < config.horizon_steps && is_peak(end) == peak) ++end;
    const double rate = peak ? config.peak_per_kwh : config.offpeak_per_kwh;
    TariffSpec::PowerSegment seg;
    seg.from_step = begin;
    seg.to_step = end;
    seg.buy_per_kwh = rate;
    if (config.sell_at_buy_rate) seg.sell_per_kwh = rate;
    spec.power.push_back(seg);
    begin = end;
  }
  spec.heat_buy_per_kwh = config.gas_price_per_kg /
                          (config.gas_kwh_per_kg * config.boiler_efficiency);
  return spec;
}

Tariff tou_tariff(const TouConfig& config) {
  return compile_tariff(tou_tariff_spec(config));
}

}  // namespace rdispatch
