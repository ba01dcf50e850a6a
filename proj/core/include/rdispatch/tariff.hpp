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

#ifndef RDISPATCH_TARIFF_HPP_
#define RDISPATCH_TARIFF_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace rdispatch {

inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

// Piecewise-linear cost of a purchased quantity x (kW held for one step).
// For x >= 0 the slope of piece i applies on [start_i, start_{i+1}); for
// x < 0 a single `below_zero_slope` applies, or the cost is +inf when
// negative quantities are forbidden. Slopes are in currency per kW-step.
class PiecewiseLinearCost {
 public:
  struct Piece {
    double start_kw;  // first piece must start at 0
    double slope;
  };

  PiecewiseLinearCost() : PiecewiseLinearCost(linear(0.0, 0.0)) {}
  PiecewiseLinearCost(std::optional<double> below_zero_slope,
                      std::vector<Piece> pieces);

  static PiecewiseLinearCost linear(double slope,
                                    std::optional<double> below_zero_slope);

  double operator()(double x) const {
    if (x < 0.0) return below_forbidden_ ? kInfiniteCost : below_slope_ * x;
    if (pieces_.size() == 1) return pieces_[0].slope * x;
    std::size_t i = pieces_.size() - 1;
    while (x < pieces_[i].start_kw) --i;
    return cumulative_[i] + pieces_[i].slope * (x - pieces_[i].start_kw);
  }

  bool forbids_negative() const { return below_forbidden_; }
  double below_zero_slope() const { return below_slope_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  // Slopes never decrease left to right (below-zero slope included).
  bool is_convex() const;
  bool is_non_decreasing() const;

  // Smallest convex function with the same value at 0 whose slopes dominate
  // the original ones to the right (running maximum) and are dominated to
  // the left. It never underestimates the original cost.
  PiecewiseLinearCost convex_majorant() const;

  bool operator==(const PiecewiseLinearCost& other) const;

 private:
  double below_slope_ = 0.0;
  bool below_forbidden_ = false;
  std::vector<Piece> pieces_;
  std::vector<double> cumulative_;  // cost at each piece start
};

enum class Commodity { kPower, kHeat };

// Time-indexed utility costs over a horizon of steps [0, horizon). Steps
// share function objects through an index table, so a day-long horizon with
// two rate periods stores two functions. Every function must be
// non-decreasing and heat must cost nothing below zero; convexity is
// optional and reported by is_convex().
class Tariff {
 public:
  Tariff() = default;
  // One power and one heat function per step.
  Tariff(double step_seconds, std::vector<PiecewiseLinearCost> power_by_step,
         std::vector<PiecewiseLinearCost> heat_by_step);
  // Shared functions with explicit per-step indices.
  Tariff(double step_seconds, std::vector<PiecewiseLinearCost> power_functions,
         std::vector<std::uint32_t> power_index,
         std::vector<PiecewiseLinearCost> heat_functions,
         std::vector<std::uint32_t> heat_index);

  std::size_t horizon() const { return power_index_.size(); }
  double step_seconds() const { return step_seconds_; }

  // Unchecked per-step access for inner loops.
  const PiecewiseLinearCost& power_at(std::size_t t) const {
    return power_functions_[power_index_[t]];
  }
  const PiecewiseLinearCost& heat_at(std::size_t t) const {
    return heat_functions_[heat_index_[t]];
  }

  bool is_convex() const { return convex_; }

  // Same tariff with every function replaced by its convex majorant.
  Tariff convexified() const;

  const std::vector<PiecewiseLinearCost>& power_functions() const {
    return power_functions_;
  }
  const std::vector<PiecewiseLinearCost>& heat_functions() const {
    return heat_functions_;
  }
  const std::vector<std::uint32_t>& power_index() const { return power_index_; }
  const std::vector<std::uint32_t>& heat_index() const { return heat_index_; }

 private:
  void check_and_cache();

  double step_seconds_ = 15.0;
  std::vector<PiecewiseLinearCost> power_functions_;
  std::vector<std::uint32_t> power_index_;
  std::vector<PiecewiseLinearCost> heat_functions_;
  std::vector<std::uint32_t> heat_index_;
  bool convex_ = true;
};

// Throws std::out_of_range when t >= horizon.
double eval_power_cost(const Tariff& tariff, std::size_t t, double x_kw);
double eval_heat_cost(const Tariff& tariff, std::size_t t, double x_kw);

struct TariffIssue {
  std::size_t step;
  Commodity commodity;
  std::string detail;
};

// One entry per (step, commodity) whose slope sequence decreases.
std::vector<TariffIssue> check_convexity(const Tariff& tariff);

// File-level tariff description; rates are per kWh and are converted to
// per kW-step slopes with rate * step_seconds / 3600.
struct TariffSpec {
  struct Tier {
    double above_kw;
    double buy_per_kwh;
  };
  struct PowerSegment {
    std::size_t from_step = 0;  // half-open [from_step, to_step)
    std::size_t to_step = 0;
    double buy_per_kwh = 0.0;
    std::optional<double> sell_per_kwh;  // nullopt: selling forbidden
    std::vector<Tier> tiers;             // extra buy tiers above `above_kw`
  };
  double step_seconds = 15.0;
  std::size_t horizon_steps = 0;
  std::vector<PowerSegment> power;
  double heat_buy_per_kwh = 0.0;
  std::vector<Tier> heat_tiers;
};

// Throws InvariantError when the power segments do not tile the horizon.
Tariff compile_tariff(const TariffSpec& spec);

// Time-of-use configuration: one peak window per day, flat heat price.
struct TouConfig {
  double step_seconds = 15.0;
  std::size_t horizon_steps = 5760;
  double peak_start_hour = 10.0;
  double peak_end_hour = 20.0;
  double peak_per_kwh = 0.0;
  double offpeak_per_kwh = 0.0;
  bool sell_at_buy_rate = true;  // otherwise selling is forbidden
  std::string season = "winter";
  // Heat bought from the utility is priced as boiler gas:
  // gas_price_per_kg / (gas_kwh_per_kg * boiler_efficiency).
  double gas_price_per_kg = 0.95;
  double gas_kwh_per_kg = 13.1;
  double boiler_efficiency = 1.0;
};

TariffSpec tou_tariff_spec(const TouConfig& config);
Tariff tou_tariff(const TouConfig& config);

}  // namespace rdispatch

#endif  // RDISPATCH_TARIFF_HPP_
