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

#include <gtest/gtest.h>

#include <cmath>

#include "rdispatch/errors.hpp"
#include "rdispatch/tariff.hpp"
#include "support/random_instances.hpp"

namespace rdispatch {
namespace {

using testing::flat_tariff;

TEST(EvalPowerCost, Linear) {
  const Tariff t = flat_tariff(4, 0.5, std::nullopt, 0.1);
  EXPECT_DOUBLE_EQ(eval_power_cost(t, 0, 4.0), 2.0);
}

TEST(EvalPowerCost, SellAtBuyRate) {
  const Tariff t = flat_tariff(4, 0.5, 0.5, 0.1);
  EXPECT_DOUBLE_EQ(eval_power_cost(t, 1, -4.0), -2.0);
}

TEST(EvalPowerCost, SellForbidden) {
  const Tariff t = flat_tariff(4, 0.5, std::nullopt, 0.1);
  EXPECT_EQ(eval_power_cost(t, 2, -1.0), kInfiniteCost);
  EXPECT_EQ(eval_power_cost(t, 2, 0.0), 0.0);
}

TEST(EvalPowerCost, StepOutOfRange) {
  const Tariff t = flat_tariff(4, 0.5, std::nullopt, 0.1);
  EXPECT_THROW(eval_power_cost(t, 4, 1.0), std::out_of_range);
  EXPECT_THROW(eval_heat_cost(t, 4, 1.0), std::out_of_range);
}

TEST(EvalHeatCost, Examples) {
  const Tariff t = flat_tariff(3, 0.5, std::nullopt, 0.1);
  EXPECT_DOUBLE_EQ(eval_heat_cost(t, 0, 10.0), 1.0);
  EXPECT_EQ(eval_heat_cost(t, 0, -5.0), 0.0);
  EXPECT_EQ(eval_heat_cost(t, 0, 0.0), 0.0);
}

TEST(PiecewiseLinearCost, MultiPieceValues) {
  const PiecewiseLinearCost f(0.1, {{0.0, 0.3}, {5.0, 0.5}, {8.0, 1.0}});
  EXPECT_DOUBLE_EQ(f(2.0), 0.6);
  EXPECT_DOUBLE_EQ(f(5.0), 1.5);
  EXPECT_DOUBLE_EQ(f(7.0), 2.5);
  EXPECT_DOUBLE_EQ(f(10.0), 1.5 + 1.5 + 2.0);
  EXPECT_DOUBLE_EQ(f(-3.0), -0.3);
}

TEST(PiecewiseLinearCost, RejectsBadPieces) {
  EXPECT_THROW(PiecewiseLinearCost(0.0, {}), std::invalid_argument);
  EXPECT_THROW(PiecewiseLinearCost(0.0, {{1.0, 0.3}}), std::invalid_argument);
  EXPECT_THROW(PiecewiseLinearCost(0.0, {{0.0, 0.3}, {0.0, 0.4}}),
               std::invalid_argument);
}

Tariff two_piece(double s1, double s2, std::optional<double> sell) {
  std::vector<PiecewiseLinearCost> p{PiecewiseLinearCost(sell, {{0.0, s1}, {4.0, s2}})};
  std::vector<PiecewiseLinearCost> h{PiecewiseLinearCost::linear(0.1, 0.0)};
  return Tariff(15.0, p, h);
}

TEST(CheckConvexity, IncreasingSlopesAreConvex) {
  const Tariff t = two_piece(0.3, 0.5, std::nullopt);
  EXPECT_TRUE(t.is_convex());
  EXPECT_TRUE(check_convexity(t).empty());
}

TEST(CheckConvexity, DecreasingSlopesFlagged) {
  const Tariff t = two_piece(0.5, 0.3, std::nullopt);
  EXPECT_FALSE(t.is_convex());
  const auto issues = check_convexity(t);
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].step, 0u);
  EXPECT_EQ(issues[0].commodity, Commodity::kPower);
}

TEST(CheckConvexity, SellAboveBuyFlagged) {
  std::vector<PiecewiseLinearCost> p{PiecewiseLinearCost::linear(0.3, 0.5)};
  std::vector<PiecewiseLinearCost> h{PiecewiseLinearCost::linear(0.1, 0.0)};
  const Tariff t(15.0, p, h);
  EXPECT_EQ(check_convexity(t).size(), 1u);
}

TEST(CheckConvexity, ReportsEveryAffectedStep) {
  TariffSpec spec;
  spec.step_seconds = 3600;
  spec.horizon_steps = 6;
  spec.power = {{0, 2, 0.3, 0.1, {}},
                {2, 5, 0.5, 0.2, {{5.0, 0.3}}},
                {5, 6, 0.3, 0.1, {}}};
  spec.heat_buy_per_kwh = 0.1;
  const auto issues = check_convexity(compile_tariff(spec));
  ASSERT_EQ(issues.size(), 3u);
  EXPECT_EQ(issues[0].step, 2u);
  EXPECT_EQ(issues[2].step, 4u);
}

TEST(Tariff, RejectsDecreasingFunction) {
  std::vector<PiecewiseLinearCost> p{PiecewiseLinearCost::linear(-0.1, 0.0)};
  std::vector<PiecewiseLinearCost> h{PiecewiseLinearCost::linear(0.1, 0.0)};
  EXPECT_THROW(Tariff(15.0, p, h), std::invalid_argument);
}

TEST(Tariff, HeatMustBeFreeBelowZero) {
  std::vector<PiecewiseLinearCost> p{PiecewiseLinearCost::linear(0.1, 0.0)};
  std::vector<PiecewiseLinearCost> h{PiecewiseLinearCost::linear(0.1, 0.05)};
  EXPECT_THROW(Tariff(15.0, p, h), std::invalid_argument);
  std::vector<PiecewiseLinearCost> h2{PiecewiseLinearCost::linear(0.1, std::nullopt)};
  EXPECT_THROW(Tariff(15.0, p, h2), std::invalid_argument);
}

TEST(Tariff, ConvexifiedDominatesAndIsConvex) {
  testing::Rng rng(5);
  testing::InstanceConfig cfg;
  cfg.convex = false;
  for (int k = 0; k < 50; ++k) {
    const testing::RawTariff raw = testing::random_raw_tariff(rng, 3, cfg);
    const Tariff t = testing::to_tariff(raw);
    const Tariff c = t.convexified();
    EXPECT_TRUE(c.is_convex());
    for (std::size_t s = 0; s < 3; ++s) {
      for (double x = -10.0; x <= 40.0; x += 0.37) {
        EXPECT_GE(c.power_at(s)(x), t.power_at(s)(x) - 1e-12);
        EXPECT_GE(c.heat_at(s)(x), t.heat_at(s)(x) - 1e-12);
      }
    }
  }
}

TEST(Tariff, ConvexifyKeepsConvexFunctions) {
  const Tariff t = two_piece(0.3, 0.5, 0.2);
  const Tariff c = t.convexified();
  EXPECT_TRUE(c.power_at(0) == t.power_at(0));
}

TEST(CompileTariff, ConvertsRatesPerStep) {
  TariffSpec spec;
  spec.step_seconds = 900;  // quarter hour
  spec.horizon_steps = 4;
  spec.power = {{0, 4, 0.2, std::nullopt, {}}};
  spec.heat_buy_per_kwh = 0.08;
  const Tariff t = compile_tariff(spec);
  EXPECT_DOUBLE_EQ(eval_power_cost(t, 3, 10.0), 0.2 * 10.0 * 0.25);
  EXPECT_DOUBLE_EQ(eval_heat_cost(t, 3, 10.0), 0.08 * 10.0 * 0.25);
  EXPECT_EQ(eval_power_cost(t, 0, -1.0), kInfiniteCost);
  EXPECT_EQ(t.power_functions().size(), 1u);
}

TEST(CompileTariff, RejectsGapsAndOverlaps) {
  TariffSpec spec;
  spec.step_seconds = 900;
  spec.horizon_steps = 4;
  spec.heat_buy_per_kwh = 0.08;
  spec.power = {{0, 2, 0.2, std::nullopt, {}}, {3, 4, 0.2, std::nullopt, {}}};
  EXPECT_THROW(compile_tariff(spec), InvariantError);
  spec.power = {{0, 3, 0.2, std::nullopt, {}}, {2, 4, 0.2, std::nullopt, {}}};
  EXPECT_THROW(compile_tariff(spec), InvariantError);
  spec.power = {{0, 3, 0.2, std::nullopt, {}}};
  EXPECT_THROW(compile_tariff(spec), InvariantError);
  spec.power = {{0, 4, -0.2, std::nullopt, {}}};
  EXPECT_THROW(compile_tariff(spec), InvariantError);
}

TEST(TouTariff, PeakWindowAtQuarterMinuteSteps) {
  TouConfig cfg;
  cfg.step_seconds = 15.0;
  cfg.horizon_steps = 5760;
  cfg.peak_per_kwh = 0.30;
  cfg.offpeak_per_kwh = 0.10;
  const Tariff t = tou_tariff(cfg);
  const double k = 15.0 / 3600.0;
  EXPECT_DOUBLE_EQ(eval_power_cost(t, 2400, 1.0), 0.30 * k);  // 10:00
  EXPECT_DOUBLE_EQ(eval_power_cost(t, 2399, 1.0), 0.10 * k);  // 09:59:45
  EXPECT_DOUBLE_EQ(eval_power_cost(t, 4799, 1.0), 0.30 * k);  // 19:59:45
  EXPECT_DOUBLE_EQ(eval_power_cost(t, 4800, 1.0), 0.10 * k);  // 20:00
  EXPECT_DOUBLE_EQ(eval_power_cost(t, 2400, -1.0), -0.30 * k);
}

TEST(TouTariff, EqualRatesGiveConstantTariff) {
  TouConfig cfg;
  cfg.horizon_steps = 5760;
  cfg.peak_per_kwh = 0.2;
  cfg.offpeak_per_kwh = 0.2;
  const Tariff t = tou_tariff(cfg);
  EXPECT_EQ(t.power_functions().size(), 1u);
  for (std::size_t s = 0; s < t.horizon(); s += 97) {
    EXPECT_EQ(eval_power_cost(t, s, 3.0), eval_power_cost(t, 0, 3.0));
  }
}

TEST(TouTariff, GasPriceGivesConstantHeatSlope) {
  TouConfig cfg;
  cfg.step_seconds = 3600.0;
  cfg.horizon_steps = 24;
  cfg.peak_per_kwh = 0.3;
  cfg.offpeak_per_kwh = 0.1;
  cfg.gas_price_per_kg = 0.95;
  cfg.gas_kwh_per_kg = 13.1;
  const Tariff t = tou_tariff(cfg);
  const double slope = 0.95 / 13.1;
  for (std::size_t s = 0; s < 24; ++s) {
    EXPECT_DOUBLE_EQ(eval_heat_cost(t, s, 1.0), slope);
  }
}

TEST(TouTariff, MalformedWindow) {
  TouConfig cfg;
  cfg.peak_start_hour = 20;
  cfg.peak_end_hour = 10;
  EXPECT_THROW(tou_tariff(cfg), InvariantError);
  cfg.peak_start_hour = 10;
  cfg.peak_end_hour = 25;
  EXPECT_THROW(tou_tariff(cfg), InvariantError);
}

TEST(TouTariff, SellForbiddenOption) {
  TouConfig cfg;
  cfg.horizon_steps = 8;
  cfg.peak_per_kwh = 0.3;
  cfg.offpeak_per_kwh = 0.1;
  cfg.sell_at_buy_rate = false;
  EXPECT_EQ(eval_power_cost(tou_tariff(cfg), 0, -1.0), kInfiniteCost);
}

// Randomized: costs never decrease in the purchased amount on the finite
// domain.
TEST(TariffProperty, MonotoneInPurchase) {
  testing::Rng rng(17);
  testing::InstanceConfig cfg;
  for (int k = 0; k < 200; ++k) {
    const Tariff t = testing::to_tariff(testing::random_raw_tariff(rng, 2, cfg));
    for (int i = 0; i < 25; ++i) {
      double a = testing::uniform(rng, -20.0, 40.0);
      double b = testing::uniform(rng, -20.0, 40.0);
      if (a > b) std::swap(a, b);
      for (std::size_t s = 0; s < 2; ++s) {
        if (std::isfinite(eval_power_cost(t, s, a))) {
          EXPECT_LE(eval_power_cost(t, s, a), eval_power_cost(t, s, b));
        }
        EXPECT_LE(eval_heat_cost(t, s, a), eval_heat_cost(t, s, b));
      }
    }
  }
}

// The library evaluation agrees with a direct integration of the slopes.
TEST(TariffProperty, MatchesIndependentEvaluation) {
  testing::Rng rng(23);
  testing::InstanceConfig cfg;
  cfg.convex = false;
  for (int k = 0; k < 100; ++k) {
    const auto raw = testing::random_raw_tariff(rng, 1, cfg);
    const Tariff t = testing::to_tariff(raw);
    for (int i = 0; i < 20; ++i) {
      const double x = testing::uniform(rng, -10.0, 40.0);
      const double want = testing::eval_raw(raw.power[0], x);
      const double got = eval_power_cost(t, 0, x);
      if (std::isinf(want)) {
        EXPECT_EQ(got, want);
      } else {
        EXPECT_NEAR(got, want, 1e-12 * std::max(1.0, std::abs(want)));
      }
    }
  }
}

}  // namespace
}  // namespace rdispatch
