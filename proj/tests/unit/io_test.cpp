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

#include <filesystem>
#include <random>

#include "rdispatch/errors.hpp"
#include "rdispatch/io.hpp"
#include "support/random_instances.hpp"

namespace rdispatch {
namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = RDISPATCH_FIXTURES;

fs::path temp_dir() {
  const fs::path p = fs::temp_directory_path() /
                     ("rdispatch_io_" + std::to_string(std::random_device{}()));
  fs::create_directories(p);
  return p;
}

TEST(ModelIo, ReadsFixture) {
  const TurbineModel m = read_model(kFixtures / "tiny_model.json");
  EXPECT_EQ(m.step_seconds, 3600.0);
  EXPECT_EQ(m.states, (std::vector<std::string>{"on", "off"}));
  ASSERT_EQ(m.transitions.size(), 4u);
  EXPECT_EQ(m.transitions[0].power_kw, 10.0);
  EXPECT_EQ(m.transitions[3].control, "start");
  EXPECT_TRUE(validate_model(m).empty());
}

TEST(ModelIo, RoundTripsSynthModel) {
  const TurbineModel m = synth_c65_like(4, 3);
  const TurbineModel back = parse_model_json(model_to_json(m));
  EXPECT_EQ(back.states, m.states);
  ASSERT_EQ(back.transitions.size(), m.transitions.size());
  for (std::size_t i = 0; i < m.transitions.size(); ++i) {
    const auto& a = m.transitions[i];
    const auto& b = back.transitions[i];
    EXPECT_EQ(a.from, b.from);
    EXPECT_EQ(a.to, b.to);
    EXPECT_EQ(a.control, b.control);
    EXPECT_EQ(a.duration_steps, b.duration_steps);
    EXPECT_EQ(a.power_kw, b.power_kw);
    EXPECT_EQ(a.heat_kw, b.heat_kw);
    EXPECT_EQ(a.op_cost, b.op_cost);
  }
}

TEST(ModelIo, Errors) {
  EXPECT_THROW(read_model(kFixtures / "broken.json"), ParseError);
  EXPECT_THROW(read_model(kFixtures / "does_not_exist.json"), ParseError);
  EXPECT_THROW(parse_model_json(R"({"states": ["a"], "transitions": []})"),
               ParseError);
  EXPECT_THROW(parse_model_json(R"({"step_seconds": 1, "states": ["a"],
                                    "transitions": {}})"),
               ParseError);
  EXPECT_THROW(parse_model_json(R"({"step_seconds": "x", "states": ["a"],
                                    "transitions": []})"),
               ParseError);
}

TEST(TariffIo, ReadsFixture) {
  const TariffSpec spec = read_tariff_spec(kFixtures / "tiny_tariff.json");
  EXPECT_EQ(spec.horizon_steps, 8u);
  ASSERT_EQ(spec.power.size(), 3u);
  EXPECT_EQ(spec.power[0].sell_per_kwh, 0.1);
  EXPECT_FALSE(spec.power[2].sell_per_kwh.has_value());
  const Tariff t = read_tariff(kFixtures / "tiny_tariff.json");
  EXPECT_EQ(t.horizon(), 8u);
  EXPECT_DOUBLE_EQ(eval_power_cost(t, 4, -2.0), -1.0);
  EXPECT_EQ(eval_power_cost(t, 7, -2.0), kInfiniteCost);
  EXPECT_DOUBLE_EQ(eval_heat_cost(t, 0, 10.0), 1.0);
}

TEST(TariffIo, TiersParsedAndFlagged) {
  const TariffSpec spec = read_tariff_spec(kFixtures / "bad_nonconvex_tariff.json");
  ASSERT_EQ(spec.power[0].tiers.size(), 1u);
  EXPECT_EQ(spec.power[0].tiers[0].above_kw, 5.0);
  const Tariff t = compile_tariff(spec);
  EXPECT_FALSE(t.is_convex());
  EXPECT_EQ(check_convexity(t).size(), 8u);
}

TEST(TariffIo, MissingSellMeansForbidden) {
  const TariffSpec spec = parse_tariff_json(R"({
    "step_seconds": 60, "horizon_steps": 2,
    "power": [{"from_step": 0, "to_step": 2, "buy_per_kwh": 0.2}],
    "heat": {"buy_per_kwh": 0.05}})");
  EXPECT_FALSE(spec.power[0].sell_per_kwh.has_value());
}

TEST(TariffIo, RoundTrip) {
  TouConfig cfg;
  cfg.horizon_steps = 96;
  cfg.step_seconds = 900;
  cfg.peak_per_kwh = 0.21;
  cfg.offpeak_per_kwh = 0.07;
  TariffSpec spec = tou_tariff_spec(cfg);
  spec.power[0].tiers.push_back({30.0, 0.4});
  spec.heat_tiers.push_back({50.0, 0.2});
  const TariffSpec back = parse_tariff_json(tariff_to_json(spec));
  EXPECT_EQ(tariff_to_json(back), tariff_to_json(spec));
  const Tariff a = compile_tariff(spec);
  const Tariff b = compile_tariff(back);
  for (std::size_t t = 0; t < 96; ++t) {
    EXPECT_EQ(eval_power_cost(a, t, 40.0), eval_power_cost(b, t, 40.0));
    EXPECT_EQ(eval_heat_cost(a, t, 60.0), eval_heat_cost(b, t, 60.0));
  }
}

TEST(TariffIo, Errors) {
  EXPECT_THROW(parse_tariff_json("{"), ParseError);
  EXPECT_THROW(parse_tariff_json(R"({"step_seconds": 60, "horizon_steps": 2,
    "power": [{"from_step": 0, "to_step": 2, "buy_per_kwh": 0.2,
               "sell_per_kwh": "sometimes"}],
    "heat": {"buy_per_kwh": 0.05}})"),
               ParseError);
  EXPECT_THROW(parse_tariff_json(R"({"step_seconds": 60, "horizon_steps": 2,
    "power": [{"from_step": 0, "to_step": 2, "buy_per_kwh": 0.2}]})"),
               ParseError);
}

TEST(DemandIo, ReadsFixture) {
  const DemandProfile d = read_demand(kFixtures / "tiny_demand.csv");
  ASSERT_EQ(d.size(), 8u);
  EXPECT_EQ(d.power_kw[3], 16.0);
  EXPECT_EQ(d.heat_kw[7], 24.0);
}

TEST(DemandIo, MissingRowNamed) {
  try {
    read_demand(kFixtures / "gap_demand.csv");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("expected t=3, got t=4"), std::string::npos) << msg;
    EXPECT_NE(msg.find("missing"), std::string::npos) << msg;
  }
}

TEST(DemandIo, Malformed) {
  EXPECT_THROW(parse_demand_csv(""), ParseError);
  EXPECT_THROW(parse_demand_csv("time,p,h\n0,1,1\n"), ParseError);
  EXPECT_THROW(parse_demand_csv("t,power_kw,heat_kw\n0,1\n"), ParseError);
  EXPECT_THROW(parse_demand_csv("t,power_kw,heat_kw\n0,abc,1\n"), ParseError);
  EXPECT_NO_THROW(parse_demand_csv("t,power_kw,heat_kw\r\n0,1,2\r\n\n"));
}

TEST(DemandIo, RoundTripIsBitExact) {
  testing::Rng rng(4);
  const DemandProfile d = testing::random_demand(rng, 50, 70, 200);
  EXPECT_EQ(parse_demand_csv(demand_to_csv(d)), d);
}

TEST(DemandIo, HistorySortedByName) {
  const auto days = read_history(kFixtures / "tiny_history");
  ASSERT_EQ(days.size(), 3u);
  const DemandProfile first = read_demand(kFixtures / "tiny_history" / "day01.csv");
  EXPECT_EQ(days[0], first);
  EXPECT_THROW(read_history(kFixtures / "tiny_model.json"), ParseError);
}

TEST(FileIo, WriteThenRead) {
  const fs::path dir = temp_dir();
  const TurbineModel m = cooldown_example();
  write_model(dir / "m.json", m);
  EXPECT_EQ(read_model(dir / "m.json").states, m.states);
  write_demand(dir / "d.csv", {{1.5, 2.0}, {0.25, 3.0}});
  EXPECT_EQ(read_demand(dir / "d.csv").heat_kw[0], 0.25);
  fs::remove_all(dir);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(3.0), "3");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace rdispatch
