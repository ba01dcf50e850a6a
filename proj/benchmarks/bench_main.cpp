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

#include <benchmark/benchmark.h>

#include <memory>

#include "rdispatch/demand.hpp"
#include "rdispatch/dispatch_graph.hpp"
#include "rdispatch/robust.hpp"
#include "rdispatch/tariff.hpp"

namespace rdispatch {
namespace {

struct Fixture {
  std::shared_ptr<const IndexedModel> model;
  Tariff tariff;
  Forecast forecast;
  std::unique_ptr<DispatchGraph> graph;
};

Fixture make_fixture(int speeds, int valves, std::size_t horizon) {
  Fixture f;
  f.model = std::make_shared<const IndexedModel>(synth_c65_like(speeds, valves));
  TouConfig tou;
  tou.step_seconds = f.model->step_seconds();
  tou.horizon_steps = horizon;
  tou.peak_per_kwh = 0.20;
  tou.offpeak_per_kwh = 0.10;
  f.tariff = tou_tariff(tou);
  SyntheticDayConfig days;
  days.steps = horizon;
  days.step_seconds = f.model->step_seconds();
  f.forecast = forecast_from_history(synth_days(days, 14, 7));
  f.graph = std::make_unique<DispatchGraph>(f.model, horizon);
  return f;
}

void BM_BuildGraph(benchmark::State& state) {
  const auto model = std::make_shared<const IndexedModel>(synth_c65_like(10, 10));
  const auto horizon = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    DispatchGraph g(model, horizon);
    benchmark::DoNotOptimize(g.num_edges());
  }
}
BENCHMARK(BM_BuildGraph)->Arg(360)->Arg(720)->Arg(1440)->Unit(benchmark::kMillisecond);

void BM_Nominal(benchmark::State& state) {
  const Fixture f = make_fixture(10, 10, static_cast<std::size_t>(state.range(0)));
  const DemandProfile mean = f.forecast.mean();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_nominal(*f.graph, mean, f.tariff).worst_case_cost);
  }
  state.counters["edges"] = static_cast<double>(f.graph->num_edges());
}
BENCHMARK(BM_Nominal)->Arg(360)->Arg(720)->Arg(1440)->Unit(benchmark::kMillisecond);

void BM_Box(benchmark::State& state) {
  const Fixture f = make_fixture(10, 10, static_cast<std::size_t>(state.range(0)));
  const BoxSet set = box_set(f.forecast, 0.13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_box(*f.graph, set, f.tariff).worst_case_cost);
  }
}
BENCHMARK(BM_Box)->Arg(360)->Arg(720)->Arg(1440)->Unit(benchmark::kMillisecond);

void BM_EdgeCosts(benchmark::State& state) {
  const Fixture f = make_fixture(10, 10, static_cast<std::size_t>(state.range(0)));
  const MixedSet set = mixed_set(f.forecast, 0.03, 40.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_edge_costs(*f.graph, set, f.tariff).bias.data());
  }
}
BENCHMARK(BM_EdgeCosts)->Arg(360)->Arg(720)->Unit(benchmark::kMillisecond);

void BM_MixedAddGrid(benchmark::State& state) {
  const Fixture f = make_fixture(10, 10, 720);
  const MixedSet set = mixed_set(f.forecast, 0.03, 40.0);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_mixed_additive_grid(*f.graph, set, f.tariff, n).worst_case_cost);
  }
}
BENCHMARK(BM_MixedAddGrid)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_MixedMul(benchmark::State& state) {
  const Fixture f = make_fixture(10, 10, 720);
  const MixedSet set = mixed_set(f.forecast, 0.03, 40.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_mixed_multiplicative(*f.graph, set, f.tariff, 0.5).worst_case_cost);
  }
}
BENCHMARK(BM_MixedMul)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rdispatch

BENCHMARK_MAIN();
