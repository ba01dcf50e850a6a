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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "rdispatch/io.hpp"
#include "rdispatch/tariff.hpp"

namespace {

using namespace rdispatch;
using namespace rdispatch::cli;

void add_boundary(CLI::App* cmd, BoundaryOptions& b) {
  cmd->add_option("--initial-state", b.initial,
                  "Allowed initial state (repeatable; default any)");
  cmd->add_option("--final-state", b.final,
                  "Allowed final state (repeatable; default any)");
}

void add_set_params(CLI::App* cmd, SolverParams& p, unsigned& threads,
                    bool& no_dedup) {
  cmd->add_option("--alpha", p.box_alpha, "Box width in sigmas")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--alpha1", p.alpha1, "Mixed set box width in sigmas")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--alpha2", p.alpha2, "Mixed set spike budget mu1")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--eps", p.epsilon, "Additive grid step (currency)");
  cmd->add_option("--grid-n", p.grid_n,
                  "Additive grid with exactly N thresholds (default 30)");
  cmd->add_option("--mu", p.mu, "Multiplicative grid ratio");
  cmd->add_flag("--no-dedup", no_dedup, "Keep repeated exact thresholds");
  cmd->add_flag("--convexify", p.sweep.allow_convexify,
                "Use the convex majorant of a non-convex tariff");
  cmd->add_option("--threads", threads,
                  "Sweep workers (0 = all cores; capped by DISPATCH_THREADS)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust economic dispatch of a micro gas turbine"};
  app.require_subcommand(1);

  SolveOptions solve;
  unsigned solve_threads = 0;
  bool solve_no_dedup = false;
  auto* s = app.add_subcommand("solve", "Solve one dispatch instance");
  s->add_option("--model", solve.model, "Model JSON")->required();
  s->add_option("--tariff", solve.tariff, "Tariff JSON")->required();
  s->add_option("--demand", solve.demand,
                "Demand CSV (nominal input and evaluation demand)");
  s->add_option("--history", solve.history,
                "Directory of daily demand CSVs for the forecast");
  s->add_option("--algo", solve.algo,
                "nominal | box | mixed-exact | mixed-add | mixed-mul");
  add_set_params(s, solve.params, solve_threads, solve_no_dedup);
  add_boundary(s, solve.boundary);
  s->add_option("--schedule", solve.schedule_out, "Schedule CSV output");
  s->add_option("--report", solve.report_out, "Report JSON (default stdout)");
  s->add_option("--dump-edges", solve.edge_dump,
                "Write per-edge w_bias/w_spike (mixed algorithms)");
  s->add_flag("--omit-timing", solve.omit_timing,
              "Leave runtimes out of the report");

  CompareOptions compare;
  unsigned compare_threads = 0;
  bool compare_no_dedup = false;
  std::string compare_mixed = "mixed-add";
  auto* c = app.add_subcommand("compare",
                               "Benchmark, nominal, box and mixed schedules");
  c->add_option("--pack", compare.pack, "Scenario pack directory");
  c->add_option("--model", compare.model, "Model JSON");
  c->add_option("--tariff", compare.tariff, "Tariff JSON");
  c->add_option("--history", compare.history, "History directory");
  c->add_option("--realized", compare.realized, "Realized demand CSV");
  c->add_option("--mixed-algo", compare_mixed,
                "mixed-exact | mixed-add | mixed-mul (default mixed-add)");
  add_set_params(c, compare.params, compare_threads, compare_no_dedup);
  add_boundary(c, compare.boundary);
  c->add_option("--report", compare.report_out, "Report JSON output");
  c->add_flag("--omit-timing", compare.omit_timing,
              "Leave runtimes out of the report");

  BenchOptions bench;
  std::string bench_out;
  bool bench_strict = false;
  bool bench_no_mixed = false;
  auto* b = app.add_subcommand("bench", "Scaling sweeps and sanity checks");
  b->add_option("--horizons", bench.horizons, "Horizon sweep (steps)");
  b->add_option("--speeds", bench.speeds, "Speed levels for the horizon sweep");
  b->add_option("--valves", bench.valves, "Valve levels for the horizon sweep");
  b->add_option("--state-horizon", bench.state_sweep_horizon,
                "Horizon for the state-count sweep");
  b->add_option("--grid-n", bench.grid_n, "Mixed-add grid size");
  b->add_option("--repeats", bench.repeats, "Timing repeats (best of)");
  b->add_option("--threads", bench.threads, "Sweep workers");
  b->add_flag("--no-mixed", bench_no_mixed, "Skip the mixed-add timing");
  b->add_flag("--strict", bench_strict, "Exit 3 when a check fails");
  b->add_option("--report", bench_out, "Report JSON output");

  ValidateOptions validate;
  auto* v = app.add_subcommand("validate", "Check input files");
  v->add_option("--model", validate.model, "Model JSON");
  v->add_option("--tariff", validate.tariff, "Tariff JSON");
  v->add_option("--demand", validate.demands, "Demand CSV (repeatable)");
  v->add_option("--history", validate.history, "History directory");

  auto* g = app.add_subcommand("synth", "Generate synthetic inputs");
  g->require_subcommand(1);
  int gm_speeds = 30;
  int gm_valves = 50;
  double gm_step = 15.0;
  std::string gm_out;
  auto* gm = g->add_subcommand("model", "Synthetic C65-like turbine model");
  gm->add_option("--speeds", gm_speeds, "Speed levels");
  gm->add_option("--valves", gm_valves, "Valve levels");
  gm->add_option("--step-seconds", gm_step, "Step length");
  gm->add_option("--out", gm_out, "Output JSON")->required();

  TouConfig tou;
  std::string gt_out;
  bool gt_no_sell = false;
  auto* gt = g->add_subcommand("tariff", "Time-of-use tariff");
  gt->add_option("--step-seconds", tou.step_seconds, "Step length");
  gt->add_option("--horizon", tou.horizon_steps, "Horizon in steps");
  gt->add_option("--peak-start", tou.peak_start_hour, "Peak start hour");
  gt->add_option("--peak-end", tou.peak_end_hour, "Peak end hour");
  gt->add_option("--peak", tou.peak_per_kwh, "Peak $/kWh")->required();
  gt->add_option("--offpeak", tou.offpeak_per_kwh, "Off-peak $/kWh")->required();
  gt->add_option("--gas-price", tou.gas_price_per_kg, "Gas $/kg");
  gt->add_option("--gas-kwh-per-kg", tou.gas_kwh_per_kg, "Gas kWh per kg");
  gt->add_option("--boiler-efficiency", tou.boiler_efficiency,
                 "Boiler efficiency");
  gt->add_flag("--no-sell", gt_no_sell, "Forbid selling power");
  gt->add_option("--out", gt_out, "Output JSON")->required();

  SyntheticDayConfig days_cfg;
  std::size_t gd_days = 14;
  std::uint64_t gd_seed = 1;
  std::string gd_out;
  auto* gd = g->add_subcommand("days", "Synthetic daily demand profiles");
  gd->add_option("--season", days_cfg.season, "winter|spring|summer|autumn");
  gd->add_option("--steps", days_cfg.steps, "Steps per day");
  gd->add_option("--step-seconds", days_cfg.step_seconds, "Step length");
  gd->add_option("--days", gd_days, "Number of days");
  gd->add_option("--seed", gd_seed, "Random seed");
  gd->add_option("--out-dir", gd_out, "Output directory")->required();

  PackOptions pack;
  auto* gp = g->add_subcommand("pack", "Four-season synthetic case study");
  gp->add_option("--out", pack.out_dir, "Output directory")->required();
  gp->add_option("--speeds", pack.speeds, "Speed levels");
  gp->add_option("--valves", pack.valves, "Valve levels");
  gp->add_option("--step-seconds", pack.step_seconds, "Step length");
  gp->add_option("--steps", pack.steps, "Steps per day");
  gp->add_option("--history-days", pack.history_days, "History length");
  gp->add_option("--seed", pack.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  return guarded(
      [&]() -> int {
        if (*s) {
          solve.params.sweep.threads = sweep_threads(solve_threads);
          solve.params.sweep.dedup = !solve_no_dedup;
          return cmd_solve(solve, std::cout, std::cerr);
        }
        if (*c) {
          compare.params.sweep.threads = sweep_threads(compare_threads);
          compare.params.sweep.dedup = !compare_no_dedup;
          if (compare_mixed == "mixed-exact") {
            compare.params.mixed = Algorithm::kMixedExact;
          } else if (compare_mixed == "mixed-mul") {
            compare.params.mixed = Algorithm::kMixedMultiplicative;
          } else if (compare_mixed == "mixed-add") {
            compare.params.mixed = Algorithm::kMixedAdditive;
          } else {
            throw ParseError("unknown --mixed-algo '" + compare_mixed + "'");
          }
          return cmd_compare(compare, std::cout, std::cerr);
        }
        if (*b) {
          bench.threads = sweep_threads(bench.threads);
          bench.run_mixed = !bench_no_mixed;
          return cmd_bench(bench, bench_out, bench_strict, std::cout,
                           std::cerr);
        }
        if (*v) return cmd_validate(validate, std::cout, std::cerr);
        if (*gm) {
          SynthRanges r;
          r.step_seconds = gm_step;
          write_model(gm_out, synth_c65_like(gm_speeds, gm_valves, r));
          return kExitOk;
        }
        if (*gt) {
          tou.sell_at_buy_rate = !gt_no_sell;
          write_tariff(gt_out, tou_tariff_spec(tou));
          return kExitOk;
        }
        if (*gd) {
          std::filesystem::create_directories(gd_out);
          const auto days = synth_days(days_cfg, gd_days, gd_seed);
          for (std::size_t d = 0; d < days.size(); ++d) {
            char name[32];
            std::snprintf(name, sizeof name, "day%02zu.csv", d + 1);
            write_demand(std::filesystem::path(gd_out) / name, days[d]);
          }
          return kExitOk;
        }
        if (*gp) {
          write_synthetic_pack(pack);
          return kExitOk;
        }
        return kExitParse;
      },
      std::cerr);
}
