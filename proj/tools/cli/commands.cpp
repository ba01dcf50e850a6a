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

#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <thread>

#include "cli/schedule.hpp"
#include "json.hpp"
#include "rdispatch/errors.hpp"
#include "rdispatch/io.hpp"
#include "rdispatch/sp_core.hpp"

namespace rdispatch::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

json number_or_null(double v) {
  return std::isfinite(v) ? json(v) : json(nullptr);
}

StateSelection selection(const std::vector<std::string>& names) {
  return names.empty() ? StateSelection::all() : StateSelection::only(names);
}

Algorithm parse_algorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::kNominal, Algorithm::kBox,
                      Algorithm::kMixedExact, Algorithm::kMixedAdditive,
                      Algorithm::kMixedMultiplicative}) {
    if (to_string(a) == name) return a;
  }
  throw ParseError("unknown algorithm '" + name +
                   "' (nominal, box, mixed-exact, mixed-add, mixed-mul)");
}

std::string scenario_label(const ExtremeScenario& s) {
  std::string label(to_string(s.kind));
  if (s.kind == ScenarioKind::kPowerSpike ||
      s.kind == ScenarioKind::kHeatSpike) {
    label += "@" + std::to_string(s.step);
  }
  return label;
}

void require_profile(const DemandProfile& p, std::size_t steps,
                     const std::string& what) {
  const auto issues = check_profile(p, steps);
  if (issues.empty()) return;
  std::string msg = what + ":";
  for (const auto& i : issues) msg += " " + i + ";";
  throw InvariantError(msg);
}

void require_same_step(const IndexedModel& model, const Tariff& tariff) {
  if (model.step_seconds() != tariff.step_seconds()) {
    throw InvariantError("model step_seconds " +
                         format_double(model.step_seconds()) +
                         " differs from tariff step_seconds " +
                         format_double(tariff.step_seconds()));
  }
}

json params_json(Algorithm algo, const SolverParams& p) {
  json j;
  switch (algo) {
    case Algorithm::kBox:
      j["alpha"] = p.box_alpha;
      break;
    case Algorithm::kMixedExact:
      j["alpha1"] = p.alpha1;
      j["alpha2"] = p.alpha2;
      j["dedup"] = p.sweep.dedup;
      break;
    case Algorithm::kMixedAdditive:
      j["alpha1"] = p.alpha1;
      j["alpha2"] = p.alpha2;
      if (p.epsilon) {
        j["eps"] = *p.epsilon;
      } else {
        j["grid_n"] = p.grid_n;
      }
      break;
    case Algorithm::kMixedMultiplicative:
      j["alpha1"] = p.alpha1;
      j["alpha2"] = p.alpha2;
      j["mu"] = p.mu;
      break;
    default:
      j = json::object();
  }
  if (algo != Algorithm::kNominal && algo != Algorithm::kBox) {
    j["convexify"] = p.sweep.allow_convexify;
  }
  return j;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

}  // namespace

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvariantError& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::length_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvariant;
  }
}

unsigned sweep_threads(unsigned requested) {
  unsigned n = requested ? requested
                         : std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("DISPATCH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && *end == '\0' && v >= 1) {
      n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
  }
  return n;
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  const Algorithm algo = parse_algorithm(o.algo);
  const auto model = std::make_shared<const IndexedModel>(read_model(o.model));
  const Tariff tariff = read_tariff(o.tariff);
  require_same_step(*model, tariff);
  const std::size_t horizon = tariff.horizon();

  std::optional<DemandProfile> demand;
  if (!o.demand.empty()) {
    demand = read_demand(o.demand);
    require_profile(*demand, horizon, o.demand);
  }
  std::optional<Forecast> forecast;
  if (!o.history.empty()) {
    const auto days = read_history(o.history);
    for (const auto& d : days) require_profile(d, horizon, o.history);
    forecast = forecast_from_history(days);
  }
  if (algo != Algorithm::kNominal && !forecast) {
    throw ParseError(std::string(to_string(algo)) + " needs --history");
  }
  if (algo == Algorithm::kNominal && !demand && !forecast) {
    throw ParseError("nominal needs --demand or --history");
  }

  const auto start = Clock::now();
  const DispatchGraph graph(model, horizon, selection(o.boundary.initial),
                            selection(o.boundary.final));
  RobustSolution sol;
  DemandProfile eval;
  std::string eval_source;
  std::optional<MixedSet> mixed;
  if (algo == Algorithm::kNominal) {
    const DemandProfile input = demand ? *demand : forecast->mean();
    sol = solve_nominal(graph, input, tariff);
    eval = input;
    eval_source = demand ? "demand" : "forecast-mean";
  } else if (algo == Algorithm::kBox) {
    const BoxSet set = box_set(*forecast, o.params.box_alpha);
    sol = solve_box(graph, set, tariff);
    eval = demand ? *demand : worst_corner(set);
    eval_source = demand ? "demand" : "box-corner";
  } else {
    mixed = mixed_set(*forecast, o.params.alpha1, o.params.alpha2);
    SolverParams p = o.params;
    p.mixed = algo;
    sol = run_mixed(graph, *mixed, tariff, p);
    eval = demand ? *demand : bias_profile(*mixed);
    eval_source = demand ? "demand" : "bias";
  }
  const double runtime = seconds_since(start);

  if (!o.edge_dump.empty()) {
    if (!mixed) throw ParseError("--dump-edges needs a mixed algorithm");
    const Tariff& eff = tariff.is_convex() ? tariff : tariff.convexified();
    std::ofstream dump(o.edge_dump);
    write_edge_dump(dump, graph, compute_edge_costs(graph, *mixed, eff));
  }

  json report;
  report["algorithm"] = to_string(algo);
  report["feasible"] = sol.feasible();
  report["params"] = params_json(algo, o.params);
  report["graph"] = {{"horizon", horizon},
                     {"nodes", graph.num_nodes()},
                     {"edges", graph.num_edges()},
                     {"dead_nodes", graph.num_dead_nodes()}};
  if (algo != Algorithm::kNominal && algo != Algorithm::kBox) {
    report["thresholds_evaluated"] = sol.thresholds_evaluated;
    report["alpha"] = sol.alpha;
  }
  if (!o.omit_timing) report["runtime_seconds"] = runtime;

  if (!sol.feasible()) {
    emit(o.report_out, report.dump(2) + "\n", out);
    err << "infeasible: no finite-cost schedule over the horizon\n";
    return kExitInfeasible;
  }
  const Schedule schedule = build_schedule(graph, sol.path.edges, eval, tariff);
  report["cost"] = number_or_null(sol.worst_case_cost);
  report["worst_scenario"] = {{"kind", to_string(sol.worst_scenario.kind)},
                              {"step", sol.worst_scenario.step},
                              {"label", scenario_label(sol.worst_scenario)}};
  report["evaluation"] = {
      {"demand", eval_source},
      {"cost", number_or_null(path_cost(graph, sol.path.edges, eval, tariff))},
      {"schedule_total", number_or_null(schedule.total)}};
  if (!o.schedule_out.empty()) {
    write_text_file(o.schedule_out, schedule_to_csv(schedule));
  }
  emit(o.report_out, report.dump(2) + "\n", out);
  return kExitOk;
}

ComparisonReport compare_pack(const std::string& pack_dir,
                              const SolverParams& params,
                              const BoundaryOptions& boundary) {
  const fs::path root(pack_dir);
  std::vector<std::string> seasons;
  std::string model_file = "model.json";
  if (fs::exists(root / "pack.json")) {
    json manifest;
    try {
      manifest = json::parse(read_text_file(root / "pack.json"));
      if (manifest.contains("model")) model_file = manifest.at("model");
      seasons = manifest.at("seasons").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
      throw ParseError((root / "pack.json").string() + ": " + e.what());
    }
  } else {
    for (const auto& entry : fs::directory_iterator(root)) {
      if (entry.is_directory()) seasons.push_back(entry.path().filename());
    }
    std::sort(seasons.begin(), seasons.end());
  }
  if (seasons.empty()) throw ParseError(pack_dir + ": no seasons found");

  const auto model =
      std::make_shared<const IndexedModel>(read_model(root / model_file));
  ComparisonReport report;
  for (const std::string& season : seasons) {
    const fs::path dir = root / season;
    const Tariff tariff = read_tariff(dir / "tariff.json");
    require_same_step(*model, tariff);
    const auto history = read_history(dir / "history");
    const DemandProfile realized = read_demand(dir / "realized.csv");
    for (const auto& d : history) {
      require_profile(d, tariff.horizon(), (dir / "history").string());
    }
    require_profile(realized, tariff.horizon(),
                    (dir / "realized.csv").string());
    const DispatchGraph graph(model, tariff.horizon(),
                              selection(boundary.initial),
                              selection(boundary.final));
    report.seasons.push_back(
        compare_instance(season, graph, tariff, history, realized, params));
  }
  return report;
}

int cmd_compare(const CompareOptions& o, std::ostream& out, std::ostream& err) {
  ComparisonReport report;
  if (!o.pack.empty()) {
    report = compare_pack(o.pack, o.params, o.boundary);
  } else {
    if (o.model.empty() || o.tariff.empty() || o.history.empty() ||
        o.realized.empty()) {
      throw ParseError(
          "compare needs --pack, or --model, --tariff, --history and "
          "--realized");
    }
    const auto model =
        std::make_shared<const IndexedModel>(read_model(o.model));
    const Tariff tariff = read_tariff(o.tariff);
    require_same_step(*model, tariff);
    const auto history = read_history(o.history);
    const DemandProfile realized = read_demand(o.realized);
    for (const auto& d : history) {
      require_profile(d, tariff.horizon(), o.history);
    }
    require_profile(realized, tariff.horizon(), o.realized);
    const DispatchGraph graph(model, tariff.horizon(),
                              selection(o.boundary.initial),
                              selection(o.boundary.final));
    report.seasons.push_back(compare_instance("instance", graph, tariff,
                                              history, realized, o.params));
  }
  out << comparison_to_table(report);
  if (!o.report_out.empty()) {
    write_text_file(o.report_out, comparison_to_json(report, o.omit_timing));
  }
  for (const auto& s : report.seasons) {
    if (!s.rows.front().feasible) {
      err << s.name << ": benchmark is infeasible\n";
      return kExitInfeasible;
    }
  }
  return kExitOk;
}

BenchCheck ratio_check(const std::string& name,
                       const std::vector<double>& seconds, double lo,
                       double hi) {
  BenchCheck c{name, true, ""};
  for (std::size_t i = 1; i < seconds.size(); ++i) {
    const double r = seconds[i] / seconds[i - 1];
    c.detail += (i > 1 ? " " : "") + format_double(std::round(r * 100) / 100);
    if (!(r >= lo && r <= hi)) c.pass = false;
  }
  c.detail = "ratios [" + c.detail + "] band [" + format_double(lo) + ", " +
             format_double(hi) + "]";
  return c;
}

namespace {

Tariff bench_tariff(double step_seconds, std::size_t steps) {
  TouConfig cfg;
  cfg.step_seconds = step_seconds;
  cfg.horizon_steps = steps;
  cfg.peak_per_kwh = 0.20;
  cfg.offpeak_per_kwh = 0.10;
  return tou_tariff(cfg);
}

Forecast bench_forecast(std::size_t steps, double step_seconds,
                        std::uint64_t seed) {
  SyntheticDayConfig cfg;
  cfg.steps = steps;
  cfg.step_seconds = step_seconds;
  return forecast_from_history(synth_days(cfg, 14, seed));
}

template <class F>
double best_of(int repeats, F&& f) {
  double best = kInfiniteCost;
  for (int i = 0; i < std::max(1, repeats); ++i) {
    const auto start = Clock::now();
    f();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

}  // namespace

BenchReport run_bench(const BenchOptions& o, std::ostream* progress) {
  BenchReport report;
  SweepOptions sweep;
  sweep.threads = o.threads;

  auto measure = [&](const std::string& kind, int speeds, int valves,
                     std::size_t horizon, bool mixed) {
    const auto model =
        std::make_shared<const IndexedModel>(synth_c65_like(speeds, valves));
    const Tariff tariff = bench_tariff(model->step_seconds(), horizon);
    const Forecast forecast =
        bench_forecast(horizon, model->step_seconds(), o.seed);
    BenchRow row;
    row.sweep = kind;
    row.horizon = horizon;
    row.states = model->num_states();
    std::unique_ptr<DispatchGraph> graph;
    row.build_seconds = best_of(o.repeats, [&] {
      graph = std::make_unique<DispatchGraph>(model, horizon);
    });
    row.edges = graph->num_edges();
    const DemandProfile mean = forecast.mean();
    row.nominal_seconds =
        best_of(o.repeats, [&] { solve_nominal(*graph, mean, tariff); });
    const BoxSet box = box_set(forecast, 0.13);
    row.box_seconds = best_of(o.repeats, [&] { solve_box(*graph, box, tariff); });
    if (mixed) {
      const MixedSet set = mixed_set(forecast, 0.03, 40.0);
      const auto start = Clock::now();
      const RobustSolution sol =
          solve_mixed_additive_grid(*graph, set, tariff, o.grid_n, sweep);
      row.mixed_seconds = seconds_since(start);
      row.mixed_thresholds = sol.thresholds_evaluated;
    }
    if (progress) {
      *progress << kind << " T=" << horizon << " states=" << row.states
                << " edges=" << row.edges << " build=" << row.build_seconds
                << "s nominal=" << row.nominal_seconds
                << "s box=" << row.box_seconds << "s";
      if (mixed) {
        *progress << " mixed-add(N=" << row.mixed_thresholds
                  << ")=" << row.mixed_seconds << "s";
      }
      *progress << std::endl;
    }
    report.rows.push_back(row);
  };

  std::vector<double> nominal;
  std::vector<double> box;
  bool doubling = o.horizons.size() >= 2;
  for (std::size_t i = 0; i < o.horizons.size(); ++i) {
    if (i > 0 && o.horizons[i] != 2 * o.horizons[i - 1]) doubling = false;
    measure("horizon", o.speeds, o.valves, o.horizons[i], o.run_mixed);
    nominal.push_back(report.rows.back().nominal_seconds);
    box.push_back(report.rows.back().box_seconds);
  }
  if (doubling) {
    report.checks.push_back(ratio_check("nominal-doubling", nominal, 1.2, 3.5));
    report.checks.push_back(ratio_check("box-doubling", box, 1.2, 3.5));
  }
  for (const auto& [s, v] : o.state_sweep) {
    measure("states", s, v, o.state_sweep_horizon, false);
  }

  // Constant sigma gives every edge of the same transition type the same
  // spike, so dedup leaves far fewer thresholds than edges.
  {
    const auto model = std::make_shared<const IndexedModel>(synth_c65_like(3, 2));
    const std::size_t horizon = 96;
    const Tariff tariff = bench_tariff(model->step_seconds(), horizon);
    const Forecast base = bench_forecast(horizon, model->step_seconds(), o.seed);
    std::vector<DemandProfile> days;
    for (int k = 0; k < 4; ++k) {
      DemandProfile d = base.mean();
      const double shift = (k % 2 == 0 ? -1.0 : 1.0) * 5.0;
      for (auto& p : d.power_kw) p = std::max(p, 10.0) + shift;
      for (auto& h : d.heat_kw) h = std::max(h, 10.0) + shift;
      days.push_back(std::move(d));
    }
    const MixedSet set = mixed_set(forecast_from_history(days), 0.03, 2.0);
    const DispatchGraph graph(model, horizon);
    SweepOptions with = sweep;
    with.dedup = true;
    SweepOptions without = sweep;
    without.dedup = false;
    const RobustSolution a = solve_mixed_exact(graph, set, tariff, with);
    const RobustSolution b = solve_mixed_exact(graph, set, tariff, without);
    BenchCheck c{"dedup-fewer-thresholds",
                 a.thresholds_evaluated < b.thresholds_evaluated &&
                     a.worst_case_cost == b.worst_case_cost,
                 "with=" + std::to_string(a.thresholds_evaluated) +
                     " without=" + std::to_string(b.thresholds_evaluated) +
                     " cost_with=" + format_double(a.worst_case_cost) +
                     " cost_without=" + format_double(b.worst_case_cost)};
    report.checks.push_back(c);

    const std::size_t n = std::max<std::size_t>(o.grid_n, 2);
    const RobustSolution full =
        solve_mixed_additive_grid(graph, set, tariff, n, sweep);
    const RobustSolution half =
        solve_mixed_additive_grid(graph, set, tariff, n / 2, sweep);
    const double expect = static_cast<double>(full.thresholds_evaluated) / 2.0;
    report.checks.push_back(
        {"grid-n-halving",
         std::abs(static_cast<double>(half.thresholds_evaluated) - expect) <= 1.0,
         "N=" + std::to_string(n) + " -> " +
             std::to_string(full.thresholds_evaluated) + ", N=" +
             std::to_string(n / 2) + " -> " +
             std::to_string(half.thresholds_evaluated)});
  }
  return report;
}

std::string bench_to_json(const BenchReport& report) {
  json j;
  j["rows"] = json::array();
  for (const BenchRow& r : report.rows) {
    json row = {{"sweep", r.sweep},
                {"horizon", r.horizon},
                {"states", r.states},
                {"edges", r.edges},
                {"build_seconds", r.build_seconds},
                {"nominal_seconds", r.nominal_seconds},
                {"box_seconds", r.box_seconds}};
    if (r.mixed_seconds >= 0.0) {
      row["mixed_add_seconds"] = r.mixed_seconds;
      row["mixed_add_thresholds"] = r.mixed_thresholds;
    }
    j["rows"].push_back(std::move(row));
  }
  j["checks"] = json::array();
  for (const BenchCheck& c : report.checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return j.dump(2) + "\n";
}

int cmd_bench(const BenchOptions& options, const std::string& report_out,
              bool strict, std::ostream& out, std::ostream& err) {
  const BenchReport report = run_bench(options, &err);
  out << "sweep,horizon,states,edges,build_s,nominal_s,box_s,mixed_add_s\n";
  for (const BenchRow& r : report.rows) {
    out << r.sweep << ',' << r.horizon << ',' << r.states << ',' << r.edges
        << ',' << r.build_seconds << ',' << r.nominal_seconds << ','
        << r.box_seconds << ',';
    if (r.mixed_seconds >= 0.0) out << r.mixed_seconds;
    out << '\n';
  }
  bool ok = true;
  for (const BenchCheck& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    ok = ok && c.pass;
  }
  if (!report_out.empty()) write_text_file(report_out, bench_to_json(report));
  return (strict && !ok) ? kExitInvariant : kExitOk;
}

int cmd_validate(const ValidateOptions& o, std::ostream& out,
                 std::ostream& err) {
  bool parse_failed = false;
  std::size_t violations = 0;
  auto parse_fail = [&](const std::string& what) {
    err << what << "\n";
    parse_failed = true;
  };
  auto violation = [&](const std::string& what) {
    out << what << "\n";
    ++violations;
  };

  std::optional<double> model_step;
  if (!o.model.empty()) {
    try {
      const TurbineModel m = read_model(o.model);
      model_step = m.step_seconds;
      for (const ModelViolation& v : validate_model(m)) {
        violation(o.model + ": " + std::string(to_string(v.kind)) + " [" +
                  v.subject + "] " + v.message);
      }
    } catch (const ParseError& e) {
      parse_fail(e.what());
    }
  }

  std::optional<std::size_t> horizon;
  if (!o.tariff.empty()) {
    try {
      const TariffSpec spec = read_tariff_spec(o.tariff);
      horizon = spec.horizon_steps;
      if (model_step && *model_step != spec.step_seconds) {
        violation(o.tariff + ": step_seconds " +
                  format_double(spec.step_seconds) + " differs from model " +
                  format_double(*model_step));
      }
      try {
        const Tariff tariff = compile_tariff(spec);
        for (const TariffIssue& i : check_convexity(tariff)) {
          violation(o.tariff + ": non-convex " +
                    (i.commodity == Commodity::kPower ? "power" : "heat") +
                    " cost at step " + std::to_string(i.step) + ": " +
                    i.detail);
        }
      } catch (const InvariantError& e) {
        violation(o.tariff + ": " + e.what());
      }
    } catch (const ParseError& e) {
      parse_fail(e.what());
    }
  }

  auto check_demand = [&](const fs::path& file) {
    try {
      const DemandProfile p = read_demand(file);
      for (const std::string& issue : check_profile(p, horizon.value_or(p.size()))) {
        violation(file.string() + ": " + issue);
      }
      return true;
    } catch (const ParseError& e) {
      const std::string msg = e.what();
      if (msg.find("missing") != std::string::npos) {
        violation(msg);
      } else {
        parse_fail(msg);
      }
      return false;
    }
  };
  for (const std::string& d : o.demands) check_demand(d);
  if (!o.history.empty()) {
    std::vector<fs::path> files;
    if (fs::is_directory(o.history)) {
      for (const auto& entry : fs::directory_iterator(o.history)) {
        if (entry.path().extension() == ".csv") files.push_back(entry.path());
      }
    } else {
      parse_fail(o.history + ": not a directory");
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) check_demand(f);
    if (fs::is_directory(o.history) && files.size() < 2) {
      violation(o.history + ": forecast needs at least 2 days, found " +
                std::to_string(files.size()));
    }
  }

  if (parse_failed) return kExitParse;
  if (violations > 0) {
    out << violations << " violation(s)\n";
    return kExitInvariant;
  }
  out << "ok\n";
  return kExitOk;
}

void write_synthetic_pack(const PackOptions& o) {
  const fs::path root(o.out_dir);
  fs::create_directories(root);
  SynthRanges ranges;
  ranges.step_seconds = o.step_seconds;
  write_model(root / "model.json", synth_c65_like(o.speeds, o.valves, ranges));

  struct Season {
    const char* name;
    double peak;
    double offpeak;
  };
  const Season seasons[] = {{"winter", 0.16, 0.10},
                            {"spring", 0.15, 0.09},
                            {"summer", 0.22, 0.11},
                            {"autumn", 0.16, 0.10}};
  json manifest;
  manifest["model"] = "model.json";
  manifest["seasons"] = json::array();
  std::uint64_t k = 0;
  for (const Season& s : seasons) {
    const fs::path dir = root / s.name;
    fs::create_directories(dir / "history");
    TouConfig tou;
    tou.step_seconds = o.step_seconds;
    tou.horizon_steps = o.steps;
    tou.peak_per_kwh = s.peak;
    tou.offpeak_per_kwh = s.offpeak;
    tou.season = s.name;
    write_tariff(dir / "tariff.json", tou_tariff_spec(tou));

    SyntheticDayConfig day;
    day.steps = o.steps;
    day.step_seconds = o.step_seconds;
    day.season = s.name;
    const auto days = synth_days(day, o.history_days + 1, o.seed + 1000 * k++);
    for (std::size_t d = 0; d < o.history_days; ++d) {
      char name[32];
      std::snprintf(name, sizeof name, "day%02zu.csv", d + 1);
      write_demand(dir / "history" / name, days[d]);
    }
    write_demand(dir / "realized.csv", days.back());
    manifest["seasons"].push_back(s.name);
  }
  write_text_file(root / "pack.json", manifest.dump(2) + "\n");
}

}  // namespace rdispatch::cli
