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
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/report.hpp"
#include "rdispatch/dispatch_graph.hpp"
#include "rdispatch/io.hpp"
#include "rdispatch/robust.hpp"
#include "rdispatch/sp_core.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

namespace rdispatch {
namespace {

using Clock = std::chrono::steady_clock;
namespace t = rdispatch::testing;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool near(double a, double b) {
  if (a == b) return true;
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

t::InstanceConfig oracle_config() {
  t::InstanceConfig cfg;
  cfg.max_states = 6;
  cfg.max_horizon = 10;
  return cfg;
}

Outcome oracle_equivalence() {
  t::Rng rng(1001);
  const auto start = Clock::now();
  int instances = 0, mismatches = 0, feasible = 0;
  while (instances < 200) {
    const t::Instance inst = t::random_instance(rng, oracle_config());
    const DispatchGraph g(inst.model, inst.horizon);
    if (count_paths(g) > 1'000'000) continue;
    ++instances;
    const RobustSolution exact = solve_mixed_exact(g, inst.mixed, inst.tariff);
    const RobustSolution brute = brute_force_oracle(g, inst.mixed, inst.tariff);
    if (exact.feasible() != brute.feasible()) {
      ++mismatches;
      continue;
    }
    if (!exact.feasible()) continue;
    ++feasible;
    const double we =
        path_worstcase_cost(g, exact.path.edges, inst.mixed, inst.tariff).cost;
    const double wb =
        path_worstcase_cost(g, brute.path.edges, inst.mixed, inst.tariff).cost;
    if (!near(exact.worst_case_cost, brute.worst_case_cost) || !near(we, wb) ||
        !near(we, exact.worst_case_cost)) {
      ++mismatches;
    }
  }
  const double secs = seconds_since(start);
  return {mismatches == 0 && secs < 60.0,
          std::to_string(instances) + " instances (" + std::to_string(feasible) +
              " feasible), " + std::to_string(mismatches) + " mismatches, " +
              fmt(secs) + " s"};
}

Outcome box_reduction() {
  t::Rng rng(1002);
  const auto start = Clock::now();
  int instances = 0, failures = 0, checked = 0, infinite = 0;
  for (; instances < 200; ++instances) {
    const t::Instance inst = t::random_instance(rng, oracle_config());
    const DispatchGraph g(inst.model, inst.horizon);
    const RobustSolution box = solve_box(g, inst.box, inst.tariff);
    const RobustSolution nom = solve_nominal(g, t::box_corner(inst.box), inst.tariff);
    if (box.feasible() != nom.feasible()) {
      ++failures;
      continue;
    }
    if (!box.feasible()) continue;
    if (box.worst_case_cost != nom.worst_case_cost ||
        path_nodes(box.path.edges) != path_nodes(nom.path.edges)) {
      ++failures;
    }
    for (int k = 0; k < 100; ++k) {
      DemandProfile xi;
      for (std::size_t s = 0; s < inst.horizon; ++s) {
        xi.power_kw.push_back(inst.box.nominal_power[s] +
                              t::uniform(rng, -1.0, 1.0) * inst.box.power_dev[s]);
        xi.heat_kw.push_back(inst.box.nominal_heat[s] +
                             t::uniform(rng, -1.0, 1.0) * inst.box.heat_dev[s]);
      }
      const double c = path_cost(g, box.path.edges, xi, inst.tariff);
      if (std::isinf(c)) {
        ++infinite;  // below the forbidden-selling boundary
        continue;
      }
      ++checked;
      if (c > box.worst_case_cost + 1e-9 * std::max(1.0, std::abs(c))) ++failures;
    }
  }
  const double secs = seconds_since(start);
  return {failures == 0 && secs < 60.0,
          std::to_string(instances) + " instances, " + std::to_string(checked) +
              " finite in-box samples dominated (" + std::to_string(infinite) +
              " outside the finite domain), " + std::to_string(failures) +
              " failures, " + fmt(secs) + " s"};
}

Outcome approximation_sandwich() {
  t::Rng rng(1003);
  t::InstanceConfig cfg = oracle_config();
  cfg.allow_revenue = false;
  const auto start = Clock::now();
  int instances = 0, violations = 0, runs = 0;
  while (instances < 100) {
    const t::Instance inst = t::random_instance(rng, cfg);
    const DispatchGraph g(inst.model, inst.horizon);
    const RobustSolution exact = solve_mixed_exact(g, inst.mixed, inst.tariff);
    if (!exact.feasible()) continue;
    ++instances;
    const double v = exact.worst_case_cost;
    const double slack = 1e-9 * std::max(1.0, std::abs(v));
    for (double eps : {0.01, 0.25, 1.0}) {
      const auto a = solve_mixed_additive(g, inst.mixed, inst.tariff, eps);
      ++runs;
      if (!a.feasible() || a.worst_case_cost < v - slack ||
          a.worst_case_cost > v + eps + slack) {
        ++violations;
      }
    }
    for (double mu : {0.01, 0.1, 0.5}) {
      const auto m = solve_mixed_multiplicative(g, inst.mixed, inst.tariff, mu);
      ++runs;
      if (!m.feasible() || m.worst_case_cost < v - slack ||
          m.worst_case_cost > (1.0 + mu) * v + slack) {
        ++violations;
      }
    }
  }
  const double secs = seconds_since(start);
  return {violations == 0 && secs < 120.0,
          std::to_string(instances) + " instances, " + std::to_string(runs) +
              " approximate solves, " + std::to_string(violations) +
              " violations, " + fmt(secs) + " s"};
}

Outcome monotonicity() {
  t::Rng rng(1004);
  const auto start = Clock::now();
  int pairs = 0, redraws = 0, violations = 0, negative_spikes = 0;
  std::size_t spikes = 0;
  while (pairs < 10'000) {
    const t::Instance inst = t::random_instance(rng, oracle_config());
    const DispatchGraph g(inst.model, inst.horizon);
    const EdgeCosts costs = compute_edge_costs(g, inst.mixed, inst.tariff);
    const auto edges = g.edges();
    for (const EdgeRef& e : edges) {
      ++spikes;
      if (!(costs.spike[e.id] >= 0.0)) ++negative_spikes;
    }
    for (int k = 0; k < 100 && pairs < 10'000; ++k) {
      const EdgeRef& e = edges[t::uniform_int(rng, 0, int(edges.size()) - 1)];
      DemandProfile lo = t::random_demand(rng, inst.horizon, 40.0, 60.0);
      DemandProfile hi = lo;
      for (std::size_t s = 0; s < inst.horizon; ++s) {
        hi.power_kw[s] += t::coin(rng, 0.3) ? 0.0 : t::uniform(rng, 0.0, 20.0);
        hi.heat_kw[s] += t::coin(rng, 0.3) ? 0.0 : t::uniform(rng, 0.0, 20.0);
      }
      const double w1 = edge_weight(g, e, lo, inst.tariff);
      if (std::isinf(w1)) {
        ++redraws;  // below the forbidden-selling boundary
        continue;
      }
      ++pairs;
      if (w1 > edge_weight(g, e, hi, inst.tariff)) ++violations;
    }
  }
  const double secs = seconds_since(start);
  return {violations == 0 && negative_spikes == 0 && secs < 30.0,
          std::to_string(pairs) + " pairs on the finite domain (" +
              std::to_string(redraws) + " redrawn), " +
              std::to_string(violations) + " violations; " +
              std::to_string(spikes) + " spikes, " +
              std::to_string(negative_spikes) + " negative, " + fmt(secs) + " s"};
}

Outcome figure_structure() {
  // Counts from an independent enumeration of the cooldown rules, frozen.
  constexpr std::size_t kNodes = 22, kEdges = 34;
  constexpr std::uint64_t kPaths = 45;
  const auto start = Clock::now();
  const DispatchGraph g(cooldown_example(), 5);
  const std::uint64_t paths = count_paths(g);
  const auto oracle = t::expected_structure(cooldown_example(), 5);
  const double secs = seconds_since(start);
  const bool ok = g.num_nodes() == kNodes && g.num_edges() == kEdges &&
                  paths == kPaths && oracle.nodes == kNodes &&
                  oracle.edges == kEdges && oracle.paths == kPaths;
  return {ok && secs < 1.0,
          "nodes=" + std::to_string(g.num_nodes()) +
              " edges=" + std::to_string(g.num_edges()) +
              " paths=" + std::to_string(paths) + " (expected 22/34/45), " +
              fmt(secs) + " s"};
}

Outcome scaling() {
  const std::vector<std::size_t> horizons{1440, 2880, 5760};
  const auto model = std::make_shared<const IndexedModel>(synth_c65_like(30, 50));
  std::vector<double> nominal, box;
  double mixed_secs = -1.0;
  std::size_t mixed_thresholds = 0, edges_5760 = 0;
  bool mixed_feasible = false;
  std::string rows;
  for (std::size_t T : horizons) {
    TouConfig tou;
    tou.step_seconds = model->step_seconds();
    tou.horizon_steps = T;
    tou.peak_per_kwh = 0.20;
    tou.offpeak_per_kwh = 0.10;
    const Tariff tariff = tou_tariff(tou);
    SyntheticDayConfig days;
    days.steps = T;
    days.step_seconds = model->step_seconds();
    const Forecast f = forecast_from_history(synth_days(days, 14, 7));
    const DispatchGraph g(model, T);
    const DemandProfile mean = f.mean();
    const BoxSet set = box_set(f, 0.13);
    double best_nom = 1e300, best_box = 1e300;
    for (int r = 0; r < 2; ++r) {
      auto s = Clock::now();
      solve_nominal(g, mean, tariff);
      best_nom = std::min(best_nom, seconds_since(s));
      s = Clock::now();
      solve_box(g, set, tariff);
      best_box = std::min(best_box, seconds_since(s));
    }
    nominal.push_back(best_nom);
    box.push_back(best_box);
    rows += " T=" + std::to_string(T) + ":" + fmt(best_nom) + "/" + fmt(best_box);
    if (T == 5760) {
      edges_5760 = g.num_edges();
      const MixedSet mixed = mixed_set(f, 0.03, 40.0);
      SweepOptions opt;
      opt.threads = cli::sweep_threads(0);
      const auto s = Clock::now();
      const RobustSolution sol = solve_mixed_additive_grid(g, mixed, tariff, 30, opt);
      mixed_secs = seconds_since(s);
      mixed_thresholds = sol.thresholds_evaluated;
      mixed_feasible = sol.feasible();
    }
  }
  bool band = true;
  std::string ratios;
  for (std::size_t i = 1; i < horizons.size(); ++i) {
    const double rn = nominal[i] / nominal[i - 1];
    const double rb = box[i] / box[i - 1];
    band = band && rn >= 1.2 && rn <= 3.5 && rb >= 1.2 && rb <= 3.5;
    ratios += " " + fmt(rn) + "/" + fmt(rb);
  }
  const bool mixed_ok = mixed_feasible && mixed_thresholds == 30 && mixed_secs < 600.0;
  return {band && mixed_ok,
          "nominal/box s" + rows + "; doubling ratios" + ratios +
              " (band [1.2, 3.5]); mixed-add N=" +
              std::to_string(mixed_thresholds) + " at T=5760 (" +
              std::to_string(edges_5760) + " edges) " + fmt(mixed_secs) + " s"};
}

Outcome robust_dominance() {
  t::Rng rng(1007);
  const auto start = Clock::now();
  int instances = 0, violations = 0, compared = 0;
  for (; instances < 300; ++instances) {
    const t::Instance inst = t::random_instance(rng, oracle_config());
    const DispatchGraph g(inst.model, inst.horizon);
    const RobustSolution robust = solve_mixed_exact(g, inst.mixed, inst.tariff);
    const DemandProfile nominal{inst.mixed.nominal_power, inst.mixed.nominal_heat};
    const RobustSolution nom = solve_nominal(g, nominal, inst.tariff);
    if (!nom.feasible()) continue;
    const double wn =
        path_worstcase_cost(g, nom.path.edges, inst.mixed, inst.tariff).cost;
    if (!robust.feasible()) {
      if (!std::isinf(wn)) ++violations;
      continue;
    }
    ++compared;
    if (robust.worst_case_cost > wn + 1e-9 * std::max(1.0, std::abs(wn))) {
      ++violations;
    }
  }
  const double secs = seconds_since(start);
  return {violations == 0 && secs < 30.0,
          std::to_string(instances) + " instances, " + std::to_string(compared) +
              " compared, " + std::to_string(violations) + " violations, " +
              fmt(secs) + " s"};
}

Outcome case_study() {
  const std::filesystem::path pack = std::filesystem::path(RDISPATCH_DATA) / "pack";
  const cli::ComparisonReport report = cli::compare_pack(pack.string(), {});
  int failures = 0;
  std::ostringstream detail;
  for (const auto& s : report.seasons) {
    if (s.rows.size() != 4 || s.rows[0].algorithm != "benchmark") {
      ++failures;
      continue;
    }
    const double bench = s.rows[0].realized_cost;
    const double nominal = s.rows[1].realized_cost;
    for (const auto& row : s.rows) {
      if (!row.feasible ||
          row.realized_cost < bench - 1e-9 * std::max(1.0, std::abs(bench))) {
        ++failures;
      }
    }
    const double margin = nominal - bench;
    for (std::size_t i = 2; i < 4; ++i) {
      const auto& row = s.rows[i];
      if (margin > 1e-9 * std::max(1.0, std::abs(bench))) {
        const double want = 100.0 * (nominal - row.realized_cost) / margin;
        if (!row.reduction_pct || std::abs(*row.reduction_pct - want) > 1e-9) {
          ++failures;
        }
      } else if (row.reduction_pct) {
        ++failures;
      }
    }
    detail << ' ' << s.name << "[";
    for (std::size_t i = 2; i < 4; ++i) {
      const auto& r = s.rows[i].reduction_pct;
      detail << (i > 2 ? "," : "") << s.rows[i].algorithm << "="
             << (r ? fmt(*r) + "%" : std::string("n/a"));
    }
    detail << "]";
  }
  if (report.seasons.size() != 4) ++failures;
  return {failures == 0, std::to_string(report.seasons.size()) + " seasons," +
                             detail.str() + ", " + std::to_string(failures) +
                             " failures"};
}

}  // namespace
}  // namespace rdispatch

int main() {
  using rdispatch::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 oracle equivalence", rdispatch::oracle_equivalence},
      {"2 box reduction", rdispatch::box_reduction},
      {"3 approximation sandwiches", rdispatch::approximation_sandwich},
      {"4 monotonicity and non-negative spikes", rdispatch::monotonicity},
      {"5 cooldown graph structure", rdispatch::figure_structure},
      {"6 scaling", rdispatch::scaling},
      {"7 robust dominance", rdispatch::robust_dominance},
      {"8 synthetic case study", rdispatch::case_study},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail
              << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
