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

#include "cli/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "rdispatch/errors.hpp"

namespace rdispatch::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string money(double v) {
  if (!std::isfinite(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

nlohmann::json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

std::optional<double> excess_cost_reduction(double nominal, double algo,
                                            double benchmark) {
  const double margin = nominal - benchmark;
  if (!std::isfinite(margin) ||
      !(margin > 1e-9 * std::max(1.0, std::abs(benchmark)))) {
    return std::nullopt;
  }
  return 100.0 * (nominal - algo) / margin;
}

RobustSolution run_mixed(const DispatchGraph& graph, const MixedSet& set,
                         const Tariff& tariff, const SolverParams& params) {
  switch (params.mixed) {
    case Algorithm::kMixedExact:
      return solve_mixed_exact(graph, set, tariff, params.sweep);
    case Algorithm::kMixedMultiplicative:
      return solve_mixed_multiplicative(graph, set, tariff, params.mu,
                                        params.sweep);
    case Algorithm::kMixedAdditive:
      if (params.epsilon) {
        return solve_mixed_additive(graph, set, tariff, *params.epsilon,
                                    params.sweep);
      }
      return solve_mixed_additive_grid(graph, set, tariff, params.grid_n,
                                       params.sweep);
    default:
      throw std::invalid_argument("not a mixed algorithm");
  }
}

SeasonComparison compare_instance(std::string name,
                                  const DispatchGraph& graph,
                                  const Tariff& tariff,
                                  std::span<const DemandProfile> history,
                                  const DemandProfile& realized,
                                  const SolverParams& params) {
  const Forecast forecast = forecast_from_history(history);
  const BoxSet box = box_set(forecast, params.box_alpha);
  const MixedSet mixed = mixed_set(forecast, params.alpha1, params.alpha2);
  std::optional<Tariff> convex;
  if (tariff.is_convex()) {
    convex.emplace(tariff);
  } else if (params.sweep.allow_convexify) {
    convex.emplace(tariff.convexified());
  }

  SeasonComparison out;
  out.name = std::move(name);
  auto add_row = [&](std::string algo, auto&& solve) {
    const auto start = Clock::now();
    const RobustSolution sol = solve();
    ComparisonRow row;
    row.runtime_seconds = seconds_since(start);
    row.algorithm = std::move(algo);
    row.feasible = sol.feasible();
    row.thresholds_evaluated = sol.thresholds_evaluated;
    if (sol.feasible()) {
      row.realized_cost = path_cost(graph, sol.path.edges, realized, tariff);
      if (convex) {
        row.worst_case_cost =
            path_worstcase_cost(graph, sol.path.edges, mixed, *convex).cost;
      }
    }
    out.rows.push_back(std::move(row));
  };
  add_row("benchmark", [&] { return solve_nominal(graph, realized, tariff); });
  add_row("nominal",
          [&] { return solve_nominal(graph, forecast.mean(), tariff); });
  add_row("box", [&] { return solve_box(graph, box, tariff); });
  add_row(std::string(to_string(params.mixed)),
          [&] { return run_mixed(graph, mixed, tariff, params); });

  const double bench = out.rows[0].realized_cost;
  const double nominal = out.rows[1].realized_cost;
  out.margin = nominal - bench;
  for (std::size_t i = 2; i < out.rows.size(); ++i) {
    out.rows[i].reduction_pct =
        excess_cost_reduction(nominal, out.rows[i].realized_cost, bench);
  }
  return out;
}

std::string comparison_to_json(const ComparisonReport& report,
                               bool omit_timing) {
  nlohmann::json j;
  j["seasons"] = nlohmann::json::array();
  for (const SeasonComparison& s : report.seasons) {
    nlohmann::json season;
    season["name"] = s.name;
    season["margin"] = number_or_null(s.margin);
    season["algorithms"] = nlohmann::json::array();
    for (const ComparisonRow& r : s.rows) {
      nlohmann::json row;
      row["algorithm"] = r.algorithm;
      row["feasible"] = r.feasible;
      row["realized_cost"] = number_or_null(r.realized_cost);
      row["worst_case_cost"] =
          r.worst_case_cost ? number_or_null(*r.worst_case_cost) : nullptr;
      row["thresholds_evaluated"] = r.thresholds_evaluated;
      if (r.algorithm != "benchmark" && r.algorithm != "nominal") {
        row["reduction_pct"] = r.reduction_pct
                                   ? nlohmann::json(*r.reduction_pct)
                                   : nlohmann::json("n/a");
      }
      if (!omit_timing) row["runtime_seconds"] = r.runtime_seconds;
      season["algorithms"].push_back(std::move(row));
    }
    j["seasons"].push_back(std::move(season));
  }
  return j.dump(2) + "\n";
}

std::string comparison_to_table(const ComparisonReport& report) {
  std::string out = "| schedule cost (reduction in excess cost) |";
  std::string rule = "|---|";
  for (const SeasonComparison& s : report.seasons) {
    out += " " + s.name + " |";
    rule += "---|";
  }
  out += "\n" + rule + "\n";
  if (report.seasons.empty()) return out;
  for (std::size_t i = 0; i < report.seasons.front().rows.size(); ++i) {
    out += "| " + report.seasons.front().rows[i].algorithm + " |";
    for (const SeasonComparison& s : report.seasons) {
      const ComparisonRow& r = s.rows[i];
      std::string cell = r.feasible ? money(r.realized_cost) : "infeasible";
      if (i >= 2) {
        cell += r.reduction_pct ? " (" + money(*r.reduction_pct) + "%)"
                                : " (n/a)";
      }
      out += " " + cell + " |";
    }
    out += "\n";
  }
  return out;
}

}  // namespace rdispatch::cli
