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

#include "rdispatch/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace rdispatch {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNonPositiveStep:
      return "non-positive-step";
    case ViolationKind::kEmptyStateSet:
      return "empty-state-set";
    case ViolationKind::kDuplicateState:
      return "duplicate-state";
    case ViolationKind::kUnknownState:
      return "unknown-state";
    case ViolationKind::kNonPositiveDuration:
      return "non-positive-duration";
    case ViolationKind::kDuplicateControl:
      return "duplicate-control";
    case ViolationKind::kNegativeOutput:
      return "negative-output";
    case ViolationKind::kNonFiniteValue:
      return "non-finite-value";
    case ViolationKind::kDeadEnd:
      return "dead-end";
  }
  return "unknown";
}

namespace {

std::string subject_of(const TransitionRecord& tr) {
  return tr.from + "/" + tr.control;
}

}  // namespace

std::vector<ModelViolation> validate_model(const TurbineModel& model) {
  std::vector<ModelViolation> out;
  auto report = [&out](ViolationKind kind, std::string subject,
                       std::string message) {
    out.push_back({kind, std::move(subject), std::move(message)});
  };

  if (!(model.step_seconds > 0.0) || !std::isfinite(model.step_seconds)) {
    report(ViolationKind::kNonPositiveStep, "step_seconds",
           "step_seconds must be positive and finite");
  }
  if (model.states.empty()) {
    report(ViolationKind::kEmptyStateSet, "states", "model has no states");
  }

  std::set<std::string_view> known;
  for (const auto& s : model.states) {
    if (!known.insert(s).second) {
      report(ViolationKind::kDuplicateState, s, "state listed twice");
    }
  }

  std::set<std::string_view> has_control;
  std::set<std::pair<std::string_view, std::string_view>> seen_controls;
  for (const auto& tr : model.transitions) {
    const std::string subject = subject_of(tr);
    if (!known.contains(tr.from)) {
      report(ViolationKind::kUnknownState, subject,
             "transition leaves unknown state '" + tr.from + "'");
    } else {
      has_control.insert(tr.from);
    }
    if (!known.contains(tr.to)) {
      report(ViolationKind::kUnknownState, subject,
             "transition enters unknown state '" + tr.to + "'");
    }
    if (!seen_controls.insert({tr.from, tr.control}).second) {
      report(ViolationKind::kDuplicateControl, subject,
             "control defined twice for this state");
    }
    if (tr.duration_steps < 1) {
      report(ViolationKind::kNonPositiveDuration, subject,
             "duration_steps must be >= 1, got " +
                 std::to_string(tr.duration_steps));
    }
    if (!std::isfinite(tr.power_kw) || !std::isfinite(tr.heat_kw) ||
        !std::isfinite(tr.op_cost)) {
      report(ViolationKind::kNonFiniteValue, subject,
             "power_kw, heat_kw and op_cost must be finite");
    } else if (tr.power_kw < 0.0 || tr.heat_kw < 0.0) {
      report(ViolationKind::kNegativeOutput, subject,
             "power_kw and heat_kw must be non-negative");
    }
  }

  for (const auto& s : model.states) {
    if (!has_control.contains(s)) {
      report(ViolationKind::kDeadEnd, s, "state has no admissible control");
    }
  }
  return out;
}

std::vector<Successor> successors(const TurbineModel& model,
                                  std::string_view state) {
  if (std::find(model.states.begin(), model.states.end(), state) ==
      model.states.end()) {
    throw std::invalid_argument("unknown state '" + std::string(state) + "'");
  }
  std::vector<Successor> out;
  for (const auto& tr : model.transitions) {
    if (tr.from == state) {
      out.push_back({tr.control, tr.to, tr.duration_steps});
    }
  }
  return out;
}

TurbineModel cooldown_example(const CooldownParams& params) {
  TurbineModel m;
  m.step_seconds = 15.0;
  m.states = {"x_on", "x_off1", "x_off2", "x_off3+"};
  m.transitions = {
      {"x_on", "keep", "x_on", 1, params.power_kw, params.heat_kw,
       params.run_cost},
      {"x_on", "shutdown", "x_off1", 1, 0.0, 0.0, params.shutdown_cost},
      {"x_off1", "keep", "x_off2", 1, 0.0, 0.0, 0.0},
      {"x_off2", "keep", "x_off3+", 1, 0.0, 0.0, 0.0},
      {"x_off3+", "keep", "x_off3+", 1, 0.0, 0.0, 0.0},
      {"x_off3+", "start", "x_on", 1, 0.0, 0.0, params.start_cost},
  };
  return m;
}

IndexedModel::IndexedModel(TurbineModel model) : model_(std::move(model)) {
  const auto violations = validate_model(model_);
  if (!violations.empty()) {
    std::string msg = "invalid turbine model:";
    for (const auto& v : violations) {
      msg += "\n  [" + std::string(to_string(v.kind)) + "] " + v.subject +
             ": " + v.message;
    }
    throw InvariantError(msg);
  }

  std::unordered_map<std::string_view, StateIndex> index;
  for (StateIndex i = 0; i < model_.states.size(); ++i) {
    index.emplace(model_.states[i], i);
  }

  std::vector<std::size_t> count(model_.states.size() + 1, 0);
  for (const auto& tr : model_.transitions) ++count[index.at(tr.from) + 1];
  offsets_.assign(count.size(), 0);
  std::partial_sum(count.begin(), count.end(), offsets_.begin());

  transitions_.resize(model_.transitions.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t r = 0; r < model_.transitions.size(); ++r) {
    const auto& tr = model_.transitions[r];
    const StateIndex from = index.at(tr.from);
    transitions_[cursor[from]++] = Transition{
        from,
        index.at(tr.to),
        static_cast<std::uint32_t>(tr.duration_steps),
        tr.power_kw,
        tr.heat_kw,
        tr.op_cost,
        r,
    };
    max_duration_ =
        std::max(max_duration_, static_cast<std::uint32_t>(tr.duration_steps));
  }
}

std::optional<StateIndex> IndexedModel::find_state(std::string_view name) const {
  const auto it = std::find(model_.states.begin(), model_.states.end(), name);
  if (it == model_.states.end()) return std::nullopt;
  return static_cast<StateIndex>(it - model_.states.begin());
}

}  // namespace rdispatch
