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

#ifndef RDISPATCH_MODEL_HPP_
#define RDISPATCH_MODEL_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rdispatch/errors.hpp"

namespace rdispatch {

// One admissible (state, control) pair of the turbine. The transition moves
// the turbine from `from` to `to` in `duration_steps` steps, generating
// `power_kw` and `heat_kw` during every one of those steps, and costs
// `op_cost` for the whole transition (fuel plus any cycling surcharge).
struct TransitionRecord {
  std::string from;
  std::string control;
  std::string to;
  int duration_steps = 1;
  double power_kw = 0.0;
  double heat_kw = 0.0;
  double op_cost = 0.0;
};

// Discrete state-space turbine description, as read from or written to a
// model file. Transitions out of a state are enumerated in file order.
struct TurbineModel {
  double step_seconds = 15.0;
  std::vector<std::string> states;
  std::vector<TransitionRecord> transitions;
};

enum class ViolationKind {
  kNonPositiveStep,
  kEmptyStateSet,
  kDuplicateState,
  kUnknownState,
  kNonPositiveDuration,
  kDuplicateControl,
  kNegativeOutput,
  kNonFiniteValue,
  kDeadEnd,
};

std::string_view to_string(ViolationKind kind);

struct ModelViolation {
  ViolationKind kind;
  std::string subject;  // offending state name or "from/control"
  std::string message;
};

// Empty iff the model satisfies every structural invariant.
std::vector<ModelViolation> validate_model(const TurbineModel& model);

struct Successor {
  std::string control;
  std::string next_state;
  int duration_steps;
};

// Admissible controls of `state` in file order. Throws std::invalid_argument
// for an unknown state.
std::vector<Successor> successors(const TurbineModel& model,
                                  std::string_view state);

struct CooldownParams {
  double power_kw = 10.0;
  double heat_kw = 20.0;
  double run_cost = 0.0;       // x_on / keep
  double start_cost = 0.0;     // x_off3+ / start
  double shutdown_cost = 0.0;  // x_on / shutdown
};

// Four-state turbine with a three-step cool-down after every shutdown:
// x_on, x_off1, x_off2, x_off3+. Only x_on/keep generates output.
TurbineModel cooldown_example(const CooldownParams& params = {});

// Parameters of the synthetic C65-like generator. Output ranges are for the
// active grid; cycling costs are charged once per startup/shutdown.
struct SynthRanges {
  double step_seconds = 15.0;
  double power_min_kw = 5.0;
  double power_max_kw = 65.0;
  double heat_min_kw = 27.0;
  double heat_max_kw = 216.0;
  double efficiency_min = 0.18;  // electrical efficiency at lowest speed
  double efficiency_max = 0.29;  // at top speed
  double total_efficiency = 0.9;  // cap on (power + heat) / fuel
  double gas_price_per_kg = 0.95;
  double gas_kwh_per_kg = 13.1;
  double cycling_cost = 3.75;
  double startup_minutes = 6.0;
  double shutdown_minutes = 3.0;
};

// Grid of n_speeds x n_valves active states plus one "off" state. Moves
// change speed and/or valve by one level (speed-up takes two steps); the
// turbine starts into and shuts down from the lowest speed level.
TurbineModel synth_c65_like(int n_speeds, int n_valves,
                            const SynthRanges& ranges = {});

using StateIndex = std::uint32_t;

// Transition with state names resolved to indices.
struct Transition {
  StateIndex from;
  StateIndex to;
  std::uint32_t duration_steps;
  double power_kw;
  double heat_kw;
  double op_cost;
  std::uint32_t record;  // position in TurbineModel::transitions
};

// Validated, index-resolved view of a TurbineModel. Transitions are grouped
// by source state (stable within a state), so every state owns a contiguous
// range. Throws InvariantError when validate_model reports anything.
class IndexedModel {
 public:
  explicit IndexedModel(TurbineModel model);

  const TurbineModel& description() const { return model_; }
  double step_seconds() const { return model_.step_seconds; }
  std::size_t num_states() const { return model_.states.size(); }
  std::size_t num_transitions() const { return transitions_.size(); }

  const Transition& transition(std::size_t k) const { return transitions_[k]; }
  std::span<const Transition> transitions() const { return transitions_; }

  // First transition index owned by `state`; the range is
  // [first_transition(x), first_transition(x + 1)).
  std::size_t first_transition(StateIndex state) const {
    return offsets_[state];
  }
  std::span<const Transition> transitions_from(StateIndex state) const {
    return std::span<const Transition>(transitions_).subspan(
        offsets_[state], offsets_[state + 1] - offsets_[state]);
  }

  std::optional<StateIndex> find_state(std::string_view name) const;
  const std::string& state_name(StateIndex state) const {
    return model_.states[state];
  }
  const std::string& control_name(std::size_t k) const {
    return model_.transitions[transitions_[k].record].control;
  }
  std::uint32_t max_duration() const { return max_duration_; }

 private:
  TurbineModel model_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> offsets_;
  std::uint32_t max_duration_ = 0;
};

}  // namespace rdispatch

#endif  // RDISPATCH_MODEL_HPP_
