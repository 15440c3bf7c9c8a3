#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "unison/aggregation.hpp"
#include "unison/causality.hpp"
#include "unison/scheduler.hpp"

namespace unison {

struct PhaseResult {
  Clock phase = 0;
  /// False for the phase that was already running when the clocks stabilized.
  bool complete = true;
  std::vector<Value> values;
  std::vector<Value> expected;
  bool matches = false;
};

struct ComputationOptions {
  /// Complete phases to observe after stabilization.
  std::size_t phases = 2;
  std::uint64_t init_seed = 1;
  /// Starting configuration; random over chi when absent.
  std::optional<Configuration> initial;
  std::size_t max_stabilization_steps = 1'000'000;
  std::size_t max_phase_steps = 1'000'000;
};

struct ComputationReport {
  std::size_t stabilization_steps = 0;
  std::size_t stabilization_rounds = 0;
  Clock bottom = 0;
  Clock delta = 0;
  std::vector<PhaseResult> phases;
  /// Execution from the first WU configuration onwards.
  Execution execution;

  bool all_complete_match() const;
};

/// Execution from the first WU configuration until every process's lifted
/// clock reaches target(bottom), with its DAG and lifting.
struct StabilizedRun {
  std::size_t stabilization_steps = 0;
  std::size_t stabilization_rounds = 0;
  Execution execution;
  CausalDag dag;
  LiftedClocks lifted;
};

struct RunLimits {
  std::size_t max_stabilization_steps = 1'000'000;
  std::size_t max_extension_steps = 1'000'000;
};

/// Throws Error{NotStabilized}, Error{NotWU0}, Error{Incomplete} when the
/// target is not reached within the limits, and DeadlockError.
StabilizedRun run_stabilized(const Graph& g, const ProtocolParams& params, Configuration conf0,
                             Daemon& daemon, const std::function<Clock(Clock)>& target,
                             const RunLimits& limits = {}, const CriticalSections& cs = {});

/// First phase whose entry cut lies strictly above the lifted base.
inline Clock first_full_phase(const LiftedClocks& lifted, Clock delta) {
  return floor_div(lifted.bottom, delta) + 1;
}

struct PhaseCost {
  std::size_t normal_actions = 0;
  std::size_t reads = 0;
};

/// Normal actions with lifted value in [U*delta, U*delta + delta - 1] and the
/// neighbour registers they read.
PhaseCost phase_cost(const Graph& g, const CausalDag& dag, const LiftedClocks& lifted,
                     Clock delta, Clock phase);

/// Runs the unison with the task's critical sections until the clocks reach
/// WU, then until `phases` complete phases have been decided, and compares
/// each decide cut with the task oracle. Throws Error{NotStabilized} when WU
/// is not reached in time, Error{NotWU0} when the first WU configuration has
/// no intrinsic delay, DeadlockError, and whatever cs_handlers throws.
ComputationReport run_computation(const Graph& g, const ProtocolParams& params,
                                  const TaskSpec& task, Daemon& daemon,
                                  const ComputationOptions& options = {});

}  // namespace unison
