#include "unison/computation.hpp"

#include <algorithm>

#include "unison/error.hpp"

namespace unison {

bool ComputationReport::all_complete_match() const {
  bool any = false;
  for (const PhaseResult& r : phases) {
    if (!r.complete) continue;
    any = true;
    if (!r.matches) return false;
  }
  return any;
}

StabilizedRun run_stabilized(const Graph& g, const ProtocolParams& params, Configuration conf0,
                             Daemon& daemon, const std::function<Clock(Clock)>& target,
                             const RunLimits& limits, const CriticalSections& cs) {
  const IncSystem sys = params.clock();
  if (conf0.size() != g.size()) {
    throw Error(Errc::InvalidParams, "initial configuration has " +
                                         std::to_string(conf0.size()) + " processes, graph has " +
                                         std::to_string(g.size()));
  }

  StopCondition to_wu;
  to_wu.max_steps = limits.max_stabilization_steps;
  to_wu.until = [&](const Execution& e) { return check_wu(g, params, e.last()); };
  Execution prefix = run(g, params, std::move(conf0), daemon, to_wu, cs);
  if (!check_wu(g, params, prefix.last())) {
    throw Error(Errc::NotStabilized, "no WU configuration within " +
                                         std::to_string(limits.max_stabilization_steps) +
                                         " steps");
  }
  const auto delays = intrinsic_delays(g, sys, prefix.last().clocks(), 0);
  if (!delays) throw Error(Errc::NotWU0, "stabilized configuration has no intrinsic delay");

  // Lifted start values, mirroring lift(): the anchor has the largest delay.
  const auto top = std::max_element(delays->begin(), delays->end());
  const Clock bottom = prefix.last()[static_cast<Process>(top - delays->begin())].r;
  std::vector<Clock> lifted(g.size());
  for (Process p = 0; p < g.size(); ++p) lifted[p] = bottom + (*delays)[p] - *top;
  const Clock goal = target(bottom);

  StopCondition to_goal;
  to_goal.max_steps = limits.max_extension_steps;
  std::size_t seen = 0;
  to_goal.until = [&](const Execution& e) {
    for (; seen < e.steps(); ++seen) {
      for (const EventRecord& ev : e.transition(seen).events) ++lifted[ev.process];
    }
    return std::all_of(lifted.begin(), lifted.end(), [&](Clock v) { return v >= goal; });
  };
  Execution tail = run(g, params, prefix.last(), daemon, to_goal, cs);
  if (!to_goal.until(tail)) {
    throw Error(Errc::Incomplete, "lifted clock " + std::to_string(goal) + " not reached within " +
                                      std::to_string(limits.max_extension_steps) + " steps");
  }

  CausalDag dag = build_dag(g, tail);
  LiftedClocks lc = lift(g, params, dag, tail);
  return StabilizedRun{prefix.steps(), rounds_until(prefix, prefix.steps()), std::move(tail),
                       std::move(dag), std::move(lc)};
}

PhaseCost phase_cost(const Graph& g, const CausalDag& dag, const LiftedClocks& lifted,
                     Clock delta, Clock phase) {
  PhaseCost cost;
  const Clock lo = phase * delta;
  const Clock hi = lo + delta - 1;
  for (EventId id = 0; id < dag.size(); ++id) {
    const Event& e = dag.event(id);
    if (e.initial || e.action != Action::Normal) continue;
    const Clock v = lifted.at(id);
    if (v < lo || v > hi) continue;
    ++cost.normal_actions;
    cost.reads += g.degree(e.process);
  }
  return cost;
}

ComputationReport run_computation(const Graph& g, const ProtocolParams& params,
                                  const TaskSpec& task, Daemon& daemon,
                                  const ComputationOptions& options) {
  if (options.phases == 0) throw Error(Errc::InvalidParams, "at least one phase is needed");
  const CriticalSections cs = cs_handlers(g, params, task);
  const std::vector<Value> expected = task_oracle(g, task);

  Configuration conf0 = options.initial
                            ? *options.initial
                            : random_configuration(g.size(), params.clock(), options.init_seed);
  const Clock delta = params.delta;
  const auto phases = static_cast<Clock>(options.phases);
  auto target = [&](Clock bottom) {
    return (floor_div(bottom, delta) + phases) * delta + delta - 1;
  };
  StabilizedRun run = run_stabilized(
      g, params, std::move(conf0), daemon, target,
      RunLimits{options.max_stabilization_steps, options.max_phase_steps}, cs);

  const Clock first_phase = first_full_phase(run.lifted, delta);
  const Clock last_phase = first_phase + phases - 1;

  ComputationReport report{run.stabilization_steps, run.stabilization_rounds, run.lifted.bottom,
                           delta, {}, std::move(run.execution)};
  for (Clock u = first_phase - 1; u <= last_phase; ++u) {
    const Clock decide_at = u * delta + delta - 1;
    if (decide_at < run.lifted.bottom) continue;
    const Cut cut = cut_at(run.dag, run.lifted, decide_at);
    PhaseResult r;
    r.phase = u;
    r.complete = u >= first_phase;
    r.expected = expected;
    for (Process p = 0; p < g.size(); ++p) {
      const Event& ev = run.dag.event(cut[p]);
      r.values.push_back(read_result(task, report.execution.configuration(ev.time)[p]));
    }
    r.matches = r.values == r.expected;
    report.phases.push_back(std::move(r));
  }
  return report;
}

}  // namespace unison
