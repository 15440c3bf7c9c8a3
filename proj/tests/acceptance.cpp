// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "unison/aggregation.hpp"
#include "unison/causality.hpp"
#include "unison/computation.hpp"
#include "unison/error.hpp"
#include "unison/protocol.hpp"
#include "unison/scheduler.hpp"

using namespace unison;
using unison::testing::Named;

namespace {

constexpr std::size_t kInitialConfigs = 50;
constexpr std::size_t kClosureSteps = 1000;
constexpr std::size_t kRoundsPerProcess = 10;
constexpr double kRuntimeBudgetSeconds = 60.0;
constexpr std::size_t kInputVectors = 20;
constexpr std::size_t kMaxStabilizationSteps = 2'000'000;

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string why) {
    passed = false;
    if (failures.size() < 5) failures.push_back(std::move(why));
  }
};

using Clk = std::chrono::steady_clock;

double seconds_since(Clk::time_point t0) {
  return std::chrono::duration<double>(Clk::now() - t0).count();
}

std::vector<Named> corpus() {
  std::vector<Named> out;
  for (std::size_t n = 3; n <= 8; ++n) out.push_back({"ring" + std::to_string(n), families::ring(n)});
  for (std::size_t n = 2; n <= 8; ++n) out.push_back({"path" + std::to_string(n), families::path(n)});
  for (std::size_t leaves = 2; leaves <= 7; ++leaves) {
    out.push_back({"star" + std::to_string(leaves), families::star(leaves)});
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      out.push_back({"random" + std::to_string(n) + "s" + std::to_string(seed),
                     families::random_connected(n, 0.3, seed * 100 + n)});
    }
  }
  out.push_back({"grid3x3", families::grid(3, 3)});
  return out;
}

constexpr int kDaemonKinds = 4;

Daemon make_daemon(int kind, std::uint64_t seed, std::size_t n) {
  switch (kind) {
    case 0: return Daemon::synchronous();
    case 1: return Daemon::random_subset(seed);
    case 2: return Daemon::single_random(seed);
    default: return Daemon::starving(static_cast<Process>(seed % n), seed);
  }
}

const char* daemon_name(int kind) {
  static const char* names[] = {"synchronous", "random-subset", "single-random", "starving"};
  return names[kind];
}

std::string where(const Named& g, int kind, std::uint64_t seed) {
  return g.name + "/" + daemon_name(kind) + "/seed" + std::to_string(seed);
}

ProtocolParams unison_params(const Graph& g, Clock min_delta, std::optional<Clock> rho = {}) {
  ParamOverrides o;
  o.alpha = static_cast<Clock>(g.size());
  o.phases = static_cast<Clock>(g.size() + 1);
  o.rho = rho;
  return resolve_params(g, o, min_delta);
}

// Criteria 1-3 share their runs.
struct StabilizationTally {
  Outcome c1, c2, c3;
  std::size_t runs = 0;
  std::size_t max_rounds = 0;
  std::string max_rounds_at;
  std::size_t post_configs = 0;
  double seconds = 0;
};

StabilizationTally stabilization(const std::vector<Named>& graphs) {
  StabilizationTally t;
  const auto t0 = Clk::now();
  for (const Named& named : graphs) {
    const Graph& g = named.graph;
    const ProtocolParams params = unison_params(g, static_cast<Clock>(g.diameter()) + 1);
    const std::size_t bound = kRoundsPerProcess * g.size();
    for (std::uint64_t seed = 0; seed < kInitialConfigs; ++seed) {
      for (int kind = 0; kind < kDaemonKinds; ++kind) {
        ++t.runs;
        const std::string at = where(named, kind, seed);
        Daemon d = make_daemon(kind, seed + 1, g.size());
        const Configuration conf0 = random_configuration(g.size(), params.clock(), seed * 7919 + 13);
        std::optional<Execution> to_wu;
        try {
          to_wu = run(g, params, conf0, d,
                      StopCondition{kMaxStabilizationSteps, [&](const Execution& e) {
                                      return check_wu(g, params, e.last());
                                    }});
        } catch (const DeadlockError&) {
          t.c1.fail(at + ": deadlock before WU");
          continue;
        }
        if (!check_wu(g, params, to_wu->last())) {
          t.c1.fail(at + ": no WU within " + std::to_string(kMaxStabilizationSteps) + " steps");
          continue;
        }
        const std::size_t rounds = rounds_until(*to_wu, to_wu->steps());
        if (rounds > t.max_rounds) {
          t.max_rounds = rounds;
          t.max_rounds_at = at;
        }
        if (rounds > bound) {
          t.c1.fail(at + ": " + std::to_string(rounds) + " rounds > " + std::to_string(bound));
        }

        std::optional<Execution> after;
        try {
          after = run(g, params, to_wu->last(), d, StopCondition{kClosureSteps, {}});
        } catch (const DeadlockError& e) {
          t.c2.fail(at + ": deadlock after WU at step " + std::to_string(e.execution().steps()));
          continue;
        }
        if (after->steps() != kClosureSteps) t.c2.fail(at + ": run stopped early");
        for (std::size_t s = 0; s <= after->steps(); ++s) {
          ++t.post_configs;
          const Configuration& c = after->configuration(s);
          if (!check_wu(g, params, c)) {
            t.c2.fail(at + ": WU lost " + std::to_string(s) + " steps after stabilizing");
            break;
          }
          if (!check_wu0(g, params, c)) {
            t.c3.fail(at + ": no intrinsic delay " + std::to_string(s) + " steps after stabilizing");
            break;
          }
        }
      }
    }
  }
  t.seconds = seconds_since(t0);
  if (t.seconds > kRuntimeBudgetSeconds) {
    t.c1.fail("took " + std::to_string(t.seconds) + " s");
  }
  std::ostringstream d1, d2;
  d1 << t.runs << " runs on " << graphs.size() << " graphs, max " << t.max_rounds
     << " rounds to WU (" << t.max_rounds_at << "), " << static_cast<int>(t.seconds * 1000)
     << " ms";
  t.c1.detail = d1.str();
  d2 << t.post_configs << " configurations checked";
  t.c2.detail = d2.str();
  t.c3.detail = d2.str();
  return t;
}

Outcome deadlock_witness() {
  Outcome o;
  const Graph ring = families::ring(5);
  const ProtocolParams params{5, 5, 1, 1};
  const Configuration turn = from_clocks(std::vector<Clock>{0, 1, 2, 3, 4});
  if (params.period() != 5) o.fail("period is not 5");
  if (check_params(ring, params).empty()) o.fail("period 5 reported as safe");
  if (!check_wu(ring, params, turn)) o.fail("witness is not locally correct");
  if (!enabled_processes(ring, params, turn).empty()) o.fail("some process is enabled");
  Daemon d = Daemon::synchronous();
  try {
    run(ring, params, turn, d, StopCondition{10, {}});
    o.fail("engine ran without reporting deadlock");
  } catch (const DeadlockError& e) {
    if (e.code() != Errc::Deadlock) o.fail("wrong error code");
    if (e.execution().steps() != 0) o.fail("deadlock reported late");
  }
  o.detail = "ring5, K=5, delta=1, clocks 0,1,2,3,4";
  return o;
}

constexpr std::size_t kCausalSeeds = 3;
constexpr Clock kObservedPhases = 4;

std::optional<StabilizedRun> stabilized(const Graph& g, const ProtocolParams& params, int kind,
                                        std::uint64_t seed, Clock span, Outcome& o,
                                        const std::string& at) {
  Daemon d = make_daemon(kind, seed + 1, g.size());
  const Configuration conf0 = random_configuration(g.size(), params.clock(), seed * 31 + 5);
  try {
    return run_stabilized(g, params, conf0, d, [span](Clock b) { return b + span; });
  } catch (const std::exception& e) {
    o.fail(at + ": " + e.what());
    return std::nullopt;
  }
}

Outcome barrier(const std::vector<Named>& graphs) {
  Outcome o;
  std::size_t phases = 0, pairs = 0;
  for (const Named& named : graphs) {
    const Graph& g = named.graph;
    std::vector<Clock> radii{1, 2, static_cast<Clock>(g.diameter())};
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    for (Clock rho : radii) {
      const ProtocolParams params = unison_params(g, 1, rho);
      for (int kind = 0; kind < kDaemonKinds; ++kind) {
        for (std::uint64_t seed = 0; seed < kCausalSeeds; ++seed) {
          const std::string at = where(named, kind, seed) + "/rho" + std::to_string(rho);
          auto sr = stabilized(g, params, kind, seed, kObservedPhases * params.delta, o, at);
          if (!sr) continue;
          const BarrierReport rep =
              check_barrier(g, params, sr->dag, sr->lifted, static_cast<std::size_t>(rho));
          phases += rep.phases_checked;
          pairs += rep.pairs_checked;
          if (rep.phases_checked == 0) o.fail(at + ": no phase observed");
          if (!rep.violations.empty()) o.fail(at + ": " + rep.violations.front());
        }
      }
    }
  }
  o.detail = std::to_string(phases) + " phases, " + std::to_string(pairs) + " pairs, rho in {1,2,D}";
  return o;
}

Outcome waves(const std::vector<Named>& graphs) {
  Outcome o;
  std::size_t wavelets = 0, wave_checks = 0, strong = 0, negatives = 0;
  for (const Named& named : graphs) {
    const Graph& g = named.graph;
    const Clock diam = static_cast<Clock>(g.diameter());
    const Clock lsp = static_cast<Clock>(unison::testing::lsp_by_permutation(g));
    const bool small = g.size() <= 5;
    std::vector<Clock> deltas{1, diam};
    if (small) deltas.push_back(lsp);
    std::sort(deltas.begin(), deltas.end());
    deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
    for (Clock delta : deltas) {
      ParamOverrides ov;
      ov.delta = delta;
      const ProtocolParams params = resolve_params(g, ov);
      for (int kind = 0; kind < kDaemonKinds; ++kind) {
        for (std::uint64_t seed = 0; seed < kCausalSeeds; ++seed) {
          const std::string at = where(named, kind, seed) + "/delta" + std::to_string(delta);
          auto sr = stabilized(g, params, kind, seed, kObservedPhases * delta, o, at);
          if (!sr) continue;
          const Clock top = last_complete_cut(sr->dag, sr->lifted);
          for (Clock k = sr->lifted.bottom; k + delta <= top; ++k) {
            const Cut upper = cut_at(sr->dag, sr->lifted, k + delta);
            const Segment seg(sr->dag, cut_at(sr->dag, sr->lifted, k), upper);
            const std::string seg_at = at + "/k" + std::to_string(k - sr->lifted.bottom);
            ++wavelets;
            const Verdict wl =
                verify_wavelet(g, seg, upper.events, static_cast<std::size_t>(delta));
            if (!wl) o.fail(seg_at + ": wavelet: " + wl.detail);
            if (delta >= diam) {
              ++wave_checks;
              const Verdict w = verify_wave(g, seg, upper.events);
              if (!w) o.fail(seg_at + ": wave: " + w.detail);
            }
            if (small && delta >= lsp) {
              ++strong;
              const Verdict sw = verify_strong_wave(g, seg, upper.events, exhaustive_limit());
              if (!sw) o.fail(seg_at + ": strong wave: " + sw.detail);
            }
          }
        }
      }
    }

    // Negative control: one step short of the diameter, synchronously.
    if (diam < 2) continue;
    ParamOverrides ov;
    ov.delta = diam - 1;
    const ProtocolParams params = resolve_params(g, ov);
    const std::string at = where(named, 0, 0) + "/delta" + std::to_string(diam - 1);
    auto sr = stabilized(g, params, 0, 0, kObservedPhases * params.delta, o, at);
    if (!sr) continue;
    const Clock top = last_complete_cut(sr->dag, sr->lifted);
    for (Clock k = sr->lifted.bottom; k + params.delta <= top; ++k) {
      const Cut upper = cut_at(sr->dag, sr->lifted, k + params.delta);
      const Segment seg(sr->dag, cut_at(sr->dag, sr->lifted, k), upper);
      ++negatives;
      if (verify_wave(g, seg, upper.events)) o.fail(at + ": wave passed with delta < D");
      if (small && verify_strong_wave(g, seg, upper.events, exhaustive_limit())) {
        o.fail(at + ": strong wave passed with delta < D");
      }
    }
  }
  o.detail = std::to_string(wavelets) + " wavelet, " + std::to_string(wave_checks) + " wave, " +
             std::to_string(strong) + " strong-wave segments; " + std::to_string(negatives) +
             " segments rejected with delta = D-1";
  return o;
}

std::size_t check_report(const ComputationReport& rep, std::size_t wanted, Outcome& o,
                         const std::string& at) {
  std::size_t complete = 0;
  for (const PhaseResult& r : rep.phases) {
    if (!r.complete) continue;
    ++complete;
    if (r.values != r.expected) {
      o.fail(at + ": phase " + std::to_string(r.phase) + " differs from the oracle");
    }
  }
  if (complete != wanted) o.fail(at + ": " + std::to_string(complete) + " complete phases");
  return complete;
}

Outcome global_infimum(const std::vector<Named>& graphs) {
  Outcome o;
  std::mt19937_64 rng(70);
  struct Reference {
    InfimumOp op;
    std::function<Value(Value, Value)> plain;
  };
  const std::vector<Reference> ops{
      {operators::min(), [](Value a, Value b) { return std::min(a, b); }},
      {operators::gcd(), [](Value a, Value b) { return std::gcd(a, b); }},
      {operators::bit_and(8), [](Value a, Value b) { return a & b; }},
  };
  std::size_t decided = 0;
  for (const Named& named : graphs) {
    const Graph& g = named.graph;
    for (const auto& [op, plain] : ops) {
      for (std::size_t i = 0; i < kInputVectors; ++i) {
        TaskSpec task;
        task.op = op;
        for (Process p = 0; p < g.size(); ++p) {
          const Value x = static_cast<Value>(rng() % 256);
          task.inputs.push_back(op.name() == operators::gcd().name() ? 6 * (x % 40 + 1) : x);
        }
        // Independent fold, plain loop over the inputs.
        Value folded = task.inputs[0];
        for (Value x : task.inputs) folded = plain(folded, x);
        const int kind = static_cast<int>(i % kDaemonKinds);
        const std::string at = where(named, kind, i) + "/" + op.name();
        if (task_oracle(g, task) != std::vector<Value>(g.size(), folded)) {
          o.fail(at + ": oracle disagrees with the plain fold");
        }
        const ProtocolParams params = unison_params(g, required_delta(g, task));
        if (params.delta != static_cast<Clock>(g.diameter()) + 1) o.fail(at + ": delta != D+1");
        Daemon d = make_daemon(kind, i + 1, g.size());
        ComputationOptions opts;
        opts.init_seed = rng();
        try {
          const ComputationReport rep = run_computation(g, params, task, d, opts);
          decided += check_report(rep, opts.phases, o, at) * g.size();
          for (const PhaseResult& r : rep.phases) {
            if (r.complete && r.values != std::vector<Value>(g.size(), folded)) {
              o.fail(at + ": result differs from the plain fold");
            }
          }
        } catch (const std::exception& e) {
          o.fail(at + ": " + e.what());
        }
      }
    }
  }
  o.detail = std::to_string(decided) + " decided values, ops min/gcd/bitand";
  return o;
}

Outcome ball_infimum(const std::vector<Named>& graphs) {
  Outcome o;
  std::mt19937_64 rng(80);
  const auto dist_all = [](const Graph& g) { return unison::testing::floyd_warshall(g); };
  std::size_t decided = 0, intermediate = 0;
  for (const Named& named : graphs) {
    const Graph& g = named.graph;
    const auto dist = dist_all(g);
    for (std::size_t rho : {std::size_t{1}, std::size_t{2}}) {
      for (std::size_t i = 0; i < kInputVectors / 2; ++i) {
        TaskSpec task;
        task.kind = TaskKind::BallInfimum;
        task.op = operators::min();
        task.rho = rho;
        for (Process p = 0; p < g.size(); ++p) task.inputs.push_back(static_cast<Value>(rng() % 100));
        // Radius-a minima from the distance matrix.
        auto ball_min = [&](std::size_t a) {
          std::vector<Value> out(g.size(), kInfinity);
          for (Process p = 0; p < g.size(); ++p) {
            for (Process q = 0; q < g.size(); ++q) {
              if (dist[p][q] <= a) out[p] = std::min(out[p], task.inputs[q]);
            }
          }
          return out;
        };
        const int kind = static_cast<int>(i % kDaemonKinds);
        const std::string at = where(named, kind, i) + "/rho" + std::to_string(rho);
        if (oracle_ball_infimum(g, task.op, task.inputs, rho) != ball_min(rho)) {
          o.fail(at + ": oracle disagrees with the distance matrix");
        }
        const ProtocolParams params = unison_params(g, required_delta(g, task), static_cast<Clock>(rho));
        if (params.delta != static_cast<Clock>(rho) + 1) o.fail(at + ": delta != rho+1");
        Daemon d = make_daemon(kind, i + 1, g.size());
        ComputationOptions opts;
        opts.init_seed = rng();
        try {
          const ComputationReport rep = run_computation(g, params, task, d, opts);
          decided += check_report(rep, opts.phases, o, at) * g.size();
          const CausalDag dag = build_dag(g, rep.execution);
          const LiftedClocks lc = lift(g, params, dag, rep.execution);
          const Clock first = first_full_phase(lc, params.delta);
          for (Clock u = first; u < first + static_cast<Clock>(opts.phases); ++u) {
            for (std::size_t a = 1; a <= rho; ++a) {
              const Cut c = cut_at(dag, lc, u * params.delta + static_cast<Clock>(a));
              const auto v1 = ball_min(a - 1);
              const auto v2 = ball_min(a);
              for (Process p = 0; p < g.size(); ++p) {
                ++intermediate;
                const ProcessState& s = rep.execution.configuration(dag.event(c[p]).time)[p];
                if (s.v1 != v1[p] || s.v2 != v2[p]) {
                  o.fail(at + ": registers of " + std::to_string(p) + " at cut " +
                         std::to_string(a) + " of phase " + std::to_string(u));
                }
              }
            }
          }
        } catch (const std::exception& e) {
          o.fail(at + ": " + e.what());
        }
      }
    }
  }
  o.detail = std::to_string(decided) + " decided values, " + std::to_string(intermediate) +
             " intermediate register pairs, rho in {1,2}";
  return o;
}

Outcome r_operator(const std::vector<Named>& graphs) {
  Outcome o;
  std::mt19937_64 rng(90);
  std::size_t decided = 0, graphs_used = 0;
  for (const Named& named : graphs) {
    const Graph& g = named.graph;
    if (g.size() > 6) continue;
    ++graphs_used;
    const Clock lsp = static_cast<Clock>(unison::testing::lsp_by_permutation(g));
    for (std::size_t i = 0; i < kInputVectors / 2; ++i) {
      EdgeWeights w;
      for (const Edge& e : g.edges()) {
        w[{e.u, e.v}] = static_cast<Value>(rng() % 7);
        if (i % 2 == 1) w[{e.v, e.u}] = static_cast<Value>(rng() % 7);
      }
      TaskSpec task;
      task.kind = TaskKind::ROperator;
      task.op = operators::min();
      task.rsys = min_plus(g, w);
      for (Process p = 0; p < g.size(); ++p) {
        task.inputs.push_back(rng() % 3 == 0 ? kInfinity : static_cast<Value>(rng() % 30));
      }
      const int kind = static_cast<int>(i % kDaemonKinds);
      const std::string at = where(named, kind, i);
      const std::vector<Value> shortest = unison::testing::dijkstra_from_inputs(g, w, task.inputs);
      if (oracle_r_operator(g, *task.rsys, task.inputs) != shortest) {
        o.fail(at + ": oracle disagrees with Dijkstra");
      }
      const ProtocolParams params = unison_params(g, required_delta(g, task));
      if (params.delta < lsp) o.fail(at + ": delta below the longest simple path");
      Daemon d = make_daemon(kind, i + 1, g.size());
      ComputationOptions opts;
      opts.init_seed = rng();
      try {
        const ComputationReport rep = run_computation(g, params, task, d, opts);
        decided += check_report(rep, opts.phases, o, at) * g.size();
        for (const PhaseResult& r : rep.phases) {
          if (r.complete && r.values != shortest) o.fail(at + ": result differs from Dijkstra");
        }
      } catch (const std::exception& e) {
        o.fail(at + ": " + e.what());
      }
    }
  }
  o.detail = std::to_string(decided) + " decided values on " + std::to_string(graphs_used) +
             " graphs with n <= 6";
  return o;
}

// Lifts a WU configuration by walking the graph from process 0, adding the
// signed local difference in {-1, 0, 1} across every edge.
std::vector<Clock> lift_by_bfs(const Graph& g, const Configuration& c, Clock period) {
  std::vector<Clock> out(g.size(), 0);
  std::vector<bool> seen(g.size(), false);
  std::vector<Process> queue{0};
  out[0] = c[0].r;
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Process p = queue[i];
    for (Process q : g.neighbors(p)) {
      if (seen[q]) continue;
      Clock diff = ((c[q].r - c[p].r) % period + period) % period;
      if (diff == period - 1) diff = -1;
      out[q] = out[p] + diff;
      seen[q] = true;
      queue.push_back(q);
    }
  }
  return out;
}

Outcome phase_costs(const std::vector<Named>& graphs) {
  Outcome o;
  std::size_t phases = 0;
  for (const Named& named : graphs) {
    const Graph& g = named.graph;
    const ProtocolParams params = unison_params(g, static_cast<Clock>(g.diameter()) + 1);
    const Clock delta = params.delta;
    const std::size_t na_expected = g.size() * static_cast<std::size_t>(delta);
    const std::size_t reads_expected = 2 * static_cast<std::size_t>(delta) * g.edges().size();
    for (std::uint64_t seed = 0; seed < kCausalSeeds; ++seed) {
      const std::string at = where(named, 0, seed);
      auto sr = stabilized(g, params, 0, seed, kObservedPhases * delta, o, at);
      if (!sr) continue;
      const Execution& e = sr->execution;

      std::vector<Clock> lifted = lift_by_bfs(g, e.initial(), params.period());
      const Clock lowest_start = *std::max_element(lifted.begin(), lifted.end());
      std::map<Clock, std::pair<std::size_t, std::size_t>> counted;
      for (const Transition& tr : e.transitions()) {
        for (const EventRecord& r : tr.events) {
          if (r.action != Action::Normal) o.fail(at + ": non-normal action after WU");
          const Clock v = ++lifted[r.process];
          auto& [na, reads] = counted[floor_div(v, delta)];
          ++na;
          reads += g.neighbors(r.process).size();
        }
      }
      const Clock highest_end = *std::min_element(lifted.begin(), lifted.end());
      std::size_t own = 0;
      for (const auto& [u, c] : counted) {
        if (u * delta <= lowest_start || u * delta + delta - 1 > highest_end) continue;
        ++own;
        if (c.first != na_expected || c.second != reads_expected) {
          o.fail(at + ": recount of phase " + std::to_string(u) + " gives " +
                 std::to_string(c.first) + " actions, " + std::to_string(c.second) + " reads");
        }
      }
      const Clock first = first_full_phase(sr->lifted, delta);
      const Clock top = last_complete_cut(sr->dag, sr->lifted);
      std::size_t lib = 0;
      for (Clock u = first; u * delta + delta - 1 <= top; ++u) {
        ++lib;
        ++phases;
        const PhaseCost c = phase_cost(g, sr->dag, sr->lifted, delta, u);
        if (c.normal_actions != na_expected || c.reads != reads_expected) {
          o.fail(at + ": phase " + std::to_string(u) + " costs " +
                 std::to_string(c.normal_actions) + " actions, " + std::to_string(c.reads) +
                 " reads");
        }
      }
      if (lib == 0 || own == 0) o.fail(at + ": no complete phase");
      if (lib != own) o.fail(at + ": recount sees " + std::to_string(own) + " phases, not " +
                             std::to_string(lib));
    }
  }
  o.detail = std::to_string(phases) + " synchronous phases";
  return o;
}

bool report(int id, const char* title, const Outcome& o) {
  std::printf("%s %d %s: %s\n", o.passed ? "PASS" : "FAIL", id, title, o.detail.c_str());
  for (const std::string& f : o.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  return o.passed;
}

}  // namespace

int main() {
  const auto t0 = Clk::now();
  const std::vector<Named> graphs = corpus();
  bool ok = true;

  const StabilizationTally st = stabilization(graphs);
  ok &= report(1, "self-stabilization", st.c1);
  ok &= report(2, "closure", st.c2);
  ok &= report(3, "intrinsic delay after stabilization", st.c3);
  ok &= report(4, "deadlock witness", deadlock_witness());
  ok &= report(5, "barrier synchronization", barrier(graphs));
  ok &= report(6, "wavelets and waves", waves(graphs));
  ok &= report(7, "global infimum", global_infimum(graphs));
  ok &= report(8, "ball infimum", ball_infimum(graphs));
  ok &= report(9, "r-operator", r_operator(graphs));
  ok &= report(10, "cost per phase", phase_costs(graphs));

  std::printf("total %.1f s\n", seconds_since(t0));
  return ok ? 0 : 1;
}
