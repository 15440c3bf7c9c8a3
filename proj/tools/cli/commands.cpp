#include "cli/commands.hpp"

#include <atomic>
#include <ostream>
#include <sstream>
#include <thread>

#include "unison/computation.hpp"
#include "unison/error.hpp"

namespace unison::cli {

using nlohmann::json;

int cmd_simulate(const RunConfig& cfg, std::ostream& trace_out, std::ostream& summary_out) {
  Daemon daemon = make_daemon(cfg.daemon);
  StopCondition stop{cfg.max_steps, {}};
  bool deadlock = false;
  std::optional<Execution> exec;
  try {
    exec = run(cfg.graph, cfg.params, make_initial(cfg), daemon, stop);
  } catch (const DeadlockError& e) {
    deadlock = true;
    exec = e.execution();
  }
  const Summary summary = summarize(cfg.graph, cfg.params, *exec, deadlock);
  write_trace(trace_out, cfg.graph, cfg.params, *exec, summary);

  json out = summary_json(summary);
  out["graph"] = cfg.graph_label;
  out["params"] = params_json(cfg.params);
  out["daemon"] = to_string(cfg.daemon.kind);
  if (deadlock) out["deadlock_configuration"] = exec->last().clocks();
  for (const auto& problem : check_params(cfg.graph, cfg.params)) out["warnings"].push_back(problem);
  summary_out << out.dump(2) << '\n';
  return deadlock ? kDeadlock : kOk;
}

VerifyKind verify_kind_from_string(const std::string& name) {
  if (name == "wavelet") return VerifyKind::Wavelet;
  if (name == "wave") return VerifyKind::Wave;
  if (name == "strong-wave") return VerifyKind::StrongWave;
  throw Error(Errc::Config, "unknown verification kind '" + name + "'");
}

std::pair<Clock, Clock> parse_segment(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const Clock k1 = std::stoll(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const std::string rest = text.substr(colon + 1);
    const Clock k2 = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    if (k1 < 0 || k2 < k1) throw std::invalid_argument(text);
    return {k1, k2};
  } catch (const std::logic_error&) {
    throw Error(Errc::Config, "segment must be k1:k2 with 0 <= k1 <= k2, got '" + text + "'");
  }
}

int cmd_verify(const RunConfig& cfg, const std::optional<Trace>& trace,
               const VerifyOptions& options, std::ostream& out) {
  const Graph& g = trace ? trace->graph : cfg.graph;
  const ProtocolParams params = trace ? trace->params : cfg.params;
  const auto [k1, k2] = options.segment.value_or(std::pair<Clock, Clock>{0, params.delta});

  Execution exec = [&] {
    if (trace) return replay(*trace);
    Daemon daemon = make_daemon(cfg.daemon);
    auto target = [k2 = k2](Clock bottom) { return bottom + k2; };
    return run_stabilized(g, params, make_initial(cfg), daemon, target,
                          RunLimits{cfg.max_steps, cfg.max_steps})
        .execution;
  }();
  if (trace) {
    const auto wu = first_configuration(exec, [&](const Configuration& c) {
      return check_wu(g, params, c);
    });
    if (!wu) throw Error(Errc::NotStabilized, "trace never reaches WU");
    exec = exec.suffix(*wu);
  }

  const CausalDag dag = build_dag(g, exec);
  if (options.dag_out) *options.dag_out << dag.to_json() << '\n';
  const LiftedClocks lifted = lift(g, params, dag, exec);
  const Cut lower = cut_at(dag, lifted, lifted.bottom + k1);
  const Cut upper = cut_at(dag, lifted, lifted.bottom + k2);
  const Segment seg(dag, lower, upper);
  const std::vector<EventId> decide = upper.events;

  Verdict verdict;
  std::string kind_name;
  std::size_t k = options.k.value_or(static_cast<std::size_t>(params.delta));
  switch (options.kind) {
    case VerifyKind::Wavelet:
      kind_name = "wavelet";
      verdict = verify_wavelet(g, seg, decide, k);
      break;
    case VerifyKind::Wave:
      kind_name = "wave";
      k = g.diameter();
      verdict = verify_wave(g, seg, decide);
      break;
    case VerifyKind::StrongWave:
      kind_name = "strong-wave";
      k = g.diameter();
      verdict = verify_strong_wave(g, seg, decide, exhaustive_limit());
      break;
  }
  json rep{{"kind", kind_name},
           {"k", k},
           {"segment", {k1, k2}},
           {"bottom", lifted.bottom},
           {"params", params_json(params)},
           {"passed", verdict.passed},
           {"detail", verdict.detail}};
  out << rep.dump(2) << '\n';
  return verdict.passed ? kOk : kVerificationFailed;
}

namespace {

std::string show(Value v) { return v == kInfinity ? "inf" : std::to_string(v); }

}  // namespace

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.task) throw Error(Errc::MissingTask, "config has no 'task' section");
  Daemon daemon = make_daemon(cfg.daemon);
  ComputationOptions opts;
  opts.phases = cfg.phases;
  opts.initial = make_initial(cfg);
  opts.max_stabilization_steps = cfg.max_steps;
  opts.max_phase_steps = cfg.max_steps;
  const ComputationReport rep = run_computation(cfg.graph, cfg.params, *cfg.task, daemon, opts);

  out << "# task " << to_string(cfg.task->kind) << " op " << cfg.task->op.name() << " on "
      << cfg.graph_label << " K=" << cfg.params.phases << " alpha=" << cfg.params.alpha
      << " delta=" << cfg.params.delta << " rho=" << cfg.params.rho << '\n';
  out << "# stabilized after " << rep.stabilization_steps << " steps ("
      << rep.stabilization_rounds << " rounds), lifted base " << rep.bottom << '\n';
  out << "phase,complete,process,result,oracle,match\n";
  bool ok = true;
  for (const PhaseResult& r : rep.phases) {
    for (Process p = 0; p < r.values.size(); ++p) {
      const bool match = r.values[p] == r.expected[p];
      out << r.phase << ',' << (r.complete ? "yes" : "no") << ',' << p << ',' << show(r.values[p])
          << ',' << show(r.expected[p]) << ',' << (match ? "yes" : "no") << '\n';
    }
    if (r.complete && !r.matches) ok = false;
  }
  return ok ? kOk : kVerificationFailed;
}

namespace {

struct StatsJob {
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  DaemonKind daemon = DaemonKind::Synchronous;
};

std::string stats_row(const RunConfig& cfg, const StatsJob& job) {
  const Graph g = families::by_name(job.family, job.n, job.seed);
  const ProtocolParams params = resolve_params(g, cfg.overrides);

  DaemonSpec ds = cfg.daemon;
  ds.kind = job.daemon;
  ds.seed = job.seed;
  Daemon daemon = make_daemon(ds);
  const Configuration conf0 = random_configuration(g.size(), params.clock(), job.seed);

  std::ostringstream row;
  row << job.family << ',' << g.size() << ',' << params.phases << ',' << params.alpha << ','
      << params.delta << ',' << to_string(job.daemon) << ',' << job.seed << ',';
  try {
    // One full phase past the first complete one.
    auto target = [&](Clock bottom) { return (floor_div(bottom, params.delta) + 2) * params.delta; };
    StabilizedRun run = run_stabilized(g, params, conf0, daemon, target,
                                       RunLimits{cfg.max_steps, cfg.max_steps});
    Daemon again = make_daemon(ds);
    StopCondition stop{run.stabilization_steps + 1, {}};
    const Execution prefix = unison::run(g, params, conf0, again, stop);
    const auto wu0 = first_configuration(prefix, [&](const Configuration& c) {
      return check_wu0(g, params, c);
    });
    const Clock phase = first_full_phase(run.lifted, params.delta);
    const PhaseCost cost = phase_cost(g, run.dag, run.lifted, params.delta, phase);
    row << run.stabilization_rounds << ','
        << (wu0 ? std::to_string(rounds_until(prefix, *wu0)) : std::string()) << ','
        << cost.normal_actions << ',' << cost.reads;
  } catch (const Error&) {
    row << ",,,";
  }
  return row.str();
}

}  // namespace

int cmd_stats(const RunConfig& cfg, std::ostream& out, unsigned jobs) {
  std::vector<StatsJob> work;
  for (const auto& family : cfg.stats.families) {
    for (std::size_t n = cfg.stats.n_min; n <= cfg.stats.n_max; ++n) {
      if (family == "grid") {
        std::size_t side = 1;
        while (side * side < n) ++side;
        if (side * side != n) continue;
      }
      for (DaemonKind d : cfg.stats.daemons) {
        for (std::uint64_t s = 1; s <= cfg.stats.seeds; ++s) work.push_back({family, n, s, d});
      }
    }
  }

  std::vector<std::string> rows(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) rows[i] = stats_row(cfg, work[i]);
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  out << kStatsHeader << '\n';
  for (const auto& row : rows) out << row << '\n';
  return kOk;
}

}  // namespace unison::cli
