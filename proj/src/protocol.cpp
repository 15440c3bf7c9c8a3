#include "unison/protocol.hpp"

#include <algorithm>
#include <random>

#include "unison/error.hpp"

namespace unison {

std::vector<Clock> Configuration::clocks() const {
  std::vector<Clock> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(s.r);
  return out;
}

Configuration from_clocks(std::span<const Clock> clocks) {
  Configuration conf;
  conf.states.reserve(clocks.size());
  for (Clock c : clocks) conf.states.push_back(ProcessState{.r = c});
  return conf;
}

Configuration in_unison(std::size_t n, Clock value) {
  std::vector<Clock> clocks(n, value);
  return from_clocks(clocks);
}

std::vector<std::string> check_params(const Graph& g, const ProtocolParams& params) {
  std::vector<std::string> problems;
  const auto cg = static_cast<Clock>(cyclomatic_upper_bound(g));
  if (params.period() <= cg) {
    problems.push_back("delta*K = " + std::to_string(params.period()) +
                       " does not exceed the cyclomatic bound " + std::to_string(cg));
  }
  if (params.delta < params.rho) {
    problems.push_back("delta = " + std::to_string(params.delta) + " is below rho = " +
                       std::to_string(params.rho));
  }
  return problems;
}

ProtocolParams resolve_params(const Graph& g, const ParamOverrides& o, Clock min_delta) {
  const auto n = static_cast<Clock>(g.size());
  ProtocolParams params;
  params.alpha = o.alpha.value_or(n);
  params.rho = o.rho.value_or(1);
  params.delta = o.delta.value_or(std::max(params.rho, min_delta));
  params.phases = o.phases.value_or(n + 1);
  if (params.alpha < 1 || params.rho < 1 || params.delta < 1 || params.phases < 1) {
    throw Error(Errc::InvalidParams, "K, alpha, delta and rho must all be positive");
  }
  if (!o.unsafe) {
    params.phases = std::max<Clock>(params.phases, 3);
    const auto cg = static_cast<Clock>(cyclomatic_upper_bound(g));
    while (params.period() <= cg) ++params.phases;
  }
  if (params.period() < 2) {
    throw Error(Errc::InvalidParams, "clock period delta*K must be at least 2");
  }
  return params;
}

Configuration random_configuration(std::size_t n, const IncSystem& sys, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Clock> clock(sys.bottom(), sys.period() - 1);
  std::uniform_int_distribution<Value> garbage(-1000, 1000);
  Configuration conf;
  conf.states.resize(n);
  for (auto& s : conf.states) {
    s.r = clock(rng);
    s.v0 = garbage(rng);
    s.v1 = garbage(rng);
    s.v2 = garbage(rng);
    s.res = garbage(rng);
  }
  return conf;
}

bool check_wu(const Graph& g, const ProtocolParams& params, const Configuration& conf) {
  auto clocks = conf.clocks();
  return check_wu(g, params.clock(), clocks);
}

bool check_wu0(const Graph& g, const ProtocolParams& params, const Configuration& conf) {
  auto clocks = conf.clocks();
  return check_wu0(g, params.clock(), clocks);
}

const char* to_string(Action a) noexcept {
  switch (a) {
    case Action::Normal: return "NA";
    case Action::Convergence: return "CA";
    case Action::Reset: return "RA";
  }
  return "?";
}

const char* to_string(CsTag t) noexcept {
  switch (t) {
    case CsTag::None: return "none";
    case CsTag::Cs1: return "CS1";
    case CsTag::Cs2: return "CS2";
  }
  return "?";
}

Guards guards(const Graph& g, const ProtocolParams& params, const Configuration& conf,
              Process p) {
  const IncSystem sys = params.clock();
  const Clock r = conf[p].r;
  const Clock next = sys.phi(r);

  bool all_tail_above = true;
  bool all_stab_close = true;
  bool all_equal_or_next = true;
  for (Process q : g.neighbors(p)) {
    const Clock rq = conf[q].r;
    all_tail_above = all_tail_above && sys.in_tail(rq) && r <= rq;
    all_stab_close =
        all_stab_close && sys.in_stab(rq) && (r == rq || r == sys.phi(rq) || next == rq);
    all_equal_or_next = all_equal_or_next && (r == rq || rq == next);
  }

  Guards out;
  out.convergence = sys.in_tail_star(r) && all_tail_above;
  out.locally_correct = sys.in_stab(r) && all_stab_close;
  out.normal = sys.in_stab(r) && all_equal_or_next;
  // init = tail: a process already in the reset ramp is never reset again.
  out.reset = !out.locally_correct && !sys.in_tail(r);
  return out;
}

std::vector<Process> enabled_processes(const Graph& g, const ProtocolParams& params,
                                       const Configuration& conf) {
  std::vector<Process> out;
  for (Process p = 0; p < g.size(); ++p) {
    if (is_enabled(g, params, conf, p)) out.push_back(p);
  }
  return out;
}

Applied apply(const Graph& g, const ProtocolParams& params, const Configuration& conf,
              Process p, const CriticalSections& cs) {
  const Guards gd = guards(g, params, conf, p);
  const int active = int(gd.normal) + int(gd.convergence) + int(gd.reset);
  if (active == 0) {
    throw Error(Errc::NotEnabled, "process " + std::to_string(p) + " has no enabled action");
  }
  if (active > 1) {
    throw Error(Errc::GuardConflict, "process " + std::to_string(p) + " has " +
                                         std::to_string(active) + " enabled actions");
  }

  const IncSystem sys = params.clock();
  Applied out{conf[p], EventRecord{.process = p, .before = conf[p].r}};
  if (gd.normal) {
    out.record.action = Action::Normal;
    out.record.reads = g.degree(p);
    const bool phase_end = residue(conf[p].r, params.delta) == params.delta - 1;
    out.record.cs = phase_end ? CsTag::Cs2 : CsTag::Cs1;
    const auto& handler = phase_end ? cs.cs2 : cs.cs1;
    if (handler) out.state = handler(g, conf, p);
    out.state.r = sys.phi(conf[p].r);
  } else if (gd.convergence) {
    out.record.action = Action::Convergence;
    out.state.r = sys.phi(conf[p].r);
  } else {
    out.record.action = Action::Reset;
    out.state.r = sys.bottom();
  }
  out.record.after = out.state.r;
  return out;
}

StepResult step(const Graph& g, const ProtocolParams& params, const Configuration& conf,
                std::span<const Process> chosen, const CriticalSections& cs) {
  if (chosen.empty()) throw Error(Errc::EmptyChoice, "daemon chose no process");
  StepResult out{conf, {}};
  out.events.reserve(chosen.size());
  std::vector<Process> order(chosen.begin(), chosen.end());
  std::sort(order.begin(), order.end());
  if (std::adjacent_find(order.begin(), order.end()) != order.end()) {
    throw Error(Errc::BadIndex, "a process was chosen twice in one step");
  }
  for (Process p : order) {
    if (p >= g.size()) throw Error(Errc::BadIndex, "chosen process out of range");
    Applied a = apply(g, params, conf, p, cs);
    out.next[p] = a.state;
    out.events.push_back(a.record);
  }
  return out;
}

}  // namespace unison
