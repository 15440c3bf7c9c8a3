#include "cli/trace.hpp"

#include <istream>
#include <ostream>

#include "cli/run_config.hpp"
#include "unison/error.hpp"

namespace unison::cli {

using nlohmann::json;

Summary summarize(const Graph& g, const ProtocolParams& params, const Execution& exec,
                  bool deadlock) {
  Summary s;
  s.steps = exec.steps();
  s.rounds = count_rounds(exec);
  s.deadlock = deadlock;
  const auto wu = first_configuration(exec, [&](const Configuration& c) {
    return check_wu(g, params, c);
  });
  if (wu) {
    s.steps_to_wu = *wu;
    s.rounds_to_wu = rounds_until(exec, *wu);
  }
  const auto wu0 = first_configuration(exec, [&](const Configuration& c) {
    return check_wu0(g, params, c);
  });
  if (wu0) s.rounds_to_wu0 = rounds_until(exec, *wu0);
  return s;
}

json summary_json(const Summary& s) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); };
  return {{"type", "summary"},
          {"steps", s.steps},
          {"rounds", s.rounds},
          {"steps_to_wu", opt(s.steps_to_wu)},
          {"rounds_to_wu", opt(s.rounds_to_wu)},
          {"rounds_to_wu0", opt(s.rounds_to_wu0)},
          {"deadlock", s.deadlock}};
}

json header_record(const Graph& g, const ProtocolParams& params, const Configuration& initial) {
  json states = json::array();
  for (const ProcessState& s : initial.states) states.push_back({s.r, s.v0, s.v1, s.v2, s.res});
  return {{"type", "header"},
          {"schema", kTraceSchema},
          {"graph", graph_json(g)},
          {"params", params_json(params)},
          {"initial", initial.clocks()},
          {"states", states}};
}

json step_record(std::size_t step, const Transition& tr) {
  json events = json::array();
  for (const EventRecord& e : tr.events) {
    events.push_back({{"p", e.process},
                      {"action", to_string(e.action)},
                      {"cs", to_string(e.cs)},
                      {"before", e.before},
                      {"after", e.after}});
  }
  return {{"type", "step"}, {"step", step}, {"chosen", tr.chosen}, {"events", events}};
}

void write_trace(std::ostream& out, const Graph& g, const ProtocolParams& params,
                 const Execution& exec, const Summary& summary) {
  out << header_record(g, params, exec.initial()).dump() << '\n';
  for (std::size_t t = 0; t < exec.steps(); ++t) {
    out << step_record(t, exec.transition(t)).dump() << '\n';
  }
  out << summary_json(summary).dump() << '\n';
}

namespace {

Action action_from(const std::string& s) {
  for (auto a : {Action::Normal, Action::Convergence, Action::Reset}) {
    if (s == to_string(a)) return a;
  }
  throw Error(Errc::Config, "unknown action tag '" + s + "'");
}

CsTag cs_from(const std::string& s) {
  for (auto c : {CsTag::None, CsTag::Cs1, CsTag::Cs2}) {
    if (s == to_string(c)) return c;
  }
  throw Error(Errc::Config, "unknown CS tag '" + s + "'");
}

}  // namespace

Trace read_trace(std::istream& in) {
  Trace trace;
  bool have_header = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const json rec = json::parse(line);
      const auto type = rec.at("type").get<std::string>();
      if (type == "header") {
        if (rec.at("schema") != kTraceSchema) {
          throw Error(Errc::Config, "unsupported trace schema " + rec.at("schema").dump());
        }
        trace.graph = graph_from_json(rec.at("graph"));
        const json& p = rec.at("params");
        trace.params = ProtocolParams{p.at("K").get<Clock>(), p.at("alpha").get<Clock>(),
                                      p.at("delta").get<Clock>(), p.at("rho").get<Clock>()};
        for (const json& s : rec.at("states")) {
          trace.initial.states.push_back(
              {s.at(0).get<Clock>(), s.at(1).get<Value>(), s.at(2).get<Value>(),
               s.at(3).get<Value>(), s.at(4).get<Value>()});
        }
        have_header = true;
      } else if (type == "step") {
        if (!have_header) throw Error(Errc::Config, "step record before the header");
        Transition tr;
        tr.chosen = rec.at("chosen").get<std::vector<Process>>();
        for (const json& e : rec.at("events")) {
          EventRecord ev;
          ev.process = e.at("p").get<Process>();
          ev.action = action_from(e.at("action").get<std::string>());
          ev.cs = cs_from(e.at("cs").get<std::string>());
          ev.before = e.at("before").get<Clock>();
          ev.after = e.at("after").get<Clock>();
          tr.events.push_back(ev);
        }
        trace.transitions.push_back(std::move(tr));
      } else if (type == "summary") {
        trace.deadlock = rec.value("deadlock", false);
      }
    } catch (const json::exception& e) {
      throw Error(Errc::Config, "trace line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_header) throw Error(Errc::Config, "trace has no header record");
  return trace;
}

Execution replay(const Trace& trace) {
  Schedule schedule;
  for (const Transition& tr : trace.transitions) schedule.push_back(tr.chosen);
  Daemon daemon = Daemon::replay(schedule);
  StopCondition stop{trace.transitions.size(), {}};
  Execution exec = [&] {
    try {
      return run(trace.graph, trace.params, trace.initial, daemon, stop);
    } catch (const DeadlockError& e) {
      if (e.execution().steps() != trace.transitions.size()) throw;
      return e.execution();
    }
  }();
  for (std::size_t t = 0; t < exec.steps(); ++t) {
    const auto& got = exec.transition(t).events;
    const auto& want = trace.transitions[t].events;
    bool same = got.size() == want.size();
    for (std::size_t i = 0; same && i < got.size(); ++i) {
      same = got[i].process == want[i].process && got[i].action == want[i].action &&
             got[i].cs == want[i].cs && got[i].before == want[i].before &&
             got[i].after == want[i].after;
    }
    if (!same) throw Error(Errc::ReplayMismatch, "step " + std::to_string(t) + " diverges");
  }
  return exec;
}

}  // namespace unison::cli
