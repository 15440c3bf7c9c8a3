#include "unison/scheduler.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace unison {

const char* to_string(DaemonKind k) noexcept {
  switch (k) {
    case DaemonKind::Synchronous: return "synchronous";
    case DaemonKind::RandomSubset: return "random-subset";
    case DaemonKind::SingleMin: return "single-min";
    case DaemonKind::SingleRandom: return "single-random";
    case DaemonKind::Starving: return "starving";
    case DaemonKind::Replay: return "replay";
  }
  return "?";
}

DaemonKind daemon_kind_from_string(const std::string& name) {
  for (auto k : {DaemonKind::Synchronous, DaemonKind::RandomSubset, DaemonKind::SingleMin,
                 DaemonKind::SingleRandom, DaemonKind::Starving, DaemonKind::Replay}) {
    if (name == to_string(k)) return k;
  }
  throw Error(Errc::Config, "unknown daemon kind '" + name + "'");
}

Daemon Daemon::synchronous() { return Daemon(DaemonKind::Synchronous); }

Daemon Daemon::random_subset(std::uint64_t seed, double bias) {
  Daemon d(DaemonKind::RandomSubset, seed);
  d.bias_ = bias;
  return d;
}

Daemon Daemon::single_min() { return Daemon(DaemonKind::SingleMin); }

Daemon Daemon::single_random(std::uint64_t seed) {
  return Daemon(DaemonKind::SingleRandom, seed);
}

Daemon Daemon::starving(Process victim, std::uint64_t seed) {
  Daemon d(DaemonKind::Starving, seed);
  d.victim_ = victim;
  return d;
}

Daemon Daemon::replay(Schedule schedule) {
  Daemon d(DaemonKind::Replay);
  d.schedule_ = std::move(schedule);
  return d;
}

std::string Daemon::name() const {
  std::string out = to_string(kind_);
  switch (kind_) {
    case DaemonKind::RandomSubset:
    case DaemonKind::SingleRandom:
      out += "(seed=" + std::to_string(seed_) + ")";
      break;
    case DaemonKind::Starving:
      out += "(victim=" + std::to_string(victim_) + ",seed=" + std::to_string(seed_) + ")";
      break;
    default:
      break;
  }
  return out;
}

std::vector<Process> Daemon::choose(const std::vector<Process>& enabled, const Configuration& conf,
                                    std::size_t step_index) {
  if (enabled.empty()) throw Error(Errc::EmptyChoice, "no enabled process to choose from");
  auto pick_one = [&](const std::vector<Process>& from) {
    std::uniform_int_distribution<std::size_t> idx(0, from.size() - 1);
    return std::vector<Process>{from[idx(rng_)]};
  };
  switch (kind_) {
    case DaemonKind::Synchronous:
      return enabled;
    case DaemonKind::RandomSubset: {
      std::bernoulli_distribution coin(bias_);
      std::vector<Process> out;
      for (Process p : enabled) {
        if (coin(rng_)) out.push_back(p);
      }
      if (out.empty()) return pick_one(enabled);
      return out;
    }
    case DaemonKind::SingleMin: {
      Process best = enabled.front();
      for (Process p : enabled) {
        if (conf[p].r < conf[best].r) best = p;
      }
      return {best};
    }
    case DaemonKind::SingleRandom:
      return pick_one(enabled);
    case DaemonKind::Starving: {
      std::vector<Process> others;
      std::copy_if(enabled.begin(), enabled.end(), std::back_inserter(others),
                   [&](Process p) { return p != victim_; });
      if (others.empty()) return enabled;
      std::bernoulli_distribution coin(0.5);
      std::vector<Process> out;
      for (Process p : others) {
        if (coin(rng_)) out.push_back(p);
      }
      if (out.empty()) return pick_one(others);
      return out;
    }
    case DaemonKind::Replay: {
      if (step_index >= schedule_.size()) {
        throw Error(Errc::ReplayMismatch,
                    "schedule exhausted at step " + std::to_string(step_index));
      }
      std::vector<Process> out;
      for (Process p : schedule_[step_index]) {
        if (std::binary_search(enabled.begin(), enabled.end(), p)) out.push_back(p);
      }
      if (out.empty()) {
        throw Error(Errc::ReplayMismatch, "recorded choice at step " +
                                              std::to_string(step_index) +
                                              " has no enabled process");
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return enabled;
}

Execution::Execution(Configuration initial, std::vector<Process> enabled) {
  configs_.push_back(std::move(initial));
  enabled_.push_back(std::move(enabled));
}

void Execution::push(Transition tr, Configuration next, std::vector<Process> enabled) {
  transitions_.push_back(std::move(tr));
  configs_.push_back(std::move(next));
  enabled_.push_back(std::move(enabled));
}

Execution Execution::suffix(std::size_t t) const {
  Execution out(configs_.at(t), enabled_.at(t));
  for (std::size_t i = t; i < transitions_.size(); ++i) {
    out.push(transitions_[i], configs_[i + 1], enabled_[i + 1]);
  }
  return out;
}

Schedule Execution::schedule() const {
  Schedule out;
  out.reserve(transitions_.size());
  for (const auto& tr : transitions_) out.push_back(tr.chosen);
  return out;
}

DeadlockError::DeadlockError(Execution execution)
    : Error(Errc::Deadlock, "no process enabled after " + std::to_string(execution.steps()) +
                                " steps"),
      execution_(std::move(execution)) {}

Execution run(const Graph& g, const ProtocolParams& params, Configuration conf0, Daemon& daemon,
              const StopCondition& stop, const CriticalSections& cs) {
  auto enabled0 = enabled_processes(g, params, conf0);
  Execution exec(std::move(conf0), std::move(enabled0));
  while (true) {
    if (stop.until && stop.until(exec)) break;
    if (exec.steps() >= stop.max_steps) break;
    const auto& enabled = exec.enabled_at(exec.steps());
    if (enabled.empty()) throw DeadlockError(std::move(exec));
    auto chosen = daemon.choose(enabled, exec.last(), exec.steps());
    StepResult res = step(g, params, exec.last(), chosen, cs);
    auto next_enabled = enabled_processes(g, params, res.next);
    exec.push(Transition{std::move(chosen), std::move(res.events)}, std::move(res.next),
              std::move(next_enabled));
  }
  return exec;
}

std::vector<std::size_t> round_ends(const Execution& exec) {
  std::vector<std::size_t> ends;
  std::vector<Process> pending = exec.enabled_at(0);
  if (pending.empty()) return ends;
  for (std::size_t t = 0; t < exec.steps(); ++t) {
    const auto& chosen = exec.transition(t).chosen;
    const auto& still_enabled = exec.enabled_at(t + 1);
    std::erase_if(pending, [&](Process p) {
      bool acted = std::find(chosen.begin(), chosen.end(), p) != chosen.end();
      bool neutralized =
          !std::binary_search(still_enabled.begin(), still_enabled.end(), p);
      return acted || neutralized;
    });
    if (pending.empty()) {
      ends.push_back(t + 1);
      pending = still_enabled;
      if (pending.empty()) break;
    }
  }
  return ends;
}

std::size_t count_rounds(const Execution& exec) { return round_ends(exec).size(); }

std::size_t rounds_until(const Execution& exec, std::size_t t) {
  if (t == 0) return 0;
  std::size_t started = 1;  // the round starting at configuration 0
  for (std::size_t end : round_ends(exec)) {
    if (end < t) ++started;
  }
  return started;
}

std::optional<std::size_t> first_configuration(
    const Execution& exec, const std::function<bool(const Configuration&)>& pred) {
  for (std::size_t t = 0; t <= exec.steps(); ++t) {
    if (pred(exec.configuration(t))) return t;
  }
  return std::nullopt;
}

Schedule read_schedule(std::istream& in) {
  Schedule out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = nlohmann::json::parse(line);
      out.push_back(j.get<std::vector<Process>>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::Config, "schedule line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void write_schedule(std::ostream& out, const Schedule& schedule) {
  for (const auto& chosen : schedule) out << nlohmann::json(chosen).dump() << '\n';
}

}  // namespace unison
