#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "unison/error.hpp"
#include "unison/protocol.hpp"

namespace unison {

enum class DaemonKind {
  Synchronous,   // every enabled process
  RandomSubset,  // each enabled process independently with probability `bias`
  SingleMin,     // the enabled process with the smallest clock
  SingleRandom,  // one enabled process, uniformly
  Starving,      // anyone but the victim, unless the victim is alone
  Replay,        // recorded schedule, filtered to the enabled set
};

const char* to_string(DaemonKind k) noexcept;
DaemonKind daemon_kind_from_string(const std::string& name);

using Schedule = std::vector<std::vector<Process>>;

/// Adversary zoo standing in for the unfair daemon. Seeded kinds are
/// deterministic: same seed, same inputs, same choices.
class Daemon {
 public:
  static Daemon synchronous();
  static Daemon random_subset(std::uint64_t seed, double bias = 0.5);
  static Daemon single_min();
  static Daemon single_random(std::uint64_t seed);
  static Daemon starving(Process victim, std::uint64_t seed);
  static Daemon replay(Schedule schedule);

  DaemonKind kind() const noexcept { return kind_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::string name() const;

  /// Nonempty subset of `enabled` (which must be nonempty and sorted).
  /// Throws Error{ReplayMismatch} when a replayed step has no enabled process
  /// or the schedule is exhausted.
  std::vector<Process> choose(const std::vector<Process>& enabled, const Configuration& conf,
                              std::size_t step_index);

 private:
  explicit Daemon(DaemonKind kind, std::uint64_t seed = 0) : kind_(kind), seed_(seed), rng_(seed) {}

  DaemonKind kind_;
  std::uint64_t seed_ = 0;
  std::mt19937_64 rng_;
  double bias_ = 0.5;
  Process victim_ = 0;
  Schedule schedule_;
};

struct Transition {
  std::vector<Process> chosen;
  std::vector<EventRecord> events;
};

/// gamma_0 -> gamma_1 -> ... with the enabled set of every configuration.
/// configuration(t) is the state after t transitions.
class Execution {
 public:
  Execution(Configuration initial, std::vector<Process> enabled);

  std::size_t steps() const noexcept { return transitions_.size(); }
  const Configuration& configuration(std::size_t t) const { return configs_.at(t); }
  const Configuration& initial() const { return configs_.front(); }
  const Configuration& last() const { return configs_.back(); }
  const Transition& transition(std::size_t t) const { return transitions_.at(t); }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  const std::vector<Process>& enabled_at(std::size_t t) const { return enabled_.at(t); }

  void push(Transition tr, Configuration next, std::vector<Process> enabled);

  /// The execution from configuration(t) onwards, re-indexed to start at 0.
  Execution suffix(std::size_t t) const;

  /// Chosen sets, one per step; feeds Daemon::replay.
  Schedule schedule() const;

 private:
  std::vector<Configuration> configs_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<Process>> enabled_;
};

struct StopCondition {
  std::size_t max_steps = 0;
  /// Checked before every step, including on the initial configuration.
  std::function<bool(const Execution&)> until;
};

/// Raised when no process is enabled; keeps the execution up to that point.
class DeadlockError : public Error {
 public:
  explicit DeadlockError(Execution execution);

  const Configuration& configuration() const { return execution_.last(); }
  const Execution& execution() const noexcept { return execution_; }

 private:
  Execution execution_;
};

/// Drives steps until `stop` holds or max_steps transitions were taken.
/// Throws DeadlockError if a configuration has no enabled process.
Execution run(const Graph& g, const ProtocolParams& params, Configuration conf0, Daemon& daemon,
              const StopCondition& stop, const CriticalSections& cs = {});

/// Configuration indices at which rounds end. A round ends once every process
/// enabled at its start has acted or been neutralized.
std::vector<std::size_t> round_ends(const Execution& exec);

std::size_t count_rounds(const Execution& exec);

/// Rounds begun before configuration `t` was reached (0 for t = 0).
std::size_t rounds_until(const Execution& exec, std::size_t t);

std::optional<std::size_t> first_configuration(
    const Execution& exec, const std::function<bool(const Configuration&)>& pred);

/// JSON-lines replay format: one array of process indices per line.
Schedule read_schedule(std::istream& in);
void write_schedule(std::ostream& out, const Schedule& schedule);

}  // namespace unison
