#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "unison/protocol.hpp"
#include "unison/scheduler.hpp"
#include "unison/walks.hpp"

namespace unison {

using EventId = std::size_t;

/// (process, time): the initial event of every process at time 0, then one
/// event per executed action at the index of the resulting configuration.
struct Event {
  Process process = 0;
  std::size_t time = 0;
  bool initial = true;
  Action action = Action::Normal;
  CsTag cs = CsTag::None;
  Clock clock = 0;  // register value after the event
};

/// Causal DAG of an execution. Each event is linked from the latest earlier
/// event of its own process and of each neighbour. Event ids follow time
/// order, so they are a topological order.
class CausalDag {
 public:
  static CausalDag build(const Graph& g, const Execution& exec);

  std::size_t size() const noexcept { return events_.size(); }
  std::size_t process_count() const noexcept { return per_process_.size(); }
  const Event& event(EventId id) const { return events_.at(id); }
  const std::vector<Event>& events() const noexcept { return events_; }

  /// Direct predecessors; the self edge, when present, comes first.
  std::span<const EventId> predecessors(EventId id) const { return preds_.at(id); }
  std::span<const EventId> events_of(Process p) const { return per_process_.at(p); }
  std::optional<EventId> find(Process p, std::size_t time) const;

  /// Latest time of a q-event in the past cone of `id`, or -1.
  std::int64_t past_time(EventId id, Process q) const {
    return vclock_[id * process_count() + q];
  }

  /// a is causally before or equal to b.
  bool precedes(EventId a, EventId b) const {
    return past_time(b, events_[a].process) >= static_cast<std::int64_t>(events_[a].time);
  }

  /// Processes with an event in the past cone of `id`.
  std::vector<Process> cover(EventId id) const;

  /// Edge-list JSON, events named "p@t".
  std::string to_json() const;

 private:
  std::vector<Event> events_;
  std::vector<std::vector<EventId>> preds_;
  std::vector<std::vector<EventId>> per_process_;
  std::vector<std::int64_t> vclock_;
};

inline CausalDag build_dag(const Graph& g, const Execution& exec) {
  return CausalDag::build(g, exec);
}

std::string event_name(const Event& e);

/// Unbounded unwinding of the clocks of an execution that starts in WU0.
struct LiftedClocks {
  Process anchor = 0;
  Clock bottom = 0;
  std::vector<Clock> value;  // per event id

  Clock at(EventId id) const { return value.at(id); }
};

/// Throws Error{NotWU0} if the initial configuration is outside WU0 and
/// Error{LiftBroken} if a reset or convergence action shows up later.
LiftedClocks lift(const Graph& g, const ProtocolParams& params, const CausalDag& dag,
                  const Execution& exec);

/// One event per process.
struct Cut {
  std::vector<EventId> events;

  EventId operator[](Process p) const { return events[p]; }
  bool operator==(const Cut&) const = default;
};

/// Earliest event of each process whose lifted clock equals k. Throws
/// Error{OutOfDomain} for k below the base value and Error{Incomplete} when
/// some process never reaches k.
Cut cut_at(const CausalDag& dag, const LiftedClocks& lifted, Clock k);

/// Highest k such that cut_at(k) exists, i.e. the smallest final lifted value.
Clock last_complete_cut(const CausalDag& dag, const LiftedClocks& lifted);

bool is_coherent(const CausalDag& dag, const Cut& cut);

/// Past of a included in past of b (per-process times).
bool cut_leq(const CausalDag& dag, const Cut& a, const Cut& b);

/// Induced sub-DAG [lower, upper]; an absent upper cut means "to the end".
class Segment {
 public:
  Segment(const CausalDag& dag, Cut lower, std::optional<Cut> upper = std::nullopt);

  const CausalDag& dag() const noexcept { return *dag_; }
  const Cut& lower() const noexcept { return lower_; }
  const std::optional<Cut>& upper() const noexcept { return upper_; }

  bool contains(EventId id) const;
  /// Member events in increasing id order.
  const std::vector<EventId>& events() const noexcept { return members_; }

  /// Processes reaching `id` through causality chains inside the segment.
  std::vector<Process> cover(EventId id) const;

 private:
  const CausalDag* dag_;
  Cut lower_;
  std::optional<Cut> upper_;
  std::vector<EventId> members_;
  std::vector<std::int64_t> local_index_;     // per event id, -1 outside
  std::vector<std::int64_t> segment_vclock_;  // members x processes
};

/// Walks of every causality chain inside the segment ending at `id`
/// (always including the trivial walk). Throws Error{Truncated} past max_walks.
std::set<Walk> walk_cover(const Segment& seg, EventId id, std::size_t max_walks);

/// Simple walks m0 for which some elementary chain inside the segment ending
/// at `id` has a walk m with m ->* m0. Throws Error{Truncated}.
std::set<Walk> elementary_reductions(const Segment& seg, EventId id, std::size_t max_walks);

struct Verdict {
  bool passed = false;
  std::string detail;

  explicit operator bool() const noexcept { return passed; }
};

/// At least one decide event, each inside the segment, and each decide event
/// (p,t) covers V(p,k) within the segment.
Verdict verify_wavelet(const Graph& g, const Segment& seg, std::span<const EventId> decide,
                       std::size_t k);

/// Wavelet with k = D.
Verdict verify_wave(const Graph& g, const Segment& seg, std::span<const EventId> decide);

/// Wave plus: every simple walk ending at a decide event's process is
/// realized by an elementary chain. Throws Error{Truncated}.
Verdict verify_strong_wave(const Graph& g, const Segment& seg, std::span<const EventId> decide,
                           std::size_t max_walks);

struct BarrierReport {
  std::size_t phases_checked = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;
};

/// Barrier synchronization at distance rho on the virtual phase clock: for
/// every fully observed phase U and d(p,q) <= rho, q's entry into phase U
/// happens strictly before p's entry into phase U+1 and is not causally
/// after it.
BarrierReport check_barrier(const Graph& g, const ProtocolParams& params, const CausalDag& dag,
                            const LiftedClocks& lifted, std::size_t rho);

}  // namespace unison
