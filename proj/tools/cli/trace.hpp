#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "unison/scheduler.hpp"

namespace unison::cli {

inline constexpr const char* kTraceSchema = "unison-trace/1";

struct Summary {
  std::size_t steps = 0;
  std::size_t rounds = 0;
  std::optional<std::size_t> rounds_to_wu;
  std::optional<std::size_t> rounds_to_wu0;
  std::optional<std::size_t> steps_to_wu;
  bool deadlock = false;
};

/// Everything needed to rebuild an execution: the header plus the recorded
/// transitions.
struct Trace {
  Graph graph = families::ring(3);
  ProtocolParams params;
  Configuration initial;
  std::vector<Transition> transitions;
  bool deadlock = false;
};

/// Computed from the execution alone; feeding a replayed trace gives the
/// same numbers.
Summary summarize(const Graph& g, const ProtocolParams& params, const Execution& exec,
                  bool deadlock = false);
nlohmann::json summary_json(const Summary& s);

nlohmann::json header_record(const Graph& g, const ProtocolParams& params,
                             const Configuration& initial);
nlohmann::json step_record(std::size_t step, const Transition& tr);

/// Header, one record per transition, then a summary record.
void write_trace(std::ostream& out, const Graph& g, const ProtocolParams& params,
                 const Execution& exec, const Summary& summary);

/// Throws Error{Config} on malformed input.
Trace read_trace(std::istream& in);

/// Re-runs the recorded chosen sets. Throws Error{ReplayMismatch} if an event
/// differs from the recorded one.
Execution replay(const Trace& trace);

}  // namespace unison::cli
