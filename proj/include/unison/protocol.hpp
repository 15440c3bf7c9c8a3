#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unison/phase_clock.hpp"
#include "unison/topology.hpp"

namespace unison {

/// Carrier for the computation registers. The protocol never interprets it.
using Value = std::int64_t;

struct ProcessState {
  Clock r = 0;
  Value v0 = 0;
  Value v1 = 0;
  Value v2 = 0;
  Value res = 0;

  bool operator==(const ProcessState&) const = default;
};

struct Configuration {
  std::vector<ProcessState> states;

  std::size_t size() const noexcept { return states.size(); }
  const ProcessState& operator[](Process p) const { return states[p]; }
  ProcessState& operator[](Process p) { return states[p]; }
  std::vector<Clock> clocks() const;

  bool operator==(const Configuration&) const = default;
};

Configuration from_clocks(std::span<const Clock> clocks);
Configuration in_unison(std::size_t n, Clock value = 0);

/// phases: number of phases K of the barrier clock. The underlying unison
/// runs a clock of period delta * phases.
struct ProtocolParams {
  Clock phases = 3;
  Clock alpha = 1;
  Clock delta = 1;
  Clock rho = 1;

  IncSystem clock() const { return IncSystem(delta * phases, alpha); }
  Clock period() const noexcept { return delta * phases; }

  bool operator==(const ProtocolParams&) const = default;
};

/// Human-readable list of broken requirements (delta*K > cg_upper,
/// delta >= rho, alpha >= n-2). Empty when safe.
std::vector<std::string> check_params(const Graph& g, const ProtocolParams& params);

struct ParamOverrides {
  std::optional<Clock> phases;
  std::optional<Clock> alpha;
  std::optional<Clock> delta;
  std::optional<Clock> rho;
  /// Keep the given values even when they break delta*K > cg_upper.
  bool unsafe = false;
};

/// Fills defaults: alpha = n, rho = 1, delta = max(rho, min_delta),
/// K = max(3, n+1 or the given K), then raises K until delta*K > cg_upper.
ProtocolParams resolve_params(const Graph& g, const ParamOverrides& overrides,
                              Clock min_delta = 1);

/// Uniformly random clocks over chi; registers get garbage from the same stream.
Configuration random_configuration(std::size_t n, const IncSystem& sys, std::uint64_t seed);

bool check_wu(const Graph& g, const ProtocolParams& params, const Configuration& conf);
bool check_wu0(const Graph& g, const ProtocolParams& params, const Configuration& conf);

enum class Action { Normal, Convergence, Reset };
enum class CsTag { None, Cs1, Cs2 };

const char* to_string(Action a) noexcept;
const char* to_string(CsTag t) noexcept;

struct Guards {
  bool normal = false;
  bool convergence = false;
  bool reset = false;
  bool locally_correct = false;

  bool enabled() const noexcept { return normal || convergence || reset; }
};

Guards guards(const Graph& g, const ProtocolParams& params, const Configuration& conf, Process p);

inline bool is_enabled(const Graph& g, const ProtocolParams& params, const Configuration& conf,
                       Process p) {
  return guards(g, params, conf, p).enabled();
}

std::vector<Process> enabled_processes(const Graph& g, const ProtocolParams& params,
                                       const Configuration& conf);

/// Critical sections run inside the normal action. Each returns the new
/// registers of `p`, computed from the pre-step configuration only. An empty
/// function leaves the registers untouched.
struct CriticalSections {
  using Handler = std::function<ProcessState(const Graph&, const Configuration&, Process)>;
  Handler cs1;
  Handler cs2;
};

struct EventRecord {
  Process process = 0;
  Action action = Action::Normal;
  CsTag cs = CsTag::None;
  Clock before = 0;
  Clock after = 0;
  /// Neighbour registers read by the action (deg(p) for a normal step).
  std::size_t reads = 0;

  bool operator==(const EventRecord&) const = default;
};

struct Applied {
  ProcessState state;
  EventRecord record;
};

/// One guarded action of `p` against `conf`. Throws Error{NotEnabled}, or
/// Error{GuardConflict} if two action guards hold at once.
Applied apply(const Graph& g, const ProtocolParams& params, const Configuration& conf,
              Process p, const CriticalSections& cs = {});

struct StepResult {
  Configuration next;
  std::vector<EventRecord> events;
};

/// All chosen processes read the pre-step configuration. Throws
/// Error{EmptyChoice} or Error{NotEnabled}.
StepResult step(const Graph& g, const ProtocolParams& params, const Configuration& conf,
                std::span<const Process> chosen, const CriticalSections& cs = {});

}  // namespace unison
