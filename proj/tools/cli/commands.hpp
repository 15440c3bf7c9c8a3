#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "cli/run_config.hpp"
#include "cli/trace.hpp"

namespace unison::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 2,
  kDeadlock = 3,
  kConfigError = 4,
};

/// Trace records go to `trace_out`, the summary (one JSON object) to
/// `summary_out`.
int cmd_simulate(const RunConfig& cfg, std::ostream& trace_out, std::ostream& summary_out);

enum class VerifyKind { Wavelet, Wave, StrongWave };
VerifyKind verify_kind_from_string(const std::string& name);

struct VerifyOptions {
  VerifyKind kind = VerifyKind::Wave;
  /// Radius for the wavelet check; delta when absent.
  std::optional<std::size_t> k;
  /// Offsets from the lifted base of the first WU configuration; [0, delta]
  /// when absent.
  std::optional<std::pair<Clock, Clock>> segment;
  /// Receives the causal DAG as JSON when set.
  std::ostream* dag_out = nullptr;
};

/// "k1:k2" with k1 <= k2. Throws Error{Config}.
std::pair<Clock, Clock> parse_segment(const std::string& text);

/// Verifies a segment of a recorded trace, or of a fresh simulation when
/// `trace` is empty.
int cmd_verify(const RunConfig& cfg, const std::optional<Trace>& trace,
               const VerifyOptions& options, std::ostream& out);

/// Per-process results against the oracle for every decided phase.
int cmd_compute(const RunConfig& cfg, std::ostream& out);

inline constexpr const char* kStatsHeader =
    "family,n,K,alpha,delta,daemon,seed,rounds_to_WU,rounds_to_WU0,na_per_phase,"
    "reads_per_phase";

/// CSV sweep over cfg.stats; rows keep their sequential order whatever `jobs`.
int cmd_stats(const RunConfig& cfg, std::ostream& out, unsigned jobs = 1);

}  // namespace unison::cli
