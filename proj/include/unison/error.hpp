#pragma once

#include <stdexcept>
#include <string>

namespace unison {

enum class Errc {
  // topology
  BadIndex,
  SelfLoop,
  Disconnected,
  TooFewProcesses,
  TooLarge,
  // phase_clock
  OutOfDomain,
  NotLocallyComparable,
  // protocol
  NotEnabled,
  EmptyChoice,
  GuardConflict,
  InvalidParams,
  // scheduler
  ReplayMismatch,
  Deadlock,
  NotStabilized,
  // causality
  NotWU0,
  Incomplete,
  Truncated,
  LiftBroken,
  // aggregation
  DeltaTooSmall,
  MissingTask,
  InvalidTask,
  // cli
  Config,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace unison
