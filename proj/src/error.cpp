#include "unison/error.hpp"

namespace unison {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::BadIndex: return "BadIndex";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::Disconnected: return "Disconnected";
    case Errc::TooFewProcesses: return "TooFewProcesses";
    case Errc::TooLarge: return "TooLarge";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::NotLocallyComparable: return "NotLocallyComparable";
    case Errc::NotEnabled: return "NotEnabled";
    case Errc::EmptyChoice: return "EmptyChoice";
    case Errc::GuardConflict: return "GuardConflict";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::ReplayMismatch: return "ReplayMismatch";
    case Errc::Deadlock: return "Deadlock";
    case Errc::NotStabilized: return "NotStabilized";
    case Errc::NotWU0: return "NotWU0";
    case Errc::Incomplete: return "Incomplete";
    case Errc::Truncated: return "Truncated";
    case Errc::LiftBroken: return "LiftBroken";
    case Errc::DeltaTooSmall: return "DeltaTooSmall";
    case Errc::MissingTask: return "MissingTask";
    case Errc::InvalidTask: return "InvalidTask";
    case Errc::Config: return "Config";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace unison
