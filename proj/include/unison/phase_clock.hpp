#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "unison/topology.hpp"

namespace unison {

using Clock = std::int64_t;

/// Finite incrementing system over chi = {-alpha, ..., 0, ..., period-1}.
/// tail = {-alpha..0}, stab = {0..period-1}; 0 belongs to both.
class IncSystem {
 public:
  /// Throws Error{OutOfDomain} unless period >= 2 and alpha >= 1.
  IncSystem(Clock period, Clock alpha);

  Clock period() const noexcept { return period_; }
  Clock alpha() const noexcept { return alpha_; }
  Clock bottom() const noexcept { return -alpha_; }

  bool contains(Clock x) const noexcept { return x >= -alpha_ && x < period_; }
  bool in_tail(Clock x) const noexcept { return x >= -alpha_ && x <= 0; }
  bool in_tail_star(Clock x) const noexcept { return x >= -alpha_ && x < 0; }
  bool in_stab(Clock x) const noexcept { return x >= 0 && x < period_; }

  /// Tail values climb by one; stab values advance modulo the period.
  Clock phi(Clock x) const;

  bool operator==(const IncSystem&) const = default;

 private:
  Clock period_;
  Clock alpha_;
};

/// Representative of `a` in [0, K-1].
Clock residue(Clock a, Clock K) noexcept;

/// Floor division for a possibly negative numerator; b > 0.
Clock floor_div(Clock a, Clock b) noexcept;

/// d_K(a, b) = min((a-b) mod K, (b-a) mod K).
Clock torus_distance(Clock K, Clock a, Clock b) noexcept;

inline bool locally_comparable(Clock K, Clock a, Clock b) noexcept {
  return torus_distance(K, a, b) <= 1;
}

/// a <=_l b  iff  (b - a) mod K is 0 or 1.
bool local_leq(Clock K, Clock a, Clock b) noexcept;

/// b (-) a for locally comparable residues; in {-1, 0, 1}.
/// Throws Error{NotLocallyComparable}.
Clock local_minus(Clock K, Clock b, Clock a);

/// Local variation of a sequence; throws Error{NotLocallyComparable}
/// naming the first offending index.
Clock path_delay(Clock K, std::span<const Clock> values);

/// WU: every clock in stab and neighbours within torus distance 1.
bool check_wu(const Graph& g, const IncSystem& sys, std::span<const Clock> clocks);

/// Delays Delta(from, q) for all q when the delay is intrinsic; nullopt when
/// the configuration is outside WU0. Path-independence is decided on the
/// fundamental cycles of a BFS tree.
std::optional<std::vector<Clock>> intrinsic_delays(const Graph& g, const IncSystem& sys,
                                                   std::span<const Clock> clocks,
                                                   Process from = 0);

bool check_wu0(const Graph& g, const IncSystem& sys, std::span<const Clock> clocks);

}  // namespace unison
