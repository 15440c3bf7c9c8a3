#include "unison/phase_clock.hpp"

#include <queue>
#include <string>

#include "unison/error.hpp"

namespace unison {

IncSystem::IncSystem(Clock period, Clock alpha) : period_(period), alpha_(alpha) {
  if (period < 2 || alpha < 1) {
    throw Error(Errc::OutOfDomain, "incrementing system needs period >= 2 and alpha >= 1 (got " +
                                       std::to_string(period) + ", " + std::to_string(alpha) +
                                       ")");
  }
}

Clock IncSystem::phi(Clock x) const {
  if (!contains(x)) {
    throw Error(Errc::OutOfDomain, "clock value " + std::to_string(x) + " outside [" +
                                       std::to_string(-alpha_) + ", " +
                                       std::to_string(period_ - 1) + "]");
  }
  if (x >= 0) return (x + 1) % period_;
  return x + 1;
}

Clock residue(Clock a, Clock K) noexcept {
  Clock r = a % K;
  return r < 0 ? r + K : r;
}

Clock floor_div(Clock a, Clock b) noexcept {
  Clock q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

Clock torus_distance(Clock K, Clock a, Clock b) noexcept {
  Clock fwd = residue(a - b, K);
  Clock back = residue(b - a, K);
  return fwd < back ? fwd : back;
}

bool local_leq(Clock K, Clock a, Clock b) noexcept {
  Clock diff = residue(b - a, K);
  return diff <= 1;
}

Clock local_minus(Clock K, Clock b, Clock a) {
  if (!locally_comparable(K, a, b)) {
    throw Error(Errc::NotLocallyComparable, std::to_string(a) + " and " + std::to_string(b) +
                                                " are not locally comparable mod " +
                                                std::to_string(K));
  }
  if (local_leq(K, a, b)) return residue(b - a, K);
  return -residue(a - b, K);
}

Clock path_delay(Clock K, std::span<const Clock> values) {
  Clock total = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (!locally_comparable(K, values[i], values[i + 1])) {
      throw Error(Errc::NotLocallyComparable,
                  "path step " + std::to_string(i) + " (" + std::to_string(values[i]) + " -> " +
                      std::to_string(values[i + 1]) + ")");
    }
    total += local_minus(K, values[i + 1], values[i]);
  }
  return total;
}

bool check_wu(const Graph& g, const IncSystem& sys, std::span<const Clock> clocks) {
  for (Process p = 0; p < g.size(); ++p) {
    if (!sys.in_stab(clocks[p])) return false;
    for (Process q : g.neighbors(p)) {
      if (!sys.in_stab(clocks[q])) return false;
      if (torus_distance(sys.period(), clocks[p], clocks[q]) > 1) return false;
    }
  }
  return true;
}

std::optional<std::vector<Clock>> intrinsic_delays(const Graph& g, const IncSystem& sys,
                                                   std::span<const Clock> clocks, Process from) {
  if (!check_wu(g, sys, clocks)) return std::nullopt;
  const Clock K = sys.period();
  // Potential along a BFS tree; every chord must agree with it, which is
  // zero delay on each fundamental cycle.
  BfsTree tree = bfs_tree(g, from);
  std::vector<Clock> delay(g.size(), 0);
  std::vector<bool> done(g.size(), false);
  std::queue<Process> frontier;
  frontier.push(from);
  done[from] = true;
  while (!frontier.empty()) {
    Process u = frontier.front();
    frontier.pop();
    for (Process v : g.neighbors(u)) {
      if (!done[v] && tree.parent[v] == u) {
        delay[v] = delay[u] + local_minus(K, clocks[v], clocks[u]);
        done[v] = true;
        frontier.push(v);
      }
    }
  }
  for (const Edge& chord : tree.chords) {
    if (delay[chord.v] - delay[chord.u] != local_minus(K, clocks[chord.v], clocks[chord.u])) {
      return std::nullopt;
    }
  }
  return delay;
}

bool check_wu0(const Graph& g, const IncSystem& sys, std::span<const Clock> clocks) {
  return intrinsic_delays(g, sys, clocks).has_value();
}

}  // namespace unison
