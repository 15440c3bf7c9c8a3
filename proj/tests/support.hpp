#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "unison/aggregation.hpp"
#include "unison/topology.hpp"

namespace unison::testing {

struct Named {
  std::string name;
  Graph graph;
};

inline std::vector<Named> small_corpus() {
  std::vector<Named> out;
  for (std::size_t n = 3; n <= 7; ++n) out.push_back({"ring" + std::to_string(n), families::ring(n)});
  for (std::size_t n = 2; n <= 6; ++n) out.push_back({"path" + std::to_string(n), families::path(n)});
  out.push_back({"star3", families::star(3)});
  out.push_back({"star5", families::star(5)});
  out.push_back({"k4", families::complete(4)});
  out.push_back({"k5", families::complete(5)});
  out.push_back({"grid2x3", families::grid(2, 3)});
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    out.push_back({"random" + std::to_string(seed),
                   families::random_connected(4 + seed % 4, 0.35, seed)});
  }
  return out;
}

inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1) / 4;

/// All-pairs distances by Floyd-Warshall over the adjacency predicate.
inline std::vector<std::vector<std::size_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kUnreachable));
  for (Process p = 0; p < n; ++p) {
    d[p][p] = 0;
    for (Process q = 0; q < n; ++q) {
      if (g.adjacent(p, q)) d[p][q] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

/// Longest simple path by trying every ordering of every vertex subset
/// prefix (permutations of V; prefixes of each permutation are the paths).
inline std::size_t lsp_by_permutation(const Graph& g) {
  std::vector<Process> perm(g.size());
  std::iota(perm.begin(), perm.end(), Process{0});
  std::size_t best = 0;
  do {
    std::size_t len = 0;
    while (len + 1 < perm.size() && g.adjacent(perm[len], perm[len + 1])) ++len;
    best = std::max(best, len);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Exact cyclomatic characteristic: enumerate every simple cycle as an edge
/// bitmask, then pick a cycle basis greedily by length over GF(2). The greedy
/// basis of a matroid minimizes its longest element.
inline std::size_t exact_cyclomatic(const Graph& g) {
  const auto edges = g.edges();
  const std::size_t n = g.size();
  const std::size_t rank = edges.size() + 1 - n;
  if (rank == 0) return 2;
  auto edge_bit = [&](Process a, Process b) {
    if (a > b) std::swap(a, b);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].u == a && edges[i].v == b) return std::uint64_t{1} << i;
    }
    return std::uint64_t{0};
  };

  std::vector<std::uint64_t> cycles;
  std::vector<Process> stack;
  std::vector<bool> on(n, false);
  auto dfs = [&](auto&& self, Process start, Process at, std::uint64_t mask) -> void {
    for (Process q : g.neighbors(at)) {
      if (q == start && stack.size() >= 3) {
        cycles.push_back(mask | edge_bit(at, q));
      } else if (q > start && !on[q]) {
        on[q] = true;
        stack.push_back(q);
        self(self, start, q, mask | edge_bit(at, q));
        stack.pop_back();
        on[q] = false;
      }
    }
  };
  for (Process s = 0; s < n; ++s) {
    on[s] = true;
    stack = {s};
    dfs(dfs, s, s, 0);
    on[s] = false;
  }
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  std::stable_sort(cycles.begin(), cycles.end(), [](std::uint64_t a, std::uint64_t b) {
    return __builtin_popcountll(a) < __builtin_popcountll(b);
  });

  std::vector<std::uint64_t> basis;  // reduced rows, keyed by highest bit
  std::size_t longest = 0;
  for (std::uint64_t c : cycles) {
    std::uint64_t x = c;
    for (std::uint64_t row : basis) x = std::min(x, x ^ row);
    if (x == 0) continue;
    basis.push_back(x);
    std::sort(basis.begin(), basis.end(), std::greater<>());
    longest = std::max<std::size_t>(longest, __builtin_popcountll(c));
    if (basis.size() == rank) break;
  }
  return longest;
}

/// min over sources q of v0(q) + weighted distance q -> p, by Dijkstra.
/// Unlisted edges weigh 1.
inline std::vector<Value> dijkstra_from_inputs(const Graph& g, const EdgeWeights& w,
                                               const std::vector<Value>& v0) {
  auto weight = [&](Process from, Process to) {
    if (auto it = w.find({from, to}); it != w.end()) return it->second;
    if (auto it = w.find({to, from}); it != w.end()) return it->second;
    return Value{1};
  };
  std::vector<Value> dist(v0);
  using Item = std::pair<Value, Process>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (Process p = 0; p < g.size(); ++p) {
    if (dist[p] != kInfinity) pq.push({dist[p], p});
  }
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (Process v : g.neighbors(u)) {
      const Value nd = d + weight(u, v);
      if (nd < dist[v]) {
        dist[v] = nd;
        pq.push({nd, v});
      }
    }
  }
  return dist;
}

}  // namespace unison::testing
