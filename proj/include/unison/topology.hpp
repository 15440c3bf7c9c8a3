#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace unison {

/// Simulation-side index of a process. Protocol code never branches on it.
using Process = std::size_t;

struct Edge {
  Process u = 0;
  Process v = 0;
};

/// Undirected, connected, anonymous network with a cached all-pairs
/// distance table. Immutable after construction.
class Graph {
 public:
  /// Validates and builds the graph. Duplicate edges are merged.
  /// Throws Error{BadIndex | SelfLoop | Disconnected | TooFewProcesses}.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const noexcept { return adj_.size(); }
  std::span<const Process> neighbors(Process p) const { return adj_.at(p); }
  std::size_t degree(Process p) const { return adj_.at(p).size(); }
  bool adjacent(Process p, Process q) const;

  /// Each undirected edge once, with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::size_t distance(Process p, Process q) const { return dist_.at(p).at(q); }
  /// V(p, k) in increasing process order.
  std::vector<Process> ball(Process p, std::size_t k) const;
  std::size_t diameter() const noexcept { return diameter_; }

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<Process>> adj_;
  std::vector<std::vector<std::size_t>> dist_;
  std::size_t edge_count_ = 0;
  std::size_t diameter_ = 0;
};

Graph parse_graph(std::size_t n, std::span<const Edge> edges);

/// Flat edge-list text: first token `n`, then `u v` pairs. `#` starts a comment.
Graph read_edge_list(std::istream& in);

struct BfsTree {
  Process root = 0;
  std::vector<std::optional<Process>> parent;
  std::vector<std::size_t> depth;
  /// Non-tree edges, each once (u < v).
  std::vector<Edge> chords;
};

BfsTree bfs_tree(const Graph& g, Process root);

/// Upper bound on the cyclomatic characteristic: 2 for trees, otherwise the
/// minimum over BFS roots of the longest fundamental cycle.
std::size_t cyclomatic_upper_bound(const Graph& g);

inline constexpr std::size_t kDefaultSimplePathLimit = 12;

/// Number of edges on a longest simple path. Exhaustive DFS; throws
/// Error{TooLarge} when n exceeds `max_n`.
std::size_t longest_simple_path_length(const Graph& g,
                                       std::size_t max_n = kDefaultSimplePathLimit);

struct GraphMetrics {
  std::size_t diameter = 0;
  std::size_t cg_upper = 0;
  std::size_t lsp = 0;
};

GraphMetrics compute_metrics(const Graph& g, std::size_t max_n = kDefaultSimplePathLimit);

/// Cap for exponential enumerations (walk sets, chain searches). Reads
/// UNISON_EXHAUSTIVE_LIMIT, defaulting to 200000.
std::size_t exhaustive_limit();

namespace families {

Graph ring(std::size_t n);
Graph path(std::size_t n);
/// Center 0 plus `leaves` leaves.
Graph star(std::size_t leaves);
Graph complete(std::size_t n);
Graph grid(std::size_t rows, std::size_t cols);
/// Random spanning tree plus each remaining pair with probability `extra`.
Graph random_connected(std::size_t n, double extra, std::uint64_t seed);

/// Builds a family member by name ("ring", "path", "star", "complete",
/// "grid", "random"). For grid, `n` must be a perfect square.
Graph by_name(const std::string& family, std::size_t n, std::uint64_t seed = 0);

}  // namespace families

}  // namespace unison
