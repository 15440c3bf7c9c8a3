#include "unison/topology.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <limits>
#include <queue>
#include <random>
#include <sstream>

#include "unison/error.hpp"

namespace unison {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const std::vector<std::vector<Process>>& adj,
                                       Process src) {
  std::vector<std::size_t> dist(adj.size(), kUnreached);
  std::queue<Process> frontier;
  dist[src] = 0;
  frontier.push(src);
  while (!frontier.empty()) {
    Process u = frontier.front();
    frontier.pop();
    for (Process v : adj[u]) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n < 2) {
    throw Error(Errc::TooFewProcesses, "a network needs at least 2 processes, got " +
                                           std::to_string(n));
  }
  Graph g;
  g.adj_.assign(n, {});
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(Errc::BadIndex, "edge (" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + ") out of range for n=" +
                                      std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(Errc::SelfLoop, "self-loop on process " + std::to_string(e.u));
    }
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.edge_count_ += nb.size();
  }
  g.edge_count_ /= 2;

  g.dist_.reserve(n);
  for (Process p = 0; p < n; ++p) {
    g.dist_.push_back(bfs_distances(g.adj_, p));
  }
  for (Process q = 0; q < n; ++q) {
    if (g.dist_[0][q] == kUnreached) {
      throw Error(Errc::Disconnected,
                  "process " + std::to_string(q) + " unreachable from process 0");
    }
  }
  for (const auto& row : g.dist_) {
    g.diameter_ = std::max(g.diameter_, *std::max_element(row.begin(), row.end()));
  }
  return g;
}

bool Graph::adjacent(Process p, Process q) const {
  const auto& nb = adj_.at(p);
  return std::binary_search(nb.begin(), nb.end(), q);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Process u = 0; u < size(); ++u) {
    for (Process v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<Process> Graph::ball(Process p, std::size_t k) const {
  std::vector<Process> out;
  const auto& row = dist_.at(p);
  for (Process q = 0; q < size(); ++q) {
    if (row[q] <= k) out.push_back(q);
  }
  return out;
}

Graph parse_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::ostringstream cleaned;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    cleaned << line << '\n';
  }
  std::istringstream tokens(cleaned.str());
  long long n = -1;
  if (!(tokens >> n) || n < 0) {
    throw Error(Errc::Config, "edge list must start with the process count");
  }
  std::vector<Edge> edges;
  long long u = 0;
  long long v = 0;
  while (tokens >> u) {
    if (!(tokens >> v)) throw Error(Errc::Config, "dangling endpoint in edge list");
    if (u < 0 || v < 0) throw Error(Errc::BadIndex, "negative process index");
    edges.push_back({static_cast<Process>(u), static_cast<Process>(v)});
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

BfsTree bfs_tree(const Graph& g, Process root) {
  BfsTree tree;
  tree.root = root;
  tree.parent.assign(g.size(), std::nullopt);
  tree.depth.assign(g.size(), kUnreached);
  std::queue<Process> frontier;
  tree.depth[root] = 0;
  frontier.push(root);
  while (!frontier.empty()) {
    Process u = frontier.front();
    frontier.pop();
    for (Process v : g.neighbors(u)) {
      if (tree.depth[v] == kUnreached) {
        tree.depth[v] = tree.depth[u] + 1;
        tree.parent[v] = u;
        frontier.push(v);
      }
    }
  }
  for (const Edge& e : g.edges()) {
    bool tree_edge = tree.parent[e.u] == e.v || tree.parent[e.v] == e.u;
    if (!tree_edge) tree.chords.push_back(e);
  }
  return tree;
}

namespace {

std::size_t fundamental_cycle_length(const BfsTree& tree, Edge chord) {
  Process a = chord.u;
  Process b = chord.v;
  std::size_t len = 1;
  while (a != b) {
    if (tree.depth[a] >= tree.depth[b]) {
      a = *tree.parent[a];
    } else {
      b = *tree.parent[b];
    }
    ++len;
  }
  return len;
}

}  // namespace

std::size_t cyclomatic_upper_bound(const Graph& g) {
  if (g.edge_count() + 1 == g.size()) return 2;
  std::size_t best = kUnreached;
  for (Process root = 0; root < g.size(); ++root) {
    BfsTree tree = bfs_tree(g, root);
    std::size_t longest = 0;
    for (const Edge& chord : tree.chords) {
      longest = std::max(longest, fundamental_cycle_length(tree, chord));
    }
    best = std::min(best, longest);
  }
  return best;
}

namespace {

void extend_simple(const Graph& g, Process at, std::vector<bool>& used, std::size_t len,
                   std::size_t& best) {
  best = std::max(best, len);
  if (best + 1 == g.size()) return;
  for (Process next : g.neighbors(at)) {
    if (used[next]) continue;
    used[next] = true;
    extend_simple(g, next, used, len + 1, best);
    used[next] = false;
  }
}

}  // namespace

std::size_t longest_simple_path_length(const Graph& g, std::size_t max_n) {
  if (g.size() > max_n) {
    throw Error(Errc::TooLarge, "longest simple path is exhaustive; n=" +
                                    std::to_string(g.size()) + " exceeds limit " +
                                    std::to_string(max_n));
  }
  std::size_t best = 0;
  std::vector<bool> used(g.size(), false);
  for (Process start = 0; start < g.size() && best + 1 < g.size(); ++start) {
    used[start] = true;
    extend_simple(g, start, used, 0, best);
    used[start] = false;
  }
  return best;
}

GraphMetrics compute_metrics(const Graph& g, std::size_t max_n) {
  return {g.diameter(), cyclomatic_upper_bound(g), longest_simple_path_length(g, max_n)};
}

std::size_t exhaustive_limit() {
  if (const char* env = std::getenv("UNISON_EXHAUSTIVE_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

namespace families {

Graph ring(std::size_t n) {
  std::vector<Edge> edges;
  for (Process i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Process i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Process i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Process i = 0; i < n; ++i) {
    for (Process j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph::from_edges(n, edges);
}

Graph grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      Process id = r * cols + c;
      if (c + 1 < cols) edges.push_back({id, id + 1});
      if (r + 1 < rows) edges.push_back({id, id + cols});
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph random_connected(std::size_t n, double extra, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<Process> order(n);
  for (Process i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    edges.push_back({order[i], order[pick(rng)]});
  }
  std::bernoulli_distribution coin(extra);
  for (Process i = 0; i < n; ++i) {
    for (Process j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph by_name(const std::string& family, std::size_t n, std::uint64_t seed) {
  if (family == "ring") return ring(n);
  if (family == "path") return path(n);
  if (family == "star") {
    if (n < 2) throw Error(Errc::TooFewProcesses, "star needs n >= 2");
    return star(n - 1);
  }
  if (family == "complete") return complete(n);
  if (family == "grid") {
    auto side = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n))));
    if (side * side != n) throw Error(Errc::Config, "grid family needs a square n");
    return grid(side, side);
  }
  if (family == "random") return random_connected(n, 0.3, seed);
  throw Error(Errc::Config, "unknown graph family '" + family + "'");
}

}  // namespace families

}  // namespace unison
