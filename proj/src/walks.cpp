#include "unison/walks.hpp"

#include <algorithm>
#include <set>

namespace unison {

bool is_walk(const Graph& g, const Walk& m) {
  if (m.empty()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] >= g.size()) return false;
    if (i + 1 < m.size() && m[i] != m[i + 1] && !g.adjacent(m[i], m[i + 1])) return false;
  }
  return true;
}

bool is_simple(const Walk& m) {
  std::vector<Process> sorted(m);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_elementary(const Walk& m) {
  return is_simple(destutter(m));
}

bool is_circular(const Walk& m) { return m.size() >= 2 && m.front() == m.back(); }

Walk destutter(const Walk& m) {
  Walk out;
  for (Process p : m) {
    if (out.empty() || out.back() != p) out.push_back(p);
  }
  return out;
}

std::vector<Walk> reductions(const Walk& m) {
  std::set<Walk> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i] != m[j]) continue;
      Walk next(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      next.insert(next.end(), m.begin() + static_cast<std::ptrdiff_t>(j) + 1, m.end());
      out.insert(std::move(next));
    }
  }
  return {out.begin(), out.end()};
}

Walk reduce_walk(const Walk& m) {
  Walk cur = m;
  while (true) {
    std::size_t best_i = 0;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (cur[i] != cur[j]) continue;
        if (best_len == 0 || j - i < best_len) {
          best_len = j - i;
          best_i = i;
        }
        break;  // longer factors from the same i are never shorter
      }
    }
    if (best_len == 0) return cur;
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(best_i) + 1,
              cur.begin() + static_cast<std::ptrdiff_t>(best_i + best_len) + 1);
  }
}

namespace {

void grow_backwards(const Graph& g, Walk& rev, std::vector<bool>& used, std::size_t max_len,
                    std::vector<Walk>& out) {
  out.emplace_back(rev.rbegin(), rev.rend());
  if (rev.size() - 1 >= max_len) return;
  for (Process q : g.neighbors(rev.back())) {
    if (used[q]) continue;
    used[q] = true;
    rev.push_back(q);
    grow_backwards(g, rev, used, max_len, out);
    rev.pop_back();
    used[q] = false;
  }
}

}  // namespace

std::vector<Walk> simple_walks_ending_at(const Graph& g, Process p, std::size_t max_len) {
  std::vector<Walk> out;
  Walk rev{p};
  std::vector<bool> used(g.size(), false);
  used[p] = true;
  grow_backwards(g, rev, used, max_len, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Walk& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(m[i]);
  }
  return out;
}

}  // namespace unison
