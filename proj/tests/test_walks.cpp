#include <queue>
#include <random>
#include <set>

#include <doctest.h>

#include "support.hpp"
#include "unison/walks.hpp"

using namespace unison;

namespace {

/// Every walk reachable by zero or more reduction steps.
std::set<Walk> reduction_closure(const Walk& m) {
  std::set<Walk> seen{m};
  std::queue<Walk> todo;
  todo.push(m);
  while (!todo.empty()) {
    const Walk w = todo.front();
    todo.pop();
    for (const Walk& next : reductions(w)) {
      if (seen.insert(next).second) todo.push(next);
    }
  }
  return seen;
}

std::set<Walk> simple_members(const std::set<Walk>& ws) {
  std::set<Walk> out;
  for (const Walk& w : ws) {
    if (is_simple(w)) out.insert(w);
  }
  return out;
}

/// All words of length `len` over {0..k-1}.
std::vector<Walk> all_words(std::size_t k, std::size_t len) {
  std::vector<Walk> out;
  Walk w(len, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = 0;
    while (i < len && w[i] == k - 1) w[i++] = 0;
    if (i == len) return out;
    ++w[i];
  }
}

}  // namespace

TEST_CASE("walk predicates") {
  const Graph abc = families::path(3);
  CHECK(is_walk(abc, {0, 1, 1, 2}));
  CHECK_FALSE(is_walk(abc, {0, 2}));
  CHECK_FALSE(is_walk(abc, {}));
  CHECK(is_simple({0, 1, 2}));
  CHECK_FALSE(is_simple({0, 1, 0}));
  CHECK(is_elementary({0, 0, 1, 2, 2}));
  CHECK_FALSE(is_elementary({0, 1, 0}));
  CHECK(is_circular({0, 1, 0}));
  CHECK(is_circular({1, 1}));
  CHECK_FALSE(is_circular({1}));
  CHECK(destutter({0, 0, 1, 1, 1, 2, 0}) == Walk{0, 1, 2, 0});
  CHECK(to_string(Walk{0, 1, 2}) == "0-1-2");
}

TEST_CASE("reduce_walk examples") {
  CHECK(reduce_walk({0, 1, 2, 0}) == Walk{0});
  CHECK(reduce_walk({0, 1, 0, 1}) == Walk{0, 1});
  CHECK(reduce_walk({0, 1, 2}) == Walk{0, 1, 2});
  CHECK(reduce_walk({2, 2, 2}) == Walk{2});
  const auto closure = reduction_closure({0, 1, 0, 1});
  CHECK(closure.contains(Walk{0, 1}));
}

TEST_CASE("reduce_walk reaches a simple walk by legal steps") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Walk m;
    const std::size_t len = 1 + rng() % 8;
    for (std::size_t i = 0; i < len; ++i) m.push_back(rng() % 4);
    const Walk r = reduce_walk(m);
    CHECK(is_simple(r));
    CHECK(r.front() == m.front());
    CHECK(r.back() == m.back());
    CHECK(reduction_closure(m).contains(r));
  }
}

TEST_CASE("an elementary walk reduces exactly to its destuttered form") {
  for (std::size_t len = 1; len <= 6; ++len) {
    for (const Walk& m : all_words(3, len)) {
      const auto simple = simple_members(reduction_closure(m));
      CHECK_FALSE(simple.empty());
      if (is_elementary(m)) {
        CHECK(simple == std::set<Walk>{destutter(m)});
      }
    }
  }
}

TEST_CASE("simple walks ending at a process") {
  const Graph tri = families::complete(3);
  const auto ws = simple_walks_ending_at(tri, 0);
  // "0", "1-0", "2-0", "2-1-0", "1-2-0"
  CHECK(ws.size() == 5);
  for (const Walk& w : ws) {
    CHECK(is_walk(tri, w));
    CHECK(is_simple(w));
    CHECK(w.back() == 0);
  }
  CHECK(simple_walks_ending_at(tri, 0, 1).size() == 3);
  CHECK(simple_walks_ending_at(families::path(4), 0).size() == 4);

  // Count check against a brute force over words.
  for (const auto& [name, g] : unison::testing::small_corpus()) {
    if (g.size() > 5) continue;
    CAPTURE(name);
    for (Process p = 0; p < g.size(); ++p) {
      std::size_t brute = 0;
      for (std::size_t len = 1; len <= g.size(); ++len) {
        for (const Walk& w : all_words(g.size(), len)) {
          if (w.back() == p && is_walk(g, w) && is_simple(w)) ++brute;
        }
      }
      CHECK(simple_walks_ending_at(g, p).size() == brute);
    }
  }
}
