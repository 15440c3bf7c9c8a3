#include <sstream>

#include <doctest.h>

#include "support.hpp"
#include "unison/error.hpp"
#include "unison/scheduler.hpp"

using namespace unison;

namespace {

StopCondition steps(std::size_t n) { return StopCondition{n, {}}; }

}  // namespace

TEST_CASE("daemon choices") {
  const Configuration conf = from_clocks(std::vector<Clock>{2, 0, 1});
  const std::vector<Process> all{0, 1, 2};

  Daemon sync = Daemon::synchronous();
  CHECK(sync.choose(all, conf, 0) == all);

  Daemon low = Daemon::single_min();
  CHECK(low.choose(all, conf, 0) == std::vector<Process>{1});
  const std::vector<Process> upper{0, 2};
  CHECK(low.choose(upper, conf, 0) == std::vector<Process>{2});

  Daemon a = Daemon::random_subset(7);
  Daemon b = Daemon::random_subset(7);
  for (std::size_t i = 0; i < 50; ++i) {
    const auto ca = a.choose(all, conf, i);
    CHECK(ca == b.choose(all, conf, i));
    CHECK_FALSE(ca.empty());
    CHECK(std::includes(all.begin(), all.end(), ca.begin(), ca.end()));
  }

  Daemon one = Daemon::single_random(3);
  for (std::size_t i = 0; i < 20; ++i) CHECK(one.choose(all, conf, i).size() == 1);

  Daemon starve = Daemon::starving(1, 5);
  for (std::size_t i = 0; i < 50; ++i) {
    const auto c = starve.choose(all, conf, i);
    CHECK(std::find(c.begin(), c.end(), Process{1}) == c.end());
  }
  CHECK(starve.choose(std::vector<Process>{1}, conf, 0) == std::vector<Process>{1});

  Daemon replay = Daemon::replay({{0, 2}, {1}});
  CHECK(replay.choose(upper, conf, 0) == upper);
  CHECK_THROWS_AS(replay.choose(upper, conf, 1), Error);
  CHECK_THROWS_AS(replay.choose(all, conf, 2), Error);

  CHECK(daemon_kind_from_string("single-min") == DaemonKind::SingleMin);
  CHECK_THROWS_AS(daemon_kind_from_string("fair"), Error);
}

TEST_CASE("run from unison under the synchronous daemon") {
  const Graph ring = families::ring(4);
  const ProtocolParams params{5, 4, 1, 1};
  Daemon sync = Daemon::synchronous();
  const Execution e = run(ring, params, in_unison(4), sync, steps(3));
  CHECK(e.steps() == 3);
  CHECK(e.last().clocks() == std::vector<Clock>{3, 3, 3, 3});
  CHECK(count_rounds(e) == 3);

  Daemon again = Daemon::synchronous();
  const Execution w = run(ring, params, in_unison(4, 4), again, steps(2));
  CHECK(w.last().clocks() == std::vector<Clock>{1, 1, 1, 1});
}

TEST_CASE("run stops at the first WU configuration") {
  const Graph ring = families::ring(5);
  const ProtocolParams params = resolve_params(ring, {});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Daemon d = Daemon::random_subset(seed);
    StopCondition stop{100000, [&](const Execution& e) { return check_wu(ring, params, e.last()); }};
    const Execution e = run(ring, params, random_configuration(5, params.clock(), seed), d, stop);
    CHECK(check_wu(ring, params, e.last()));
    for (std::size_t t = 0; t < e.steps(); ++t) CHECK_FALSE(check_wu(ring, params, e.configuration(t)));
    const auto first = first_configuration(e, [&](const Configuration& c) {
      return check_wu(ring, params, c);
    });
    REQUIRE(first.has_value());
    CHECK(*first == e.steps());
  }
}

TEST_CASE("deadlock is reported with its configuration") {
  const Graph ring = families::ring(5);
  const ProtocolParams params{5, 5, 1, 1};
  Daemon d = Daemon::synchronous();
  try {
    run(ring, params, from_clocks(std::vector<Clock>{0, 1, 2, 3, 4}), d, steps(10));
    FAIL("no deadlock reported");
  } catch (const DeadlockError& e) {
    CHECK(e.code() == Errc::Deadlock);
    CHECK(e.configuration().clocks() == std::vector<Clock>{0, 1, 2, 3, 4});
    CHECK(e.execution().steps() == 0);
  }
}

TEST_CASE("rounds") {
  SUBCASE("synchronous: one round per step") {
    const Graph g = families::grid(2, 3);
    const ProtocolParams params = resolve_params(g, {});
    Daemon d = Daemon::synchronous();
    const Execution e = run(g, params, random_configuration(6, params.clock(), 4), d, steps(40));
    CHECK(count_rounds(e) == 40);
    CHECK(rounds_until(e, 0) == 0);
    CHECK(rounds_until(e, 1) == 1);
    CHECK(rounds_until(e, 40) == 40);
  }
  SUBCASE("sequential with everyone enabled: n steps per round") {
    const std::vector<Process> all{0, 1, 2, 3};
    Execution e(in_unison(4), all);
    for (std::size_t t = 0; t < 12; ++t) {
      e.push(Transition{{t % 4}, {}}, in_unison(4), all);
    }
    CHECK(round_ends(e) == std::vector<std::size_t>{4, 8, 12});
    CHECK(rounds_until(e, 4) == 1);
    CHECK(rounds_until(e, 5) == 2);
  }
  SUBCASE("neutralization closes a pending obligation") {
    // p0 and p1 enabled; p0 acts and p1 loses its guard without acting.
    Execution e(in_unison(2), {0, 1});
    e.push(Transition{{0}, {}}, in_unison(2), {0});
    CHECK(round_ends(e) == std::vector<std::size_t>{1});
    e.push(Transition{{0}, {}}, in_unison(2), {0, 1});
    CHECK(round_ends(e) == std::vector<std::size_t>{1, 2});
  }
  SUBCASE("on a real edge execution") {
    const Graph edge = families::path(2);
    const ProtocolParams params{3, 2, 1, 1};
    Daemon d = Daemon::single_min();
    const Execution e = run(edge, params, in_unison(2), d, steps(6));
    // single-min alternates, each pair of steps is one round.
    CHECK(count_rounds(e) == 3);
  }
}

TEST_CASE("seeded runs are reproducible") {
  const Graph g = families::random_connected(7, 0.3, 2);
  const ProtocolParams params = resolve_params(g, {});
  for (DaemonKind kind : {DaemonKind::RandomSubset, DaemonKind::SingleRandom, DaemonKind::Starving}) {
    auto make = [&] {
      switch (kind) {
        case DaemonKind::RandomSubset: return Daemon::random_subset(21);
        case DaemonKind::SingleRandom: return Daemon::single_random(21);
        default: return Daemon::starving(3, 21);
      }
    };
    Daemon a = make();
    Daemon b = make();
    const Configuration c0 = random_configuration(7, params.clock(), 8);
    const Execution ea = run(g, params, c0, a, steps(300));
    const Execution eb = run(g, params, c0, b, steps(300));
    REQUIRE(ea.steps() == eb.steps());
    for (std::size_t t = 0; t <= ea.steps(); ++t) CHECK(ea.configuration(t) == eb.configuration(t));
    CHECK(ea.schedule() == eb.schedule());

    Daemon replay = Daemon::replay(ea.schedule());
    const Execution er = run(g, params, c0, replay, steps(300));
    for (std::size_t t = 0; t <= ea.steps(); ++t) CHECK(er.configuration(t) == ea.configuration(t));
  }
}

TEST_CASE("no lockout after stabilization") {
  for (const auto& [name, g] : unison::testing::small_corpus()) {
    CAPTURE(name);
    const ProtocolParams params = resolve_params(g, {});
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      for (int k = 0; k < 3; ++k) {
        Daemon d = k == 0 ? Daemon::random_subset(seed)
                          : k == 1 ? Daemon::single_random(seed) : Daemon::starving(0, seed);
        StopCondition stop{200000, [&](const Execution& e) { return check_wu(g, params, e.last()); }};
        const Execution pre = run(g, params, random_configuration(g.size(), params.clock(), seed), d, stop);
        const Execution e = run(g, params, pre.last(), d, steps(600));
        const auto ends = round_ends(e);
        const std::size_t window = g.diameter() + 1;
        REQUIRE(ends.size() > window);
        std::size_t start = 0;
        for (std::size_t i = window - 1; i < ends.size(); ++i) {
          const std::size_t stop_at = ends[i];
          std::vector<bool> moved(g.size(), false);
          for (std::size_t t = start; t < stop_at; ++t) {
            for (const auto& ev : e.transition(t).events) moved[ev.process] = true;
          }
          CHECK(std::all_of(moved.begin(), moved.end(), [](bool b) { return b; }));
          start = ends[i - window + 1];
        }
      }
    }
  }
}

TEST_CASE("schedule round trip") {
  const Schedule s{{0, 2}, {1}, {0, 1, 2}};
  std::ostringstream out;
  write_schedule(out, s);
  CHECK(out.str() == "[0,2]\n[1]\n[0,1,2]\n");
  std::istringstream in(out.str() + "\n");
  CHECK(read_schedule(in) == s);
  std::istringstream bad("[0,1]\n{\n");
  CHECK_THROWS_AS(read_schedule(bad), Error);
}

TEST_CASE("execution suffix") {
  const Graph ring = families::ring(3);
  const ProtocolParams params{4, 3, 1, 1};
  Daemon d = Daemon::synchronous();
  const Execution e = run(ring, params, in_unison(3), d, steps(5));
  const Execution s = e.suffix(2);
  CHECK(s.steps() == 3);
  CHECK(s.initial() == e.configuration(2));
  CHECK(s.last() == e.last());
  CHECK(s.enabled_at(0) == e.enabled_at(2));
}
