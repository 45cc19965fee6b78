#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "rwsched/sequence.hpp"

using namespace rwsched;

namespace {

Aircraft land(int id, int klass, Duration fmin = 0,
              Duration fmax = kNoDeadline) {
  return {id, klass, Task::Landing, fmin, fmax};
}

Aircraft toff(int id, int klass, Duration fmin = 0,
              Duration fmax = kNoDeadline) {
  return {id, klass, Task::Takeoff, fmin, fmax};
}

} // namespace

TEST_CASE("earliest_schedule accumulates tight landing separations") {
  SeparationModel m = builtin_model("heathrow-recat-single");
  Sequence seq{land(1, 1), land(2, 2), land(3, 3)};
  auto s = earliest_schedule(seq, m, Layout::Single, 0);
  REQUIRE(s.has_value());
  CHECK(s->times == std::vector<Duration>{0, 135, 248});
  CHECK(makespan(*s) == 248);
}

TEST_CASE("earliest_schedule floors at the earliest window time") {
  SeparationModel m = builtin_model("heathrow-recat-single");
  Sequence seq{land(1, 4, 300, 600)};
  auto s = earliest_schedule(seq, m, Layout::Single, 0);
  REQUIRE(s.has_value());
  CHECK(s->times == std::vector<Duration>{300});
  CHECK(makespan(*s) == 300);
}

TEST_CASE("earliest_schedule handles single-runway task mixes") {
  SeparationModel m = builtin_model("heathrow-recat-single");
  Sequence seq{land(1, 1), toff(2, 6), land(3, 2)};
  auto s = earliest_schedule(seq, m, Layout::Single, 0);
  REQUIRE(s.has_value());
  // Takeoff waits T_D after the landing; the second landing is bound both
  // by D_T from the takeoff and by the landing pair separation.
  CHECK(s->times == std::vector<Duration>{0, 75, 135});
}

TEST_CASE("earliest_schedule reports the first window violation") {
  SeparationModel m = builtin_model("heathrow-recat-single");
  Sequence seq{land(1, 1), land(2, 2, 0, 100)}; // needs 135
  int bad = -1;
  auto s = earliest_schedule(seq, m, Layout::Single, 0, false, &bad);
  CHECK_FALSE(s.has_value());
  CHECK(bad == 1);
}

TEST_CASE("dual-layout ties put the landing before the takeoff") {
  SeparationModel m = builtin_model("heathrow-recat-dual");
  Sequence seq{land(1, 6), toff(2, 6)};
  auto s = earliest_schedule(seq, m, Layout::DualClose, 0);
  REQUIRE(s.has_value());
  CHECK(s->times == std::vector<Duration>{0, 0}); // P_D = 0
  Sequence rev{toff(2, 6), land(1, 6)};
  auto r = earliest_schedule(rev, m, Layout::DualClose, 0);
  REQUIRE(r.has_value());
  CHECK(r->times == std::vector<Duration>{0, 60}); // D_P = 60
}

TEST_CASE("relevance pairs are the tight constraints") {
  SeparationModel m = builtin_model("heathrow-recat-single");
  Sequence seq{land(1, 1), land(2, 2), land(3, 3)};
  Schedule s = *earliest_schedule(seq, m, Layout::Single, 0);
  auto pairs = relevance_pairs(s, m, Layout::Single);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == RelevancePair{1, 2});
  CHECK(pairs[1] == RelevancePair{2, 3});
  // (1,3) is absent: 248 - 0 > T13 = 158.

  Schedule one{{land(1, 3)}, {0}, 0};
  CHECK(relevance_pairs(one, m, Layout::Single).empty());

  SeparationModel d = builtin_model("heathrow-recat-dual");
  Schedule pair{{land(1, 6), toff(2, 6)}, {0, 0}, 0};
  auto dual_pairs = relevance_pairs(pair, d, Layout::DualClose);
  REQUIRE(dual_pairs.size() == 1);
  CHECK(dual_pairs[0] == RelevancePair{1, 2});
}

TEST_CASE("breakpoints are the class rises of a pure sequence") {
  CHECK(breakpoints({land(1, 6), land(2, 4), land(3, 2)}).empty());
  CHECK(breakpoints({land(1, 3), land(2, 5)}) == std::vector<int>{1});
  CHECK(breakpoints({land(1, 2), land(2, 2), land(3, 5), land(4, 1)}) ==
        std::vector<int>{2});
  CHECK_THROWS_AS(breakpoints({land(1, 2), toff(2, 3)}), MixedTasks);
}

TEST_CASE("resident points report slack against constraining predecessors") {
  SeparationModel m = builtin_model("heathrow-recat-single");
  Sequence seq{land(1, 1), land(2, 2), land(3, 3)};
  Schedule tight{seq, {0, 135, 248}, 0};
  CHECK(resident_points(tight, m, Layout::Single).empty());

  Schedule slack{seq, {0, 200, 313}, 0};
  auto pts = resident_points(slack, m, Layout::Single);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].first == 2);
  CHECK(pts[0].second == 65); // 200 - 135

  Schedule late{{land(1, 4)}, {10}, 0};
  auto first = resident_points(late, m, Layout::Single);
  REQUIRE(first.size() == 1);
  CHECK(first[0] == std::pair<int, Duration>{1, 10});
}

TEST_CASE("optimal path requires a tight chain back to the first aircraft") {
  SeparationModel m = builtin_model("heathrow-recat-single");
  Sequence seq{land(1, 1), land(2, 2), land(3, 3)};
  CHECK(has_optimal_path({seq, {0, 135, 248}, 0}, m, Layout::Single));
  CHECK_FALSE(has_optimal_path({seq, {0, 200, 313}, 0}, m, Layout::Single));
  CHECK(has_optimal_path({{land(1, 5)}, {0}, 0}, m, Layout::Single));
}

TEST_CASE("lookback-4 scheduling equals full-pairs on random sequences") {
  SeparationModel s = builtin_model("heathrow-recat-single");
  SeparationModel d = builtin_model("heathrow-recat-dual");
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 10000; ++trial) {
    const bool dual = trial % 2 == 1;
    const SeparationModel& m = dual ? d : s;
    const Layout layout = dual ? Layout::DualClose : Layout::Single;
    const int n = 2 + static_cast<int>(rng() % 11);
    Sequence seq;
    for (int i = 0; i < n; ++i) {
      Duration fmin = static_cast<Duration>(rng() % 600);
      Duration fmax =
          rng() % 3 == 0 ? kNoDeadline : fmin + 1800 + (rng() % 1800);
      seq.push_back({i + 1, static_cast<int>(1 + rng() % 6),
                     rng() % 2 ? Task::Takeoff : Task::Landing, fmin, fmax});
    }
    auto fast = earliest_schedule(seq, m, layout, 0, false);
    auto full = earliest_schedule(seq, m, layout, 0, true);
    CHECK(fast.has_value() == full.has_value());
    if (fast && full) CHECK(fast->times == full->times);
  }
}

TEST_CASE("pure earliest schedules are only relevant to the predecessor") {
  SeparationModel m = builtin_model("heathrow-recat-single");
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Task task = trial % 2 ? Task::Takeoff : Task::Landing;
    Sequence seq;
    const int n = 2 + static_cast<int>(rng() % 7);
    for (int i = 0; i < n; ++i)
      seq.push_back({i + 1, static_cast<int>(1 + rng() % 6), task, 0,
                     kNoDeadline});
    Schedule s = *earliest_schedule(seq, m, Layout::Single, 0);
    for (const RelevancePair& p : relevance_pairs(s, m, Layout::Single))
      CHECK(p.trail == p.lead + 1);
  }
}

TEST_CASE("unconstrained mixed earliest schedules always carry a path") {
  SeparationModel m = builtin_model("heathrow-recat-single");
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Sequence seq;
    const int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i)
      seq.push_back({i + 1, static_cast<int>(1 + rng() % 6),
                     rng() % 2 ? Task::Takeoff : Task::Landing, 0,
                     kNoDeadline});
    Schedule s = *earliest_schedule(seq, m, Layout::Single, 0);
    CHECK(has_optimal_path(s, m, Layout::Single));
  }
}

TEST_CASE("schedule serialization is deterministic") {
  Sequence seq{land(1, 1), toff(2, 6, 0, 900)};
  Schedule s{seq, {0, 75}, 0};
  std::ostringstream a, b;
  write_schedule(s, a);
  write_schedule(s, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("inf") != std::string::npos); // unbounded fmax
}
