// Sequence and schedule primitives: earliest-time forward scheduling under
// pairwise separation constraints, makespan, tight-pair (relevance) graph,
// breakpoints, resident points and path checks.
#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "rwsched/separation.hpp"

namespace rwsched {

struct Aircraft {
  int id = 0;
  int klass = 1; // 1..eta
  Task task = Task::Landing;
  Duration fmin = 0;
  Duration fmax = kNoDeadline;

  friend bool operator==(const Aircraft&, const Aircraft&) = default;
};

using Sequence = std::vector<Aircraft>;

struct Schedule {
  Sequence seq;
  std::vector<Duration> times; // one entry per aircraft, non-decreasing
  Duration t0 = 0;
};

struct MixedTasks : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Y between positions i and j (0-based) of a sequence, i leading.
Duration pair_separation(const Sequence& seq, int i, int j,
                         const SeparationModel& model, Layout layout);

// Greedy forward pass: S_i = max(t0, fmin_i, max_j S_j + Y_ji) over the
// preceding aircraft j within the lookback distance (4 by default, which is
// provably equivalent to all-pairs for these models; full_pairs retained for
// cross-checking). Returns nullopt and sets *bad_index (0-based) when some
// S_i would exceed its latest allowed time.
std::optional<Schedule> earliest_schedule(const Sequence& seq,
                                          const SeparationModel& model,
                                          Layout layout, Duration t0,
                                          bool full_pairs = false,
                                          int* bad_index = nullptr);

Duration makespan(const Schedule& s);

struct RelevancePair {
  int lead = 0;  // 1-based position in the sequence
  int trail = 0; // 1-based position in the sequence

  friend bool operator==(const RelevancePair&, const RelevancePair&) = default;
};

// All (i, j), i < j, j - i <= 4, with S_j - S_i == Y_ij exactly. 1-based.
std::vector<RelevancePair> relevance_pairs(const Schedule& s,
                                           const SeparationModel& model,
                                           Layout layout);

// 1-based positions i with cl_i < cl_{i+1}. Throws MixedTasks when the
// sequence mixes landings and takeoffs (breakpoints are a pure-task notion).
std::vector<int> breakpoints(const Sequence& seq);

// (1-based position, resident time). The first aircraft is resident when it
// starts after t0. A later aircraft is resident when it has slack against
// every constraining predecessor: the immediate predecessor for pure
// sequences, the nearest preceding landing and the nearest preceding takeoff
// for mixed ones (a missing branch imposes no constraint).
std::vector<std::pair<int, Duration>> resident_points(
    const Schedule& s, const SeparationModel& model, Layout layout);

// True when a chain of tight pairs links the last aircraft back to the first.
bool has_optimal_path(const Schedule& s, const SeparationModel& model,
                      Layout layout);

// One line per aircraft: "id class task S fmin fmax", task L/T, "inf" for an
// unbounded fmax. Deterministic sequence order.
void write_schedule(const Schedule& s, std::ostream& out);

} // namespace rwsched
