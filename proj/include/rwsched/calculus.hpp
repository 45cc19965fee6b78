// Class-level calculus on separation tables: the Gamma functional and its
// sign-classified quintuple families, the Theta quadruple families, special
// equality pair sets, insertion increments, block-merge makespan deltas,
// insertion lower bounds, and equal-makespan order neighborhoods.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rwsched/sequence.hpp"
#include "rwsched/separation.hpp"

namespace rwsched {

struct MixedTasksWithoutTransitions : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ClassQuintuple = std::array<int, 5>;
using ClassQuadruple = std::array<int, 4>;

// Gamma(<i1..i5>) = Y12 + Y23 + Y45 - Y13 - Y42 - Y25 over one task's table.
Duration gamma(const SeparationModel& model, Task task,
               const ClassQuintuple& q);

struct GammaSets {
  // omega[k] holds the quintuples satisfying predicate Psi_k with Gamma >= 0.
  std::array<std::vector<ClassQuintuple>, 6> omega;
};

GammaSets enumerate_gamma_sets(const SeparationModel& model, Task task);

struct ThetaSets {
  std::vector<ClassQuadruple> theta0; // <i,k,j,h>: i<j<k, i<h<k, tight detour
  std::vector<ClassQuadruple> theta1; // mirrored: k<i<j, k<h<j
};

ThetaSets enumerate_theta_sets(const SeparationModel& model);

struct SpecialPairSets {
  std::vector<std::array<int, 2>> e;   // landing: near-delta column drops
  std::vector<std::array<int, 2>> e1;  // takeoff: one-third-t0 column drops
  std::vector<std::array<int, 2>> e20; // takeoff: equal columns below row 3
  std::vector<std::array<int, 2>> e21;
  std::vector<std::array<int, 2>> e30; // takeoff: row steps into column rho2
  std::vector<std::array<int, 2>> e31;
  std::vector<std::array<int, 2>> e4;  // takeoff: last-row diagonal step
};

SpecialPairSets special_pair_sets(const SeparationModel& model);

// Cost of inserting class i between adjacent classes k (leading) and j:
// Y_ki + Y_ij - Y_kj, with task-aware lookups.
Duration insertion_increment(const SeparationModel& model, Layout layout,
                             int k, Task k_task, int i, Task i_task, int j,
                             Task j_task);

struct Segment {
  Task task = Task::Landing;
  std::vector<int> classes; // non-increasing within the segment
};

using SegmentedSequence = std::vector<Segment>;

// Predicted makespan change from replacing a segmented unconstrained sequence
// by its class-sorted merged counterpart (landing-only, takeoff-only, or the
// mixed two-phase variant). A mixed input must alternate tasks between
// adjacent segments or MixedTasksWithoutTransitions is thrown.
Duration merge_delta(const SeparationModel& model,
                     const SegmentedSequence& segments);

// Lower bound on the makespan increase of inserting `cand` between positions
// two and three of the four-aircraft context <a1,a2,a3,a4> (classes + tasks).
Duration omega_min_bound(const SeparationModel& model, Layout layout,
                         int c1, Task t1, int c2, Task t2, int c3, Task t3,
                         int c4, Task t4, int cand, Task cand_task);

// Orders with the same makespan as the input schedule, reachable by
// single-aircraft and same-class block moves (breakpoint aircraft and their
// trailers explored first), deduplicated, capped at `budget` entries.
// Always contains the input order itself.
std::vector<Sequence> breakpoint_drift_set(const Schedule& s,
                                           const SeparationModel& model,
                                           Layout layout, int budget = 64);

} // namespace rwsched
