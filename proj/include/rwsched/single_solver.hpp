// Incremental insertion-based single-runway solver: aircraft enter in
// ascending earliest-time order; each step tries plain insertions into every
// frontier schedule plus bound-admissible local reorderings, and the frontier
// of equal-makespan orders is rebuilt from drift moves.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rwsched/calculus.hpp"
#include "rwsched/oracle.hpp"
#include "rwsched/sequence.hpp"

namespace rwsched {

enum class Optimality { ProvedByEnumeration, HeuristicBest };

struct SolverStats {
  std::uint64_t candidates_examined = 0;
  int frontier_max = 0;
};

struct Solution {
  Schedule schedule;
  Duration makespan = 0;
  Optimality optimality = Optimality::HeuristicBest;
  SolverStats stats;
};

struct SolveOptions {
  int frontier_budget = 64;
  bool full_pairs_check = false;
};

struct SolverState {
  std::vector<Schedule> frontier; // equal-makespan feasible schedules
  Duration best_makespan = 0;
  int inserted = 0;
};

struct InsertionCandidate {
  int frontier_index = 0;
  int position = 0;         // insertion slot in the host order (0-based)
  bool reordered = false;   // true when a local reorder was applied
  Duration bound = 0;       // lower bound used for admission
  Duration makespan = 0;    // exact resulting makespan
  Sequence order;           // resulting full order
};

Solution solve_single(std::vector<Aircraft> aircraft,
                      const SeparationModel& model, Duration t0,
                      const SolveOptions& options = {});

std::vector<InsertionCandidate> insert_candidates(const SolverState& state,
                                                  const Aircraft& next,
                                                  const SeparationModel& model);

Solution fcfs_baseline(std::vector<Aircraft> aircraft,
                       const SeparationModel& model, Duration t0);

} // namespace rwsched
