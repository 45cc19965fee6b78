// Exact small-instance optimizers by permutation enumeration with
// branch-and-bound pruning, plus a subset-DP cross-check for pure
// unconstrained inputs. Ground truth for the optimality tests.
#pragma once

#include <cstdint>
#include <vector>

#include "rwsched/sequence.hpp"

namespace rwsched {

struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DualInstance {
  std::vector<Aircraft> landings;
  std::vector<Aircraft> takeoffs;
  Duration t0 = 0;
};

struct OracleResult {
  Duration makespan = 0;
  Schedule witness;
  std::uint64_t optimal_orders = 0; // orders achieving the minimum
  std::uint64_t nodes = 0;          // search nodes explored
};

OracleResult oracle_single(const std::vector<Aircraft>& aircraft,
                           const SeparationModel& model, Duration t0,
                           int limit = 10);

OracleResult oracle_dual(const DualInstance& inst,
                         const SeparationModel& model, int limit = 9);

// Pure-task, unconstrained-window minimum makespan by DP over
// (subset, last aircraft). Cross-check only.
Duration oracle_subset_dp(const std::vector<Aircraft>& aircraft,
                          const SeparationModel& model, Layout layout);

} // namespace rwsched
