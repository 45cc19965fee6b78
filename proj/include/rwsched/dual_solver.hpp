// Dual closely-spaced runway solver: block-subsequence catalog, matching of
// takeoffs against a fixed landing schedule, tail insertion of overflow
// takeoffs, and bounded search over per-task order variants.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rwsched/oracle.hpp"
#include "rwsched/single_solver.hpp"

namespace rwsched {

struct NotBlockDecomposable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSemiResident : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class BlockKind { TBlock, DBlock, TDBlock };
enum class BlockAnchor { LandingFirstSameTime, TakeoffFirstOffsetT0 };

struct BlockDescriptor {
  BlockKind kind = BlockKind::TBlock;
  BlockAnchor anchor = BlockAnchor::LandingFirstSameTime;
  std::vector<int> landing_classes;
  std::vector<int> takeoff_classes;
  // capacity = (|phi1|-1)/(|phi0|-1); infinite when the denominator is 0.
  int capacity_num = 0;
  int capacity_den = 0; // 0 encodes the symbolic infinite capacity
  Duration time_length = 0;
  Duration increment = 0; // takeoff increment (T-block) / landing (D-block)
  Duration initial_redundant_time = 0;

  bool capacity_infinite() const { return capacity_den == 0; }
};

// Query result for one realized block: the achieved separation between the
// two minor-task aircraft and its excess over the minimum.
struct BlockRealization {
  Duration achieved = 0;
  Duration increment = 0;
  std::vector<Duration> times; // minor-task times, anchor-relative
};

struct BlockCatalog {
  std::vector<BlockDescriptor> descriptors;
  int max_breakpoints = 2;
  int max_len = 8;

  // Schedule a pair of minor-task aircraft against fixed major-task gaps.
  // For T-blocks the major task is landing (gaps = landing separations) and
  // min_sep is the takeoff-pair minimum; for D-blocks the roles swap.
  static BlockRealization realize(const SeparationModel& model,
                                  BlockKind kind, BlockAnchor anchor,
                                  const std::vector<Duration>& fixed_gaps,
                                  Duration min_sep);
};

BlockCatalog enumerate_blocks(const SeparationModel& model,
                              int max_breakpoints = 2, int max_len = 8);

struct BlockSpan {
  BlockDescriptor desc;
  int first = 0; // 1-based inclusive positions in the merged sequence
  int last = 0;
};

std::vector<BlockSpan> detect_blocks(const Schedule& s,
                                     const SeparationModel& model);

Schedule match_fixed_landing(const Schedule& landing_sched,
                             const std::vector<Aircraft>& takeoffs,
                             const BlockCatalog& catalog,
                             const SeparationModel& model);

Schedule tail_insertion(const Schedule& merged, const BlockCatalog& catalog,
                        const SeparationModel& model);

Solution solve_dual(const DualInstance& inst, const SeparationModel& model,
                    const SolveOptions& options = {});

// Combined (landing increment, takeoff increment) for ordered consecutive
// block pairs that share their boundary two aircraft.
using BlockPairKey = std::pair<int, int>; // descriptor indices into catalog
std::map<BlockPairKey, std::pair<Duration, Duration>> block_pair_table(
    const BlockCatalog& catalog, const SeparationModel& model);

struct SemiResidentShift {
  Schedule schedule;        // with the pair at `position` exchanged
  Duration relative_offset; // exact offset of the swapped pair
  int absorption_index;     // 1-based first downstream position unaffected
};

SemiResidentShift semi_resident_shift(const Schedule& s, int position,
                                      const SeparationModel& model);

} // namespace rwsched
