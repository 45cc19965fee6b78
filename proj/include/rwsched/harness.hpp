// Benchmark harness: seeded instance generation, LP-format MILP export,
// golden-table verification, and the CSV benchmark runner.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rwsched/dual_solver.hpp"

namespace rwsched {

enum class GenMode { LandingOnly, TakeoffOnly, Mixed, Dual };

struct GenSpec {
  int count = 0;
  int te_min = 60;        // earliest-time horizon, minutes
  int tw_min = 30;        // window width, minutes
  GenMode mode = GenMode::LandingOnly;
  std::uint64_t seed = 0;
  std::array<int, 6> proportions = {10, 20, 25, 15, 20, 10}; // percent
};

struct Instance {
  Layout layout = Layout::Single;
  Duration t0 = 0;
  std::vector<Aircraft> aircraft; // landings first for dual layout
};

Instance gen_instance(const GenSpec& spec);

// Largest-remainder apportionment of `count` aircraft over the percentages.
std::array<int, 6> class_counts(int count, const std::array<int, 6>& pct);

Instance read_instance(std::istream& in);
void write_instance(const Instance& inst, std::ostream& out);

DualInstance to_dual(const Instance& inst);

std::string export_mip(const Instance& inst, const SeparationModel& model);

// Independent check of an exported LP text: parses it back, enumerates the
// pairwise order binaries, solves the continuous part by longest path, and
// returns the optimum. Intended for n small enough that 2^(n(n-1)/2) is
// cheap.
Duration solve_exported_mip(const std::string& lp_text);

struct TableCellCheck {
  std::string table; // "I".."VIII"
  int row = 0;       // 0-based row within the table
  int col = 0;
  Duration expected = 0;
  Duration actual = 0;
  bool pass = false;
};

struct TableReport {
  std::vector<TableCellCheck> cells;
  bool all_pass() const;
  int pass_count() const;
};

TableReport verify_tables(const SeparationModel& model);

struct BenchRow {
  std::string id;
  std::string mode;
  int n = 0;
  int tw_min = 0;
  int te_min = 0;
  Duration solver_s = 0;
  Duration baseline_s = 0;
  Duration oracle_s = -1; // -1 = not computed
  double time_s = 0.0;
};

struct BenchJob {
  GenSpec spec;
  int repetitions = 1;
};

std::vector<BenchJob> read_bench_config(std::istream& in);
std::vector<BenchRow> run_bench(const std::vector<BenchJob>& jobs,
                                const SeparationModel& model,
                                int oracle_threshold = 8);
void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

} // namespace rwsched
