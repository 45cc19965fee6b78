// Command-line front end: solvers, oracle, instance generation, MILP
// export, golden-table verification, and benchmarking.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rwsched/dual_solver.hpp"
#include "rwsched/harness.hpp"
#include "rwsched/oracle.hpp"
#include "rwsched/single_solver.hpp"

namespace {

using namespace rwsched;

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  return read_instance(in);
}

std::ostream& open_out(std::ofstream& file, const std::string& out_path) {
  if (out_path.empty()) return std::cout;
  file.open(out_path);
  if (!file) throw ParseError("cannot open output file: " + out_path);
  return file;
}

void print_solution(const Solution& sol, const SolverStats* stats) {
  write_schedule(sol.schedule, std::cout);
  std::cout << "makespan=" << sol.makespan;
  if (stats)
    std::cout << " candidates=" << stats->candidates_examined
              << " frontier_max=" << stats->frontier_max;
  std::cout << '\n';
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"runway scheduling toolkit"};
  app.require_subcommand(1);

  std::string model_name = "builtin";
  std::string instance_path;
  std::string out_path;
  std::string mode = "landing";
  int frontier_budget = 64;
  bool full_pairs = false;
  int limit = 9;
  int max_block_len = 8;
  int max_breakpoints = 2;
  bool dump_blocks = false;
  int count = 10;
  int te_min = 60;
  int tw_min = 30;
  std::uint64_t seed = 1;
  int oracle_threshold = 8;

  auto add_common = [&](CLI::App* cmd, bool needs_instance) {
    cmd->add_option("--model", model_name,
                    "separation model: builtin key or file path");
    if (needs_instance)
      cmd->add_option("--instance", instance_path, "instance file")
          ->required();
  };

  auto* ssingle = app.add_subcommand("solve-single",
                                     "single-runway insertion solver");
  add_common(ssingle, true);
  ssingle->add_option("--mode", mode, "landing|takeoff|mixed");
  ssingle->add_option("--frontier-budget", frontier_budget);
  ssingle->add_flag("--full-pairs-check", full_pairs);

  auto* sdual = app.add_subcommand("solve-dual", "dual-runway solver");
  add_common(sdual, true);
  sdual->add_option("--max-block-len", max_block_len);
  sdual->add_option("--max-breakpoints", max_breakpoints);

  auto* sblocks = app.add_subcommand("blocks", "block catalog inspection");
  add_common(sblocks, false);
  sblocks->add_flag("--dump", dump_blocks, "print the catalog tables");

  auto* soracle = app.add_subcommand("oracle", "exact small-instance solver");
  add_common(soracle, true);
  soracle->add_option("--limit", limit, "enumeration size limit");

  auto* sgen = app.add_subcommand("gen", "generate a random instance");
  sgen->add_option("--mode", mode, "landing|takeoff|mixed|dual");
  sgen->add_option("--count", count, "aircraft count");
  sgen->add_option("--te", te_min, "earliest-time horizon (minutes)");
  sgen->add_option("--tw", tw_min, "window width (minutes)");
  sgen->add_option("--seed", seed);
  sgen->add_option("--out", out_path, "output file (default stdout)");

  auto* smip = app.add_subcommand("export-mip", "LP-format MILP export");
  add_common(smip, true);
  smip->add_option("--out", out_path, "output file (default stdout)");

  auto* sverify = app.add_subcommand("verify-tables",
                                     "check block tables against goldens");
  add_common(sverify, false);

  auto* sbench = app.add_subcommand("bench", "benchmark CSV runner");
  add_common(sbench, true);
  sbench->add_option("--oracle-threshold", oracle_threshold);
  sbench->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    const SeparationModel model = load_separation_model(model_name);

    if (ssingle->parsed()) {
      const Instance inst = load_instance(instance_path);
      SolveOptions opt;
      opt.frontier_budget = frontier_budget;
      opt.full_pairs_check = full_pairs;
      const Solution sol = solve_single(inst.aircraft, model, inst.t0, opt);
      print_solution(sol, &sol.stats);
    } else if (sdual->parsed()) {
      const Instance inst = load_instance(instance_path);
      const Solution sol = solve_dual(to_dual(inst), model);
      print_solution(sol, nullptr);
    } else if (sblocks->parsed()) {
      if (dump_blocks) {
        const TableReport rep = verify_tables(model);
        std::string current;
        for (const TableCellCheck& c : rep.cells) {
          if (c.table != current) {
            current = c.table;
            std::cout << "table " << current << '\n';
          }
          std::cout << "  row " << c.row << " col " << c.col << " value "
                    << c.actual << '\n';
        }
      } else {
        const BlockCatalog cat =
            enumerate_blocks(model, max_breakpoints, max_block_len);
        std::cout << "descriptors=" << cat.descriptors.size() << '\n';
      }
    } else if (soracle->parsed()) {
      const Instance inst = load_instance(instance_path);
      if (static_cast<int>(inst.aircraft.size()) > limit) {
        std::cerr << "instance exceeds the oracle limit of " << limit
                  << " aircraft\n";
        return 1;
      }
      const OracleResult res =
          inst.layout == Layout::DualClose
              ? oracle_dual(to_dual(inst), model, limit)
              : oracle_single(inst.aircraft, model, inst.t0, limit);
      write_schedule(res.witness, std::cout);
      std::cout << "makespan=" << res.makespan
                << " optimal_orders=" << res.optimal_orders
                << " nodes=" << res.nodes << '\n';
    } else if (sgen->parsed()) {
      GenSpec spec;
      spec.count = count;
      spec.te_min = te_min;
      spec.tw_min = tw_min;
      spec.seed = seed;
      spec.mode = mode == "landing"   ? GenMode::LandingOnly
                  : mode == "takeoff" ? GenMode::TakeoffOnly
                  : mode == "mixed"   ? GenMode::Mixed
                                      : GenMode::Dual;
      std::ofstream file;
      write_instance(gen_instance(spec), open_out(file, out_path));
    } else if (smip->parsed()) {
      const Instance inst = load_instance(instance_path);
      std::ofstream file;
      open_out(file, out_path) << export_mip(inst, model);
    } else if (sverify->parsed()) {
      const TableReport rep = verify_tables(model);
      for (const TableCellCheck& c : rep.cells)
        if (!c.pass)
          std::cout << "mismatch table " << c.table << " row " << c.row
                    << " col " << c.col << ": expected " << c.expected
                    << ", got " << c.actual << '\n';
      std::cout << rep.pass_count() << "/" << rep.cells.size() << " cells pass\n";
      return rep.all_pass() ? 0 : 1;
    } else if (sbench->parsed()) {
      std::ifstream cfg(instance_path);
      if (!cfg) throw ParseError("cannot open config: " + instance_path);
      const auto rows =
          run_bench(read_bench_config(cfg), model, oracle_threshold);
      std::ofstream file;
      write_bench_csv(rows, open_out(file, out_path));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
