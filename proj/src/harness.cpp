// Instance generation, LP-format MILP export with an independent re-solve,
// golden verification of the block tables, and the benchmark runner.
#include "rwsched/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "rwsched/oracle.hpp"

namespace rwsched {

namespace {

// Bounded uniform draw from a named, portable generator (mt19937_64 output
// is fully specified by the C++ standard); rejection sampling avoids modulo
// bias so instances reproduce bit-exactly on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

} // namespace

std::array<int, 6> class_counts(int count, const std::array<int, 6>& pct) {
  std::array<int, 6> out{};
  std::array<int, 6> rem{};
  int assigned = 0;
  for (int c = 0; c < 6; ++c) {
    out[c] = count * pct[c] / 100;
    rem[c] = count * pct[c] % 100;
    assigned += out[c];
  }
  // Largest remainder, ties to the heavier class (lower index).
  std::array<int, 6> idx = {0, 1, 2, 3, 4, 5};
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (rem[a] != rem[b]) return rem[a] > rem[b];
    return a < b;
  });
  for (int k = 0; assigned < count; ++k, ++assigned) out[idx[k % 6]] += 1;
  return out;
}

Instance gen_instance(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  Instance inst;
  inst.layout = spec.mode == GenMode::Dual ? Layout::DualClose
                                           : Layout::Single;
  inst.t0 = 0;

  const std::array<int, 6> counts = class_counts(spec.count,
                                                 spec.proportions);
  std::vector<int> classes;
  for (int c = 0; c < 6; ++c)
    classes.insert(classes.end(), counts[c], c + 1);
  // Fisher-Yates with the portable draws.
  for (int i = static_cast<int>(classes.size()) - 1; i > 0; --i)
    std::swap(classes[i],
              classes[static_cast<int>(uniform_below(rng, i + 1))]);

  const Duration horizon = Duration(spec.te_min) * 60;
  const Duration width = Duration(spec.tw_min) * 60;
  const int n_land = spec.mode == GenMode::Dual
                         ? (spec.count + 1) / 2
                         : (spec.mode == GenMode::LandingOnly ? spec.count
                                                              : 0);
  for (int i = 0; i < spec.count; ++i) {
    Aircraft a;
    a.id = i + 1;
    a.klass = classes[i];
    switch (spec.mode) {
      case GenMode::LandingOnly:
        a.task = Task::Landing;
        break;
      case GenMode::TakeoffOnly:
        a.task = Task::Takeoff;
        break;
      case GenMode::Mixed:
        a.task = uniform_below(rng, 2) ? Task::Takeoff : Task::Landing;
        break;
      case GenMode::Dual:
        a.task = i < n_land ? Task::Landing : Task::Takeoff;
        break;
    }
    a.fmin = static_cast<Duration>(uniform_below(
        rng, static_cast<std::uint64_t>(horizon) + 1));
    a.fmax = a.fmin + width;
    inst.aircraft.push_back(a);
  }
  // Keep landings grouped first for dual layout files.
  if (spec.mode == GenMode::Dual)
    std::stable_partition(inst.aircraft.begin(), inst.aircraft.end(),
                          [](const Aircraft& a) {
                            return a.task == Task::Landing;
                          });
  return inst;
}

Instance read_instance(std::istream& in) {
  Instance inst;
  std::string layout;
  int n = 0;
  if (!(in >> layout >> inst.t0 >> n))
    throw ParseError("instance: bad header");
  if (layout == "single")
    inst.layout = Layout::Single;
  else if (layout == "dual")
    inst.layout = Layout::DualClose;
  else
    throw ParseError("instance: unknown layout " + layout);
  for (int i = 0; i < n; ++i) {
    Aircraft a;
    std::string task, fmax;
    if (!(in >> a.id >> a.klass >> task >> a.fmin >> fmax))
      throw ParseError("instance: bad aircraft line");
    if (task == "L")
      a.task = Task::Landing;
    else if (task == "T")
      a.task = Task::Takeoff;
    else
      throw ParseError("instance: unknown task " + task);
    a.fmax = fmax == "inf" ? kNoDeadline : std::stoll(fmax);
    inst.aircraft.push_back(a);
  }
  return inst;
}

void write_instance(const Instance& inst, std::ostream& out) {
  out << (inst.layout == Layout::Single ? "single" : "dual") << ' '
      << inst.t0 << ' ' << inst.aircraft.size() << '\n';
  for (const Aircraft& a : inst.aircraft) {
    out << a.id << ' ' << a.klass << ' '
        << (a.task == Task::Landing ? 'L' : 'T') << ' ' << a.fmin << ' ';
    if (a.fmax >= kNoDeadline)
      out << "inf";
    else
      out << a.fmax;
    out << '\n';
  }
}

DualInstance to_dual(const Instance& inst) {
  DualInstance d;
  d.t0 = inst.t0;
  for (const Aircraft& a : inst.aircraft)
    (a.task == Task::Landing ? d.landings : d.takeoffs).push_back(a);
  return d;
}

std::string export_mip(const Instance& inst, const SeparationModel& model) {
  const int n = static_cast<int>(inst.aircraft.size());
  Duration big = 0;
  for (const Aircraft& a : inst.aircraft)
    big = std::max(big, a.fmax >= kNoDeadline
                            ? a.fmin + Duration(n) * 3 * model.t0_base
                            : a.fmax);
  const Duration m_big = big + 3 * model.t0_base;

  std::ostringstream out;
  out << "\\ runway scheduling instance, layout "
      << (inst.layout == Layout::Single ? "single" : "dual") << ", t0 "
      << inst.t0 << "\nMinimize\n obj: Cmax\nSubject To\n";
  for (int i = 0; i < n; ++i)
    out << " m" << i << ": Cmax - S" << inst.aircraft[i].id
        << " >= " << -inst.t0 << '\n';
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Aircraft& a = inst.aircraft[i];
      const Aircraft& b = inst.aircraft[j];
      const Duration yab = min_separation(model, a.klass, a.task, b.klass,
                                          b.task, inst.layout);
      const Duration yba = min_separation(model, b.klass, b.task, a.klass,
                                          a.task, inst.layout);
      // z = 1 means a before b.
      out << " p" << a.id << "_" << b.id << "a: S" << b.id << " - S" << a.id
          << " - " << (yab + m_big) << " z" << a.id << "_" << b.id
          << " >= " << -m_big << '\n';
      out << " p" << a.id << "_" << b.id << "b: S" << a.id << " - S" << b.id
          << " + " << (yba + m_big) << " z" << a.id << "_" << b.id
          << " >= " << yba << '\n';
    }
  out << "Bounds\n";
  for (const Aircraft& a : inst.aircraft) {
    if (a.fmax >= kNoDeadline)
      out << " S" << a.id << " >= " << a.fmin << '\n';
    else
      out << ' ' << a.fmin << " <= S" << a.id << " <= " << a.fmax << '\n';
  }
  out << " Cmax >= 0\nBinaries\n";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out << " z" << inst.aircraft[i].id << "_" << inst.aircraft[j].id
          << '\n';
  out << "End\n";
  return out.str();
}

namespace {

// Minimal reader for the exported LP structure: linear rows "label: terms
// >= rhs", a bounds section, and a binaries section.
struct LpRow {
  std::map<std::string, double> coef;
  double rhs = 0;
};

struct LpProblem {
  std::vector<LpRow> rows;
  std::map<std::string, std::pair<double, double>> bounds;
  std::vector<std::string> binaries;
};

LpProblem parse_lp(const std::string& text) {
  LpProblem p;
  std::istringstream in(text);
  std::string line;
  enum { None, Constraints, InBounds, InBinaries } section = None;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '\\') continue;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "Minimize" || first == "Maximize") {
      std::getline(in, line); // objective row, known to be Cmax
      continue;
    }
    if (first == "Subject") {
      section = Constraints;
      continue;
    }
    if (first == "Bounds") {
      section = InBounds;
      continue;
    }
    if (first == "Binaries") {
      section = InBinaries;
      continue;
    }
    if (first == "End") break;
    if (section == Constraints) {
      LpRow row;
      std::string tok = first.substr(first.find(':') + 1);
      std::vector<std::string> toks;
      if (!tok.empty()) toks.push_back(tok);
      while (ls >> tok) toks.push_back(tok);
      double sign = 1;
      double pending = 1;
      bool have_coef = false;
      for (std::size_t k = 0; k < toks.size(); ++k) {
        const std::string& t = toks[k];
        if (t == "+") {
          sign = 1;
        } else if (t == "-") {
          sign = -1;
        } else if (t == ">=") {
          row.rhs = std::stod(toks.at(k + 1));
          break;
        } else if (std::isdigit(t[0]) || t[0] == '.' ||
                   (t.size() > 1 && (t[0] == '-' || t[0] == '+'))) {
          pending = std::stod(t);
          have_coef = true;
        } else {
          row.coef[t] += sign * (have_coef ? pending : 1);
          sign = 1;
          pending = 1;
          have_coef = false;
        }
      }
      p.rows.push_back(std::move(row));
    } else if (section == InBounds) {
      // Either "lo <= var <= hi" or "var >= lo".
      std::vector<std::string> toks = {first};
      std::string tok;
      while (ls >> tok) toks.push_back(tok);
      if (toks.size() == 5 && toks[1] == "<=")
        p.bounds[toks[2]] = {std::stod(toks[0]), std::stod(toks[4])};
      else if (toks.size() == 3 && toks[1] == ">=")
        p.bounds[toks[0]] = {std::stod(toks[2]), 1e18};
    } else if (section == InBinaries) {
      p.binaries.push_back(first);
    }
  }
  return p;
}

} // namespace

Duration solve_exported_mip(const std::string& lp_text) {
  const LpProblem p = parse_lp(lp_text);
  // Index the variables once: continuous times, binaries, Cmax.
  std::map<std::string, int> sidx, bidx;
  for (const auto& [name, b] : p.bounds)
    if (name != "Cmax" &&
        std::find(p.binaries.begin(), p.binaries.end(), name) ==
            p.binaries.end())
      sidx.emplace(name, static_cast<int>(sidx.size()));
  for (const std::string& name : p.binaries)
    bidx.emplace(name, static_cast<int>(bidx.size()));
  const int ns = static_cast<int>(sidx.size());
  const int nb = static_cast<int>(bidx.size());
  if (nb > 20) throw Infeasible("exported model too large to enumerate");

  struct Row {
    int pos = -1, neg = -1;   // continuous variables, coefficient +1 / -1
    int cmax_s = -1;          // the S variable of a Cmax row
    double rhs = 0;
    std::vector<std::pair<int, double>> binc; // binary coefficients
  };
  std::vector<Row> rows;
  std::vector<Row> cmax_rows;
  for (const LpRow& lr : p.rows) {
    Row row;
    row.rhs = lr.rhs;
    bool is_cmax = false;
    for (const auto& [v, c] : lr.coef) {
      if (v == "Cmax") {
        is_cmax = true;
      } else if (bidx.count(v)) {
        row.binc.push_back({bidx[v], c});
      } else if (c > 0) {
        row.pos = sidx[v];
      } else {
        row.neg = sidx[v];
      }
    }
    if (is_cmax) {
      row.cmax_s = row.pos >= 0 ? row.pos : row.neg;
      cmax_rows.push_back(row);
    } else {
      rows.push_back(row);
    }
  }
  std::vector<double> blo(ns), bhi(ns);
  for (const auto& [name, b] : p.bounds)
    if (sidx.count(name)) {
      blo[sidx[name]] = b.first;
      bhi[sidx[name]] = b.second;
    }

  double best = 1e18;
  std::vector<double> lo(ns);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nb); ++mask) {
    lo = blo;
    bool feasible = true;
    // With binaries fixed, every non-Cmax row is a difference constraint
    // pos - neg >= rhs': longest-path propagation to a fixpoint yields the
    // earliest feasible times, which minimize the maximum.
    for (int pass = 0; pass <= ns + 1 && feasible; ++pass) {
      bool changed = false;
      for (const Row& row : rows) {
        double rhs = row.rhs;
        for (const auto& [b, c] : row.binc)
          rhs -= c * ((mask >> b & 1) ? 1.0 : 0.0);
        if (row.pos >= 0) {
          const double need = (row.neg >= 0 ? lo[row.neg] : 0.0) + rhs;
          if (need > lo[row.pos] + 1e-9) {
            lo[row.pos] = need;
            changed = true;
            if (lo[row.pos] > bhi[row.pos] + 1e-9) feasible = false;
          }
        }
      }
      if (!changed) break;
      if (pass == ns + 1) feasible = false; // positive cycle
    }
    if (!feasible) continue;
    double cmax = 0;
    for (const Row& row : cmax_rows)
      cmax = std::max(cmax, lo[row.cmax_s] + row.rhs);
    best = std::min(best, cmax);
  }
  if (best >= 1e18) throw Infeasible("exported model infeasible");
  return static_cast<Duration>(best + 0.5);
}

namespace {

struct GoldenTable {
  const char* name;
  BlockKind kind;
  BlockAnchor anchor;
  bool increments; // false: achieved separations, true: increments
  Duration rows[4][3];
  Duration cols[7];
  Duration cells[4][7];
};

constexpr Duration kTCols[7] = {60, 80, 100, 120, 140, 160, 180};
constexpr Duration kDCols[7] = {60, 68, 90, 113, 135, 158, 180};

const GoldenTable kGolden[] = {
    {"I", BlockKind::TBlock, BlockAnchor::LandingFirstSameTime, false,
     {{60, 60, 60}, {60, 60, 90}, {60, 90, 90}, {90, 90, 90}},
     {60, 80, 100, 120, 140, 160, 180},
     {{60, 120, 120, 120, 180, 180, 180},
      {60, 120, 120, 120, 140, 210, 210},
      {60, 80, 150, 150, 150, 160, 180},
      {90, 90, 100, 120, 180, 180, 180}}},
    {"II", BlockKind::TBlock, BlockAnchor::TakeoffFirstOffsetT0, false,
     {{60, 60, 60}, {60, 60, 90}, {60, 90, 90}, {90, 90, 90}},
     {60, 80, 100, 120, 140, 160, 180},
     {{60, 120, 120, 120, 180, 180, 180},
      {60, 120, 120, 120, 180, 180, 180},
      {60, 120, 120, 120, 140, 210, 210},
      {60, 80, 150, 150, 150, 160, 180}}},
    {"III", BlockKind::DBlock, BlockAnchor::LandingFirstSameTime, false,
     {{60, 60, 60}, {60, 60, 80}, {60, 80, 80}, {80, 80, 80}},
     {60, 68, 90, 113, 135, 158, 180},
     {{60, 120, 120, 120, 180, 180, 180},
      {60, 120, 120, 120, 180, 180, 180},
      {60, 120, 120, 120, 135, 200, 200},
      {60, 68, 140, 140, 140, 158, 220}}},
    {"IV", BlockKind::DBlock, BlockAnchor::TakeoffFirstOffsetT0, false,
     {{60, 60, 60}, {60, 60, 80}, {60, 80, 80}, {80, 80, 80}},
     {60, 68, 90, 113, 135, 158, 180},
     {{60, 120, 120, 120, 180, 180, 180},
      {60, 120, 120, 120, 135, 200, 200},
      {60, 68, 140, 140, 140, 158, 220},
      {80, 80, 90, 160, 160, 160, 180}}},
    {"V", BlockKind::TBlock, BlockAnchor::LandingFirstSameTime, true,
     {{60, 60, 60}, {60, 60, 90}, {60, 90, 90}, {90, 90, 90}},
     {60, 80, 100, 120, 140, 160, 180},
     {{0, 40, 20, 0, 40, 20, 0},
      {0, 40, 20, 0, 0, 50, 30},
      {0, 0, 50, 30, 10, 0, 0},
      {30, 10, 0, 0, 40, 20, 0}}},
    {"VI", BlockKind::TBlock, BlockAnchor::TakeoffFirstOffsetT0, true,
     {{60, 60, 60}, {60, 60, 90}, {60, 90, 90}, {90, 90, 90}},
     {60, 80, 100, 120, 140, 160, 180},
     {{0, 40, 20, 0, 40, 20, 0},
      {0, 40, 20, 0, 40, 20, 0},
      {0, 40, 20, 0, 0, 50, 30},
      {0, 0, 50, 30, 10, 0, 0}}},
    {"VII", BlockKind::DBlock, BlockAnchor::LandingFirstSameTime, true,
     {{60, 60, 60}, {60, 60, 80}, {60, 80, 80}, {80, 80, 80}},
     {60, 68, 90, 113, 135, 158, 180},
     {{0, 52, 30, 7, 45, 22, 0},
      {0, 52, 30, 7, 45, 22, 0},
      {0, 52, 30, 7, 0, 42, 20},
      {0, 0, 50, 27, 5, 0, 40}}},
    {"VIII", BlockKind::DBlock, BlockAnchor::TakeoffFirstOffsetT0, true,
     {{60, 60, 60}, {60, 60, 80}, {60, 80, 80}, {80, 80, 80}},
     {60, 68, 90, 113, 135, 158, 180},
     {{0, 52, 30, 7, 45, 22, 0},
      {0, 52, 30, 7, 0, 42, 20},
      {0, 0, 50, 27, 5, 0, 40},
      {20, 12, 0, 47, 25, 2, 0}}},
};

} // namespace

bool TableReport::all_pass() const {
  for (const TableCellCheck& c : cells)
    if (!c.pass) return false;
  return true;
}

int TableReport::pass_count() const {
  int k = 0;
  for (const TableCellCheck& c : cells) k += c.pass ? 1 : 0;
  return k;
}

TableReport verify_tables(const SeparationModel& model) {
  TableReport rep;
  for (const GoldenTable& g : kGolden) {
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 7; ++c) {
        const std::vector<Duration> gaps(std::begin(g.rows[r]),
                                         std::end(g.rows[r]));
        const BlockRealization real =
            BlockCatalog::realize(model, g.kind, g.anchor, gaps, g.cols[c]);
        TableCellCheck cell;
        cell.table = g.name;
        cell.row = r;
        cell.col = c;
        cell.expected = g.cells[r][c];
        cell.actual = g.increments ? real.increment : real.achieved;
        cell.pass = cell.actual == cell.expected;
        rep.cells.push_back(cell);
      }
  }
  return rep;
}

std::vector<BenchJob> read_bench_config(std::istream& in) {
  std::vector<BenchJob> jobs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string mode;
    BenchJob job;
    std::uint64_t seed = 0;
    if (!(ls >> mode >> job.spec.count >> job.spec.te_min >>
          job.spec.tw_min >> seed >> job.repetitions))
      throw ParseError("bench config: bad line: " + line);
    job.spec.seed = seed;
    if (mode == "landing")
      job.spec.mode = GenMode::LandingOnly;
    else if (mode == "takeoff")
      job.spec.mode = GenMode::TakeoffOnly;
    else if (mode == "mixed")
      job.spec.mode = GenMode::Mixed;
    else if (mode == "dual")
      job.spec.mode = GenMode::Dual;
    else
      throw ParseError("bench config: unknown mode " + mode);
    jobs.push_back(job);
  }
  return jobs;
}

std::vector<BenchRow> run_bench(const std::vector<BenchJob>& jobs,
                                const SeparationModel& model,
                                int oracle_threshold) {
  std::vector<BenchRow> rows;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    for (int rep = 0; rep < jobs[j].repetitions; ++rep) {
      GenSpec spec = jobs[j].spec;
      spec.seed += static_cast<std::uint64_t>(rep);
      const Instance inst = gen_instance(spec);
      BenchRow row;
      row.id = "j" + std::to_string(j) + "r" + std::to_string(rep);
      row.mode = spec.mode == GenMode::LandingOnly   ? "landing"
                 : spec.mode == GenMode::TakeoffOnly ? "takeoff"
                 : spec.mode == GenMode::Mixed       ? "mixed"
                                                     : "dual";
      row.n = spec.count;
      row.tw_min = spec.tw_min;
      row.te_min = spec.te_min;
      try {
        const auto start = std::chrono::steady_clock::now();
        Solution sol;
        if (inst.layout == Layout::DualClose)
          sol = solve_dual(to_dual(inst), model);
        else
          sol = solve_single(inst.aircraft, model, inst.t0);
        const auto stop = std::chrono::steady_clock::now();
        row.time_s =
            std::chrono::duration<double>(stop - start).count();
        row.solver_s = sol.makespan;
        if (inst.layout == Layout::DualClose) {
          std::vector<Aircraft> order = inst.aircraft;
          std::sort(order.begin(), order.end(),
                    [](const Aircraft& a, const Aircraft& b) {
                      if (a.fmin != b.fmin) return a.fmin < b.fmin;
                      return a.id < b.id;
                    });
          auto base =
              earliest_schedule(order, model, Layout::DualClose, inst.t0);
          row.baseline_s = base ? makespan(*base) : -1;
        } else {
          row.baseline_s =
              fcfs_baseline(inst.aircraft, model, inst.t0).makespan;
        }
        if (spec.count <= oracle_threshold) {
          row.oracle_s =
              inst.layout == Layout::DualClose
                  ? oracle_dual(to_dual(inst), model, spec.count).makespan
                  : oracle_single(inst.aircraft, model, inst.t0, spec.count)
                        .makespan;
        }
      } catch (const std::exception&) {
        row.solver_s = -1;
        row.baseline_s = -1;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "id,mode,n,tw_min,te_min,solver_s,baseline_s,oracle_s,time_s\n";
  for (const BenchRow& r : rows) {
    out << r.id << ',' << r.mode << ',' << r.n << ',' << r.tw_min << ','
        << r.te_min << ',' << r.solver_s << ',' << r.baseline_s << ',';
    if (r.oracle_s >= 0) out << r.oracle_s;
    out << ',' << r.time_s << '\n';
  }
}

} // namespace rwsched
