// Insertion-based single-runway solver: ascending earliest-time processing,
// plain and reordered insertions into an equal-makespan frontier, and a
// relocation/exchange local search to repair window-induced detours.
#include "rwsched/single_solver.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace rwsched {

namespace {

constexpr Duration kInf = std::numeric_limits<Duration>::max() / 4;

std::vector<int> order_key(const Sequence& seq) {
  std::vector<int> key;
  key.reserve(seq.size());
  for (const Aircraft& a : seq) key.push_back(a.id);
  return key;
}

Duration eval(const Sequence& order, const SeparationModel& model,
              Duration t0, bool full_pairs) {
  auto s = earliest_schedule(order, model, Layout::Single, t0, full_pairs);
  return s ? makespan(*s) : kInf;
}

struct Pool {
  std::map<std::vector<int>, Duration> entries;
  Duration best = kInf;

  void add(const Sequence& order, Duration f) {
    if (f >= kInf) return;
    entries.emplace(order_key(order), f);
    best = std::min(best, f);
  }
};

// Steepest-descent local search over single-aircraft relocations and pair
// exchanges. For long sequences the neighborhood is restricted to a window
// around `focus` to keep the per-step cost bounded.
Duration local_search(Sequence& order, const SeparationModel& model,
                      Duration t0, int focus, std::uint64_t* examined) {
  const int n = static_cast<int>(order.size());
  const bool windowed = n > 14;
  const int lo = windowed ? std::max(0, focus - 7) : 0;
  const int hi = windowed ? std::min(n, focus + 8) : n;
  Duration cur = eval(order, model, t0, false);
  bool improved = true;
  while (improved && cur < kInf) {
    improved = false;
    for (int from = lo; from < hi && !improved; ++from) {
      for (int to = lo; to < hi && !improved; ++to) {
        if (to == from) continue;
        Sequence next = order;
        Aircraft a = next[from];
        next.erase(next.begin() + from);
        next.insert(next.begin() + to, a);
        ++*examined;
        const Duration f = eval(next, model, t0, false);
        if (f < cur) {
          order = std::move(next);
          cur = f;
          improved = true;
        }
      }
    }
    for (int i = lo; i < hi && !improved; ++i) {
      for (int j = i + 1; j < hi && !improved; ++j) {
        Sequence next = order;
        std::swap(next[i], next[j]);
        ++*examined;
        const Duration f = eval(next, model, t0, false);
        if (f < cur) {
          order = std::move(next);
          cur = f;
          improved = true;
        }
      }
    }
  }
  return cur;
}

} // namespace

std::vector<InsertionCandidate> insert_candidates(
    const SolverState& state, const Aircraft& next,
    const SeparationModel& model) {
  std::vector<InsertionCandidate> out;
  // Plain insertions first; their minimum sets the admission threshold for
  // reordered insertions.
  Duration f_inc = kInf;
  for (int h = 0; h < static_cast<int>(state.frontier.size()); ++h) {
    const Schedule& host = state.frontier[h];
    const int n = static_cast<int>(host.seq.size());
    for (int p = 0; p <= n; ++p) {
      Sequence order = host.seq;
      order.insert(order.begin() + p, next);
      const Duration f = eval(order, model, host.t0, false);
      if (f >= kInf) continue;
      out.push_back({h, p, false, f - state.best_makespan, f,
                     std::move(order)});
      f_inc = std::min(f_inc, f);
    }
  }
  // Reordered insertions: relocate one existing aircraft while inserting,
  // admitted when the four-aircraft context bound leaves room to beat the
  // plain minimum.
  const Duration slack = f_inc - state.best_makespan;
  for (int h = 0; h < static_cast<int>(state.frontier.size()); ++h) {
    const Schedule& host = state.frontier[h];
    const int n = static_cast<int>(host.seq.size());
    for (int p = 1; p < n; ++p) {
      // Context around the insertion slot p (between positions p-1 and p).
      const Aircraft& c1 = host.seq[std::max(0, p - 2)];
      const Aircraft& c2 = host.seq[p - 1];
      const Aircraft& c3 = host.seq[p];
      const Aircraft& c4 = host.seq[std::min(n - 1, p + 1)];
      const Duration bound = omega_min_bound(
          model, Layout::Single, c1.klass, c1.task, c2.klass, c2.task,
          c3.klass, c3.task, c4.klass, c4.task, next.klass, next.task);
      if (bound >= slack) continue;
      const bool wide = n <= 14;
      const int rlo = wide ? 0 : std::max(0, p - 5);
      const int rhi = wide ? n : std::min(n, p + 5);
      for (int from = rlo; from < rhi; ++from) {
        for (int to = rlo; to < rhi; ++to) {
          if (to == from) continue;
          Sequence base = host.seq;
          Aircraft moved = base[from];
          base.erase(base.begin() + from);
          base.insert(base.begin() + to, moved);
          Sequence order = base;
          order.insert(order.begin() + p, next);
          const Duration f = eval(order, model, host.t0, false);
          if (f >= kInf || f >= f_inc) continue;
          out.push_back({h, p, true, bound, f, std::move(order)});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const InsertionCandidate& a, const InsertionCandidate& b) {
              if (a.makespan != b.makespan) return a.makespan < b.makespan;
              if (a.position != b.position) return a.position < b.position;
              return a.frontier_index < b.frontier_index;
            });
  return out;
}

Solution solve_single(std::vector<Aircraft> aircraft,
                      const SeparationModel& model, Duration t0,
                      const SolveOptions& options) {
  Solution sol;
  if (aircraft.empty()) {
    sol.optimality = Optimality::ProvedByEnumeration;
    sol.schedule.t0 = t0;
    return sol;
  }
  std::sort(aircraft.begin(), aircraft.end(),
            [](const Aircraft& a, const Aircraft& b) {
              if (a.fmin != b.fmin) return a.fmin < b.fmin;
              return a.id < b.id;
            });
  const int n = static_cast<int>(aircraft.size());
  const bool large = n > 14;
  const int budget = large ? std::min(options.frontier_budget, 8)
                           : options.frontier_budget;

  SolverState state;
  state.frontier.push_back(
      *earliest_schedule({aircraft[0]}, model, Layout::Single, t0));
  state.best_makespan = makespan(state.frontier.front());
  state.inserted = 1;
  SolverStats stats;
  stats.frontier_max = 1;

  for (int i = 1; i < n; ++i) {
    const Aircraft& next = aircraft[i];
    Pool pool;
    // Plain and bound-admissible reordered insertions into the frontier.
    for (const InsertionCandidate& c :
         insert_candidates(state, next, model)) {
      pool.add(c.order, c.makespan);
      ++stats.candidates_examined;
    }
    // Enrich small frontiers with equal-makespan drift variants before
    // inserting, so breakpoint re-homing opportunities are not missed.
    if (!large) {
      for (const Schedule& host : state.frontier) {
        for (const Sequence& var : breakpoint_drift_set(
                 host, model, Layout::Single, budget)) {
          for (int p = 0; p <= static_cast<int>(var.size()); ++p) {
            Sequence order = var;
            order.insert(order.begin() + p, next);
            ++stats.candidates_examined;
            pool.add(order, eval(order, model, t0, false));
          }
        }
      }
    }
    if (pool.entries.empty()) {
      // Window-blocked: re-treat via a joint relocation of one incumbent
      // aircraft with the new insertion.
      for (const Schedule& host : state.frontier) {
        const int len = static_cast<int>(host.seq.size());
        for (int from = 0; from < len; ++from)
          for (int to = 0; to < len; ++to) {
            if (to == from) continue;
            Sequence base = host.seq;
            Aircraft moved = base[from];
            base.erase(base.begin() + from);
            base.insert(base.begin() + to, moved);
            for (int p = 0; p <= len; ++p) {
              Sequence order = base;
              order.insert(order.begin() + p, next);
              ++stats.candidates_examined;
              pool.add(order, eval(order, model, t0, false));
            }
          }
      }
    }
    if (pool.entries.empty())
      throw Infeasible("no feasible insertion for aircraft id " +
                       std::to_string(next.id));

    // Local improvement from the best candidates found.
    std::vector<Sequence> best_orders;
    for (const auto& [key, f] : pool.entries)
      if (f == pool.best && static_cast<int>(best_orders.size()) < budget) {
        Sequence order;
        for (int id : key)
          for (int k = 0; k <= i; ++k)
            if (aircraft[k].id == id) order.push_back(aircraft[k]);
        best_orders.push_back(std::move(order));
      }
    Duration best = pool.best;
    for (Sequence order : best_orders) {
      const Duration f =
          local_search(order, model, t0, i, &stats.candidates_examined);
      if (f < best) best = f;
      pool.add(order, f);
    }

    // Rebuild the frontier from every pooled order at the new minimum.
    state.frontier.clear();
    for (const auto& [key, f] : pool.entries) {
      if (f != best || static_cast<int>(state.frontier.size()) >= budget)
        continue;
      Sequence order;
      for (int id : key)
        for (int k = 0; k <= i; ++k)
          if (aircraft[k].id == id) order.push_back(aircraft[k]);
      auto sched = earliest_schedule(order, model, Layout::Single, t0);
      if (sched) state.frontier.push_back(std::move(*sched));
    }
    state.best_makespan = best;
    state.inserted = i + 1;
    stats.frontier_max = std::max(
        stats.frontier_max, static_cast<int>(state.frontier.size()));
  }

  // Pick the frontier representative with the most tight structure.
  sol.schedule = state.frontier.front();
  sol.makespan = state.best_makespan;
  sol.stats = stats;
  sol.optimality = n <= 2 ? Optimality::ProvedByEnumeration
                          : Optimality::HeuristicBest;
  if (options.full_pairs_check) {
    auto full = earliest_schedule(sol.schedule.seq, model, Layout::Single,
                                  t0, true);
    if (!full || full->times != sol.schedule.times)
      throw Infeasible("lookback-4 and full-pairs schedules disagree");
  }
  return sol;
}

Solution fcfs_baseline(std::vector<Aircraft> aircraft,
                       const SeparationModel& model, Duration t0) {
  std::sort(aircraft.begin(), aircraft.end(),
            [](const Aircraft& a, const Aircraft& b) {
              if (a.fmin != b.fmin) return a.fmin < b.fmin;
              return a.id < b.id;
            });
  auto sched = earliest_schedule(aircraft, model, Layout::Single, t0);
  if (!sched) throw Infeasible("first-come-first-served order infeasible");
  Solution sol;
  sol.schedule = std::move(*sched);
  sol.makespan = makespan(sol.schedule);
  sol.optimality = aircraft.size() <= 1 ? Optimality::ProvedByEnumeration
                                        : Optimality::HeuristicBest;
  return sol;
}

} // namespace rwsched
