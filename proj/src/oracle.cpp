// Exact enumeration oracles with branch-and-bound pruning, plus the
// subset-DP cross-check for pure-task unconstrained inputs.
#include "rwsched/oracle.hpp"

#include <algorithm>
#include <limits>

namespace rwsched {

namespace {

struct Enumerator {
  const SeparationModel& model;
  Layout layout;
  Duration t0;
  int n;
  std::vector<Aircraft> pool;

  Duration best = std::numeric_limits<Duration>::max();
  Sequence best_order;
  std::uint64_t best_count = 0;
  std::uint64_t nodes = 0;

  Sequence prefix;
  std::vector<Duration> times;
  std::vector<char> used;

  void run() {
    used.assign(n, 0);
    prefix.clear();
    times.clear();
    recurse();
  }

  void recurse() {
    const int depth = static_cast<int>(prefix.size());
    if (depth == n) {
      const Duration f = times.empty() ? 0 : times.back() - t0;
      if (f < best) {
        best = f;
        best_order = prefix;
        best_count = 1;
      } else if (f == best) {
        ++best_count;
        // Lexicographic tie-break on the id order of the witness.
        Sequence cand = prefix;
        if (order_less(cand, best_order)) best_order = std::move(cand);
      }
      return;
    }
    for (int k = 0; k < n; ++k) {
      if (used[k]) continue;
      ++nodes;
      const Aircraft& a = pool[k];
      Duration t = std::max(t0, a.fmin);
      for (int j = 0; j < depth; ++j)
        t = std::max(t, times[j] + min_separation(model, prefix[j].klass,
                                                  prefix[j].task, a.klass,
                                                  a.task, layout));
      if (t > a.fmax) continue;
      if (t - t0 > best) continue; // partial makespan already worse
      used[k] = 1;
      prefix.push_back(a);
      times.push_back(t);
      recurse();
      times.pop_back();
      prefix.pop_back();
      used[k] = 0;
    }
  }

  static bool order_less(const Sequence& a, const Sequence& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].id != b[i].id) return a[i].id < b[i].id;
    }
    return false;
  }
};

OracleResult finish(Enumerator& e) {
  if (e.best_count == 0) throw Infeasible("no order satisfies all windows");
  OracleResult r;
  r.makespan = e.best;
  auto sched = earliest_schedule(e.best_order, e.model, e.layout, e.t0, true);
  r.witness = *sched;
  r.optimal_orders = e.best_count;
  r.nodes = e.nodes;
  return r;
}

} // namespace

OracleResult oracle_single(const std::vector<Aircraft>& aircraft,
                           const SeparationModel& model, Duration t0,
                           int limit) {
  if (static_cast<int>(aircraft.size()) > limit)
    throw Infeasible("oracle_single: instance above enumeration limit");
  Enumerator e{model, Layout::Single, t0,
               static_cast<int>(aircraft.size()), aircraft};
  e.run();
  return finish(e);
}

OracleResult oracle_dual(const DualInstance& inst,
                         const SeparationModel& model, int limit) {
  std::vector<Aircraft> all = inst.landings;
  all.insert(all.end(), inst.takeoffs.begin(), inst.takeoffs.end());
  if (static_cast<int>(all.size()) > limit)
    throw Infeasible("oracle_dual: instance above enumeration limit");
  Enumerator e{model, Layout::DualClose, inst.t0,
               static_cast<int>(all.size()), all};
  e.run();
  return finish(e);
}

Duration oracle_subset_dp(const std::vector<Aircraft>& aircraft,
                          const SeparationModel& model, Layout layout) {
  const int n = static_cast<int>(aircraft.size());
  if (n == 0) return 0;
  const Duration inf = std::numeric_limits<Duration>::max() / 4;
  std::vector<std::vector<Duration>> dp(std::size_t(1) << n,
                                        std::vector<Duration>(n, inf));
  for (int i = 0; i < n; ++i) dp[std::size_t(1) << i][i] = 0;
  for (std::size_t mask = 1; mask < dp.size(); ++mask)
    for (int last = 0; last < n; ++last) {
      if (!(mask >> last & 1) || dp[mask][last] >= inf) continue;
      for (int next = 0; next < n; ++next) {
        if (mask >> next & 1) continue;
        const Duration t =
            dp[mask][last] +
            min_separation(model, aircraft[last].klass, aircraft[last].task,
                           aircraft[next].klass, aircraft[next].task, layout);
        auto& slot = dp[mask | std::size_t(1) << next][next];
        slot = std::min(slot, t);
      }
    }
  Duration best = inf;
  for (int last = 0; last < n; ++last)
    best = std::min(best, dp[dp.size() - 1][last]);
  return best;
}

} // namespace rwsched
