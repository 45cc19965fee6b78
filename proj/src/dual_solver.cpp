// Dual closely-spaced runway solver: block realizations and catalog,
// block detection, matching of takeoffs against fixed landing times, tail
// insertion via an exact two-order interleaving DP, and the bounded search
// over per-task order variants.
#include "rwsched/dual_solver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace rwsched {

namespace {

constexpr Duration kInf = std::numeric_limits<Duration>::max() / 4;

// Earliest time >= lower that avoids every open interval (s, s + width)
// induced by the fixed opposite-task stream. Boundary times are allowed:
// at t == s the fixed aircraft leads at zero separation, at t == s + width
// the moving aircraft trails at exactly the required separation.
Duration earliest_outside(Duration lower, const std::vector<Duration>& fixed,
                          Duration width) {
  Duration t = lower;
  bool moved = true;
  while (moved) {
    moved = false;
    for (Duration s : fixed)
      if (t > s && t < s + width) {
        t = s + width;
        moved = true;
      }
  }
  return t;
}

} // namespace

BlockRealization BlockCatalog::realize(const SeparationModel& model,
                                       BlockKind kind, BlockAnchor anchor,
                                       const std::vector<Duration>& fixed_gaps,
                                       Duration min_sep) {
  // Fixed (major-task) stream times from the anchor at time 0.
  std::vector<Duration> fixed;
  Duration at = anchor == BlockAnchor::LandingFirstSameTime
                    ? 0
                    : (kind == BlockKind::TBlock ? model.dp : 0);
  // For D-blocks the fixed stream is the takeoffs, which start at time 0
  // under both anchors; the landing start moves instead.
  if (kind == BlockKind::DBlock) at = 0;
  fixed.push_back(at);
  for (Duration g : fixed_gaps) {
    at += g;
    fixed.push_back(at);
  }

  BlockRealization out;
  if (kind == BlockKind::TBlock) {
    // Landings fixed; two takeoffs. A takeoff at t must keep t <= L - D_P
    // or t >= L + P_D = L for every landing L, so the forbidden zones are
    // (L - D_P, L).
    std::vector<Duration> shifted;
    shifted.reserve(fixed.size());
    for (Duration l : fixed) shifted.push_back(l - model.dp);
    const Duration first = 0; // alongside (or T0 ahead of) the first landing
    const Duration second =
        earliest_outside(first + min_sep, shifted, model.dp);
    out.times = {first, second};
    out.achieved = second - first;
  } else {
    // Takeoffs fixed; two landings. A landing at t must keep t <= K or
    // t >= K + D_P for every takeoff K: forbidden zones (K, K + D_P).
    const Duration first =
        anchor == BlockAnchor::LandingFirstSameTime ? 0 : model.dp;
    const Duration second =
        earliest_outside(first + min_sep, fixed, model.dp);
    out.times = {first, second};
    out.achieved = second - first;
  }
  out.increment = out.achieved - min_sep;
  return out;
}

BlockCatalog enumerate_blocks(const SeparationModel& model,
                              int max_breakpoints, int max_len) {
  BlockCatalog cat;
  cat.max_breakpoints = max_breakpoints;
  cat.max_len = max_len;
  const int major_cap = std::min(max_len - 2, 4);
  std::set<std::vector<Duration>> seen; // realization signatures

  for (BlockKind kind : {BlockKind::TBlock, BlockKind::DBlock}) {
    for (BlockAnchor anchor : {BlockAnchor::LandingFirstSameTime,
                               BlockAnchor::TakeoffFirstOffsetT0}) {
      // Enumerate major-task class patterns with bounded breakpoints.
      std::vector<int> pattern;
      const auto recurse = [&](auto&& self, int len) -> void {
        if (static_cast<int>(pattern.size()) >= 2) {
          int rises = 0;
          for (std::size_t i = 0; i + 1 < pattern.size(); ++i)
            if (pattern[i] < pattern[i + 1]) ++rises;
          if (rises <= max_breakpoints) {
            const Task major =
                kind == BlockKind::TBlock ? Task::Landing : Task::Takeoff;
            std::vector<Duration> gaps;
            for (std::size_t i = 0; i + 1 < pattern.size(); ++i)
              gaps.push_back(major == Task::Landing
                                 ? model.t(pattern[i], pattern[i + 1])
                                 : model.d(pattern[i], pattern[i + 1]));
            for (int c1 = 1; c1 <= model.eta; ++c1)
              for (int c2 = 1; c2 <= model.eta; ++c2) {
                const Duration min_sep = major == Task::Landing
                                             ? model.d(c1, c2)
                                             : model.t(c1, c2);
                std::vector<Duration> sig = gaps;
                sig.push_back(min_sep);
                sig.push_back(static_cast<Duration>(kind));
                sig.push_back(static_cast<Duration>(anchor));
                if (!seen.insert(sig).second) continue;
                const BlockRealization r =
                    BlockCatalog::realize(model, kind, anchor, gaps, min_sep);
                BlockDescriptor d;
                d.kind = kind;
                d.anchor = anchor;
                if (kind == BlockKind::TBlock) {
                  d.landing_classes = pattern;
                  d.takeoff_classes = {c1, c2};
                } else {
                  d.takeoff_classes = pattern;
                  d.landing_classes = {c1, c2};
                }
                d.capacity_num = 1;
                d.capacity_den = static_cast<int>(pattern.size()) - 1;
                Duration span = 0;
                for (Duration g : gaps) span += g;
                const Duration offset =
                    anchor == BlockAnchor::TakeoffFirstOffsetT0 ? model.dp
                                                                : 0;
                d.time_length = std::max(span + offset, r.times.back());
                d.increment = r.increment;
                d.initial_redundant_time = offset;
                cat.descriptors.push_back(std::move(d));
              }
          }
        }
        if (static_cast<int>(pattern.size()) == len) return;
        for (int c = 1; c <= model.eta; ++c) {
          pattern.push_back(c);
          self(self, len);
          pattern.pop_back();
        }
      };
      recurse(recurse, major_cap);
    }
  }
  return cat;
}

std::vector<BlockSpan> detect_blocks(const Schedule& s,
                                     const SeparationModel& model) {
  const int n = static_cast<int>(s.seq.size());
  bool mixed = false;
  for (const Aircraft& a : s.seq)
    if (a.task != s.seq.front().task) mixed = true;
  if (!mixed) return {};

  // Anchor pairs: adjacent cross-task aircraft at exactly the required
  // separation.
  std::vector<int> anchors;
  for (int i = 0; i + 1 < n; ++i) {
    if (s.seq[i].task == s.seq[i + 1].task) continue;
    const Duration y = pair_separation(s.seq, i, i + 1, model,
                                       Layout::DualClose);
    if (s.times[i + 1] - s.times[i] == y) anchors.push_back(i);
  }
  if (anchors.empty())
    throw NotBlockDecomposable(
        "no cross-task relevance anchors in mixed schedule (position 1)");

  // Total slack within one task's stream over [first, last]: sum over
  // consecutive same-task pairs of (achieved gap - required separation). A
  // tight stream sums to zero.
  const auto stream_slack = [&](int first, int last, Task task) -> Duration {
    Duration slack = 0;
    int prev = -1;
    for (int i = first; i <= last; ++i) {
      if (s.seq[i].task != task) continue;
      if (prev >= 0)
        slack += s.times[i] - s.times[prev] -
                 pair_separation(s.seq, prev, i, model, Layout::DualClose);
      prev = i;
    }
    return slack;
  };

  // Grow maximal spans: extend the current span over successive anchors
  // while at most one stream carries slack. When both streams accumulate
  // slack, the grammar requires a cut; the anchored pair at the cut is the
  // shared boundary of the two adjacent blocks.
  std::vector<std::pair<int, int>> spans;
  int cs = anchors[0];
  int ce = anchors[0] + 1; // at least the anchored pair itself
  for (std::size_t a = 0; a < anchors.size(); ++a) {
    const int ext = a + 1 < anchors.size() ? anchors[a + 1] + 1 : n - 1;
    if (ext <= ce) continue;
    if (stream_slack(cs, ext, Task::Landing) > 0 &&
        stream_slack(cs, ext, Task::Takeoff) > 0) {
      spans.emplace_back(cs, ce);
      cs = anchors[a + 1 < anchors.size() ? a + 1 : a];
      ce = std::max(ext, cs + 1);
    } else {
      ce = ext;
    }
  }
  spans.emplace_back(cs, ce);

  std::vector<BlockSpan> out;
  for (const auto& [first, last] : spans) {
    int landings = 0, takeoffs = 0;
    for (int i = first; i <= last; ++i)
      (s.seq[i].task == Task::Landing ? landings : takeoffs) += 1;
    if (landings == 0 || takeoffs == 0) continue;

    const Duration tslack = stream_slack(first, last, Task::Takeoff);
    const Duration lslack = stream_slack(first, last, Task::Landing);

    BlockSpan span;
    span.first = first + 1;
    span.last = last + 1;
    BlockDescriptor& d = span.desc;
    if (tslack > 0 && lslack <= 0)
      d.kind = BlockKind::TBlock;
    else if (lslack > 0 && tslack <= 0)
      d.kind = BlockKind::DBlock;
    else
      d.kind = BlockKind::TDBlock;

    d.anchor = s.seq[first].task == Task::Landing
                   ? BlockAnchor::LandingFirstSameTime
                   : BlockAnchor::TakeoffFirstOffsetT0;
    for (int i = first; i <= last; ++i)
      (s.seq[i].task == Task::Landing ? d.landing_classes
                                      : d.takeoff_classes)
          .push_back(s.seq[i].klass);
    d.capacity_num = takeoffs - 1;
    d.capacity_den = landings - 1; // 0 encodes the infinite capacity
    d.time_length = s.times[last] - s.times[first];
    d.increment = std::max<Duration>(
        d.kind == BlockKind::DBlock ? lslack : tslack, 0);
    d.initial_redundant_time =
        d.anchor == BlockAnchor::TakeoffFirstOffsetT0 ? model.dp : 0;
    out.push_back(std::move(span));
  }
  if (out.empty())
    throw NotBlockDecomposable(
        "anchored spans never contain both tasks (position 1)");
  return out;
}

namespace {

// Exact minimum-makespan interleaving of a fixed landing order and a fixed
// takeoff order: forward DP over (landings placed, takeoffs placed) with a
// Pareto frontier of (last landing time, last takeoff time).
struct MatchDP {
  const SeparationModel& model;
  Duration t0;
  const std::vector<Aircraft>& lands;
  const std::vector<Aircraft>& toffs;
  bool freeze_landings = false;
  const std::vector<Duration>* frozen = nullptr;
  std::size_t pareto_cap = 64;

  struct State {
    Duration tl, tt; // kNoDeadline-like sentinel: none placed yet
  };

  // Result: minimal makespan plus one witness merged schedule.
  Duration best = kInf;
  Schedule witness;

  static void insert_pareto(std::vector<State>& set, State s,
                            std::size_t cap) {
    for (const State& o : set)
      if (o.tl <= s.tl && o.tt <= s.tt) return;
    set.erase(std::remove_if(set.begin(), set.end(),
                             [&](const State& o) {
                               return s.tl <= o.tl && s.tt <= o.tt;
                             }),
              set.end());
    if (set.size() < cap) set.push_back(s);
  }

  bool run() {
    const int n = static_cast<int>(lands.size());
    const int m = static_cast<int>(toffs.size());
    const Duration none = -kInf;
    std::vector<std::vector<std::vector<State>>> dp(
        n + 1, std::vector<std::vector<State>>(m + 1));
    dp[0][0].push_back({none, none});
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= m; ++j) {
        for (const State& st : dp[i][j]) {
          if (i < n) {
            Duration t = std::max(t0, lands[i].fmin);
            if (i > 0)
              t = std::max(t, st.tl + model.t(lands[i - 1].klass,
                                              lands[i].klass));
            if (j > 0) t = std::max(t, st.tt + model.dp);
            if (freeze_landings) {
              if (t > (*frozen)[i]) continue; // conflicts with frozen time
              t = (*frozen)[i];
            }
            if (t <= lands[i].fmax)
              insert_pareto(dp[i + 1][j], {t, st.tt}, pareto_cap);
          }
          if (j < m) {
            Duration t = std::max(t0, toffs[j].fmin);
            if (j > 0)
              t = std::max(t, st.tt + model.d(toffs[j - 1].klass,
                                              toffs[j].klass));
            if (i > 0) t = std::max(t, st.tl + model.pd);
            if (t <= toffs[j].fmax)
              insert_pareto(dp[i][j + 1], {st.tl, t}, pareto_cap);
          }
        }
      }
    for (const State& st : dp[n][m])
      best = std::min(best, std::max(st.tl, st.tt) - t0);
    if (best >= kInf) return false;
    reconstruct(dp);
    return true;
  }

  void reconstruct(
      const std::vector<std::vector<std::vector<MatchDP::State>>>& dp) {
    // Walk the stored Pareto tables backward from an optimal final state.
    // A state's exact ancestor may have been dominance-pruned, but pruning
    // only happens when a dominating state is inserted, so some stored
    // parent always reproduces the step with componentwise-smaller times;
    // the recorded later times stay feasible against it.
    const int n = static_cast<int>(lands.size());
    const int m = static_cast<int>(toffs.size());
    const Duration none = -kInf;
    State cur{none, none};
    bool found = false;
    for (const State& st : dp[n][m])
      if (std::max(st.tl, st.tt) - t0 == best) {
        cur = st;
        found = true;
        break;
      }
    if (!found) return;
    Sequence best_order;
    std::vector<Duration> best_times;
    int i = n, j = m;
    while (i > 0 || j > 0) {
      bool stepped = false;
      if (i > 0) {
        for (const State& p : dp[i - 1][j]) {
          Duration t = std::max(t0, lands[i - 1].fmin);
          if (i > 1)
            t = std::max(t, p.tl + model.t(lands[i - 2].klass,
                                           lands[i - 1].klass));
          if (j > 0) t = std::max(t, p.tt + model.dp);
          if (freeze_landings) {
            if (t > (*frozen)[i - 1]) continue;
            t = (*frozen)[i - 1];
          }
          if (t > lands[i - 1].fmax) continue;
          if (t <= cur.tl && p.tt <= cur.tt) {
            best_order.push_back(lands[i - 1]);
            best_times.push_back(t);
            cur = p;
            --i;
            stepped = true;
            break;
          }
        }
      }
      if (!stepped && j > 0) {
        for (const State& p : dp[i][j - 1]) {
          Duration t = std::max(t0, toffs[j - 1].fmin);
          if (j > 1)
            t = std::max(t, p.tt + model.d(toffs[j - 2].klass,
                                           toffs[j - 1].klass));
          if (i > 0) t = std::max(t, p.tl + model.pd);
          if (t > toffs[j - 1].fmax) continue;
          if (t <= cur.tt && p.tl <= cur.tl) {
            best_order.push_back(toffs[j - 1]);
            best_times.push_back(t);
            cur = p;
            --j;
            stepped = true;
            break;
          }
        }
      }
      if (!stepped) return;
    }
    std::reverse(best_order.begin(), best_order.end());
    std::reverse(best_times.begin(), best_times.end());
    // Normalize ties: landing ahead of a takeoff at the same time.
    for (std::size_t k = 0; k + 1 < best_order.size(); ++k)
      if (best_times[k] == best_times[k + 1] &&
          best_order[k].task == Task::Takeoff &&
          best_order[k + 1].task == Task::Landing) {
        std::swap(best_order[k], best_order[k + 1]);
        if (k > 0) k -= 2;
      }
    witness.seq = std::move(best_order);
    witness.times = std::move(best_times);
    witness.t0 = t0;
  }
};

std::vector<Aircraft> task_subset(const Schedule& s, Task task,
                                  std::vector<Duration>* times = nullptr) {
  std::vector<Aircraft> out;
  for (std::size_t i = 0; i < s.seq.size(); ++i)
    if (s.seq[i].task == task) {
      out.push_back(s.seq[i]);
      if (times) times->push_back(s.times[i]);
    }
  return out;
}

} // namespace

Schedule match_fixed_landing(const Schedule& landing_sched,
                             const std::vector<Aircraft>& takeoffs,
                             const BlockCatalog& catalog,
                             const SeparationModel& model) {
  (void)catalog;
  if (takeoffs.empty()) return landing_sched;
  // Takeoff order: class-monotonically-decreasing, ties by earliest time
  // then id.
  std::vector<Aircraft> toffs = takeoffs;
  std::sort(toffs.begin(), toffs.end(),
            [](const Aircraft& a, const Aircraft& b) {
              if (a.klass != b.klass) return a.klass > b.klass;
              if (a.fmin != b.fmin) return a.fmin < b.fmin;
              return a.id < b.id;
            });
  std::vector<Duration> frozen;
  std::vector<Aircraft> lands =
      task_subset(landing_sched, Task::Landing, &frozen);
  MatchDP dp{model, landing_sched.t0, lands, toffs, true, &frozen};
  if (!dp.run()) {
    // Retry in earliest-time order before giving up.
    std::sort(toffs.begin(), toffs.end(),
              [](const Aircraft& a, const Aircraft& b) {
                if (a.fmin != b.fmin) return a.fmin < b.fmin;
                return a.id < b.id;
              });
    MatchDP dp2{model, landing_sched.t0, lands, toffs, true, &frozen};
    if (!dp2.run()) throw Infeasible("takeoff windows defeat the matching");
    return dp2.witness;
  }
  return dp.witness;
}

Schedule tail_insertion(const Schedule& merged, const BlockCatalog& catalog,
                        const SeparationModel& model) {
  (void)catalog;
  std::vector<Aircraft> lands = task_subset(merged, Task::Landing);
  std::vector<Aircraft> toffs = task_subset(merged, Task::Takeoff);
  if (lands.empty() || toffs.empty()) return merged;
  // Landing times are released (order kept); the exact interleaving DP
  // absorbs overflow takeoffs by widening landing gaps where profitable.
  MatchDP dp{model, merged.t0, lands, toffs, false, nullptr};
  if (!dp.run() || makespan(dp.witness) > makespan(merged)) return merged;
  return dp.witness;
}

namespace {

// Saturates well above the exhaustive-search threshold so the product of
// two factorials cannot wrap around.
std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) {
    f *= static_cast<std::uint64_t>(i);
    if (f > 1000000ULL) return f;
  }
  return f;
}

std::vector<std::vector<Aircraft>> candidate_orders(
    const std::vector<Aircraft>& group, const SeparationModel& model,
    Duration t0, Duration bound, bool exhaustive, const SolveOptions& opt) {
  std::vector<std::vector<Aircraft>> out;
  if (group.empty()) {
    out.push_back({});
    return out;
  }
  if (exhaustive) {
    std::vector<Aircraft> perm = group;
    std::sort(perm.begin(), perm.end(),
              [](const Aircraft& a, const Aircraft& b) { return a.id < b.id; });
    do {
      auto sched = earliest_schedule(perm, model, Layout::Single, t0);
      if (sched && makespan(*sched) <= bound) out.push_back(perm);
    } while (std::next_permutation(
        perm.begin(), perm.end(),
        [](const Aircraft& a, const Aircraft& b) { return a.id < b.id; }));
    return out;
  }
  // Large instances: the solver's frontier plus drift variants.
  Solution sol = solve_single(group, model, t0, opt);
  for (const Sequence& var : breakpoint_drift_set(
           sol.schedule, model, Layout::Single, 8))
    out.push_back(var);
  return out;
}

} // namespace

Solution solve_dual(const DualInstance& inst, const SeparationModel& model,
                    const SolveOptions& options) {
  const int n = static_cast<int>(inst.landings.size());
  const int m = static_cast<int>(inst.takeoffs.size());
  if (n == 0 || m == 0) {
    Solution sol = solve_single(n == 0 ? inst.takeoffs : inst.landings,
                                model, inst.t0, options);
    return sol;
  }

  // Step 1: per-task optima; their maximum is the relaxation lower bound.
  Solution land_sol = solve_single(inst.landings, model, inst.t0, options);
  Solution toff_sol = solve_single(inst.takeoffs, model, inst.t0, options);
  const Duration lower = std::max(land_sol.makespan, toff_sol.makespan);

  // Step 3: match takeoffs against the fixed landing-optimal schedule, then
  // re-insert overflow takeoffs; this yields the search upper bound.
  const BlockCatalog catalog; // realizations are computed on demand
  Solution sol;
  sol.schedule = tail_insertion(
      match_fixed_landing(land_sol.schedule, inst.takeoffs, catalog, model),
      catalog, model);
  sol.makespan = makespan(sol.schedule);

  // Early exit: a mono-task certificate path pins the makespan
  // to the single-runway optimum.
  if (sol.makespan == lower) {
    sol.optimality = Optimality::ProvedByEnumeration;
    return sol;
  }

  // Step 4: bounded search over per-task order variants within
  // [lower, current upper], exact when both permutation spaces are small.
  const bool exhaustive =
      factorial(n) * factorial(m) <= 100000ULL;
  for (const auto& lorder :
       candidate_orders(inst.landings, model, inst.t0, sol.makespan,
                        exhaustive, options)) {
    for (const auto& torder :
         candidate_orders(inst.takeoffs, model, inst.t0, sol.makespan,
                          exhaustive, options)) {
      MatchDP dp{model, inst.t0, lorder, torder, false, nullptr};
      if (!dp.run()) continue;
      if (dp.best < sol.makespan) {
        sol.makespan = dp.best;
        sol.schedule = dp.witness;
        if (sol.makespan == lower) break;
      }
    }
    if (sol.makespan == lower) break;
  }
  sol.optimality = exhaustive ? Optimality::ProvedByEnumeration
                              : Optimality::HeuristicBest;
  // Normalize the witness to its earliest-time form for the chosen order.
  if (auto norm = earliest_schedule(sol.schedule.seq, model,
                                    Layout::DualClose, inst.t0)) {
    sol.schedule = std::move(*norm);
    sol.makespan = makespan(sol.schedule);
  }
  return sol;
}

std::map<BlockPairKey, std::pair<Duration, Duration>> block_pair_table(
    const BlockCatalog& catalog, const SeparationModel& model) {
  (void)model;
  std::map<BlockPairKey, std::pair<Duration, Duration>> out;
  const int k = static_cast<int>(catalog.descriptors.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const BlockDescriptor& a = catalog.descriptors[i];
      const BlockDescriptor& b = catalog.descriptors[j];
      // Consecutive blocks alternate kinds and share their boundary two
      // aircraft: one of each task, so the trailing classes of the first
      // must match the leading classes of the second.
      if (a.kind == b.kind || a.kind == BlockKind::TDBlock ||
          b.kind == BlockKind::TDBlock)
        continue;
      if (a.landing_classes.empty() || b.landing_classes.empty() ||
          a.takeoff_classes.empty() || b.takeoff_classes.empty())
        continue;
      if (a.landing_classes.back() != b.landing_classes.front() ||
          a.takeoff_classes.back() != b.takeoff_classes.front())
        continue;
      const Duration land_inc =
          (a.kind == BlockKind::DBlock ? a.increment : 0) +
          (b.kind == BlockKind::DBlock ? b.increment : 0);
      const Duration toff_inc =
          (a.kind == BlockKind::TBlock ? a.increment : 0) +
          (b.kind == BlockKind::TBlock ? b.increment : 0);
      out[{i, j}] = {land_inc, toff_inc};
    }
  return out;
}

SemiResidentShift semi_resident_shift(const Schedule& s, int position,
                                      const SeparationModel& model) {
  const int n = static_cast<int>(s.seq.size());
  const int p = position - 1; // to 0-based
  if (p <= 0 || p >= n)
    throw NotSemiResident("position has no predecessor to exchange with");
  if (s.seq[p].task == s.seq[p - 1].task)
    throw NotSemiResident("exchange requires a cross-task adjacent pair");
  // The aircraft must be relevant to its immediate predecessor and to no
  // earlier aircraft.
  for (int i = std::max(0, p - 4); i < p; ++i) {
    const bool tight =
        s.times[p] - s.times[i] ==
        pair_separation(s.seq, i, p, model, Layout::DualClose);
    if (i == p - 1 && !tight)
      throw NotSemiResident("not relevant to the immediate predecessor");
    if (i != p - 1 && tight)
      throw NotSemiResident("relevant beyond the immediate predecessor");
  }

  Sequence swapped = s.seq;
  std::swap(swapped[p - 1], swapped[p]);
  auto next = earliest_schedule(swapped, model, Layout::DualClose, s.t0);
  if (!next) throw NotSemiResident("exchange violates a time window");

  SemiResidentShift out{std::move(*next), 0, n + 1};
  const Duration old_gap = s.times[p] - s.times[p - 1];
  const Duration new_gap = out.schedule.times[p] - out.schedule.times[p - 1];
  out.relative_offset = new_gap - old_gap;
  // Absorption: the first downstream position from which the exchange has
  // no structural effect, i.e. the remaining times differ from the
  // originals by one constant (zero once the shift is fully absorbed, or a
  // rigid translation when the tail is a tight chain).
  for (int j = p + 1; j < n; ++j) {
    const Duration d0 = out.schedule.times[j] - s.times[j];
    bool constant_from_here = true;
    for (int k = j + 1; k < n; ++k)
      if (out.schedule.times[k] - s.times[k] != d0) constant_from_here = false;
    if (constant_from_here) {
      out.absorption_index = j + 1;
      break;
    }
  }
  return out;
}

} // namespace rwsched
