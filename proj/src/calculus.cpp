// Class-sequence analytics: Gamma classification, Theta and special pair
// sets, insertion increments, analytic merge deltas, insertion lower bounds,
// and the equal-makespan drift neighborhood.
#include "rwsched/calculus.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace rwsched {

namespace {

Duration y(const SeparationModel& m, Task task, int i, int j) {
  return task == Task::Landing ? m.t(i, j) : m.d(i, j);
}

} // namespace

Duration gamma(const SeparationModel& m, Task task, const ClassQuintuple& q) {
  return y(m, task, q[0], q[1]) + y(m, task, q[1], q[2]) +
         y(m, task, q[3], q[4]) - y(m, task, q[0], q[2]) -
         y(m, task, q[3], q[1]) - y(m, task, q[1], q[4]);
}

GammaSets enumerate_gamma_sets(const SeparationModel& m, Task task) {
  GammaSets out;
  const int n = m.eta;
  ClassQuintuple q{};
  for (q[0] = 1; q[0] <= n; ++q[0])
    for (q[1] = 1; q[1] <= n; ++q[1])
      for (q[2] = 1; q[2] <= n; ++q[2])
        for (q[3] = 1; q[3] <= n; ++q[3])
          for (q[4] = 1; q[4] <= n; ++q[4]) {
            if (gamma(m, task, q) < 0) continue;
            const bool head_dec = q[0] >= q[1] && q[1] >= q[2];
            const bool tail_dec = q[3] >= q[4];
            int family = -1;
            if (head_dec && tail_dec)
              family = 0;
            else if (q[0] >= q[1] && q[1] < q[2] && tail_dec)
              family = 1;
            else if (q[0] < q[1] && q[1] >= q[2] && tail_dec)
              family = 2;
            else if (q[0] >= q[1] && q[1] < q[2] && !tail_dec)
              family = 3;
            else if (q[0] < q[1] && q[1] >= q[2] && !tail_dec)
              family = 4;
            else if (head_dec && !tail_dec)
              family = 5;
            if (family >= 0) out.omega[family].push_back(q);
          }
  return out;
}

ThetaSets enumerate_theta_sets(const SeparationModel& m) {
  ThetaSets out;
  const int n = m.eta;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int h = 1; h <= n; ++h) {
          const bool tight =
              m.t(i, k) + m.t0_base >= m.t(i, j) + m.t(j, k);
          if (!tight) continue;
          if (i < j && j < k && i < h && h < k)
            out.theta0.push_back({i, k, j, h});
          if (k < i && i < j && k < h && h < j)
            out.theta1.push_back({i, k, j, h});
        }
  return out;
}

SpecialPairSets special_pair_sets(const SeparationModel& m) {
  SpecialPairSets out;
  const int n = m.eta;
  const Duration t0 = m.t0_base;
  // Landing: drops of column j from row 2 to row k within [0.5*T0-delta,
  // 0.5*T0).
  for (int k = 3; k <= n; ++k)
    for (int j = k + 1; j <= n; ++j) {
      const Duration drop = m.t(2, j) - m.t(k, j);
      if (2 * drop >= t0 - 2 * m.delta && 2 * drop < t0)
        out.e.push_back({k, j});
    }
  // Takeoff: one-third-T0 drops of column j from row 2 to row k.
  for (int k = 3; k <= n; ++k)
    for (int j = k; j <= n; ++j)
      if (3 * (m.d(2, j) - m.d(k, j)) == t0) out.e1.push_back({k, j});
  // Takeoff: drops of column j from row 3 to row k, zero or one-third T0.
  for (int k = 4; k <= n; ++k)
    for (int j = k + 1; j <= n; ++j) {
      const Duration drop = m.d(3, j) - m.d(k, j);
      if (drop == 0) out.e20.push_back({k, j});
      if (3 * drop == t0) out.e21.push_back({k, j});
    }
  // Takeoff: one-third-T0 row steps into column rho2.
  for (int k = 1; k < m.rho2; ++k)
    if (3 * (m.d(k, m.rho2) - m.d(k, m.rho2 - 1)) == t0)
      out.e30.push_back({k, m.rho2});
  // Takeoff: one-third-T0 drop from row rho2-1 to row rho2 beyond column
  // rho2.
  for (int j = m.rho2 + 1; j <= n; ++j)
    if (3 * (m.d(m.rho2 - 1, j) - m.d(m.rho2, j)) == t0)
      out.e31.push_back({m.rho2 - 1, j});
  // Takeoff: one-third-T0 step on the last column's bottom pair.
  if (n >= 2 && 3 * (m.d(n - 1, n) - m.d(n, n)) == t0)
    out.e4.push_back({n, n});
  return out;
}

Duration insertion_increment(const SeparationModel& m, Layout layout, int k,
                             Task k_task, int i, Task i_task, int j,
                             Task j_task) {
  return min_separation(m, k, k_task, i, i_task, layout) +
         min_separation(m, i, i_task, j, j_task, layout) -
         min_separation(m, k, k_task, j, j_task, layout);
}

namespace {

bool segment_has_class(const Segment& s, int k) {
  return std::find(s.classes.begin(), s.classes.end(), k) != s.classes.end();
}

Duration sgn_correction(int count, Duration unit) {
  return count > 0 ? Duration(count - 1) * unit : 0;
}

// Landing or takeoff merge delta: common structure, matrix and correction
// unit differ.
Duration pure_merge_delta(const SeparationModel& m, Task task,
                          const SegmentedSequence& segs) {
  const auto& mat = [&](int i, int j) { return y(m, task, i, j); };
  int d = m.eta; // class of the last aircraft of the merged order
  for (const Segment& s : segs)
    for (int c : s.classes) d = std::min(d, c);
  Duration delta = mat(d, 1) - mat(segs.back().classes.back(), 1);
  // Dispersing a class across segments loses one same-class adjacency per
  // extra segment; each costs the diagonal's excess over the constant
  // below-diagonal row value. For the landing matrix this is δ at
  // ρ₁ and ρ₂; for the takeoff matrix it is T₀/3 at 3 and η.
  for (int k = 1; k <= m.eta; ++k) {
    int count = 0;
    for (const Segment& s : segs) count += segment_has_class(s, k) ? 1 : 0;
    delta -= sgn_correction(count, mat(k, k) - mat(k, 1));
  }
  for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
    const int tail = segs[i].classes.back();
    const int head = segs[i + 1].classes.front();
    delta += mat(tail, head) - mat(tail, 1);
  }
  return delta;
}

Duration mixed_merge_delta(const SeparationModel& m,
                           const SegmentedSequence& segs) {
  for (std::size_t i = 0; i + 1 < segs.size(); ++i)
    if (segs[i].task == segs[i + 1].task)
      throw MixedTasksWithoutTransitions(
          "mixed merge requires alternating-task segments");
  // Merged arrangement: first all aircraft of the first segment's task in
  // class-monotone order, then the other task's aircraft likewise.
  const Task first_task = segs.front().task;
  const Task other_task =
      first_task == Task::Landing ? Task::Takeoff : Task::Landing;
  int n1 = m.eta, n3 = m.eta; // minimum class per phase
  bool has_other = false;
  for (const Segment& s : segs)
    for (int c : s.classes) {
      if (s.task == first_task)
        n1 = std::min(n1, c);
      else {
        n3 = std::min(n3, c);
        has_other = true;
      }
    }
  if (!has_other)
    throw MixedTasksWithoutTransitions(
        "mixed merge requires both tasks present");

  // Boundary of the merged order: last first-task aircraft (class n1) ahead
  // of the heaviest other-task aircraft.
  int n2 = 1;
  for (const Segment& s : segs)
    if (s.task == other_task)
      for (int c : s.classes) n2 = std::max(n2, c);

  Duration delta = m.D[n1 - 1][0] -
                   min_separation(m, n1, first_task, n2, other_task,
                                  Layout::Single) +
                   m.D[n3 - 1][0] -
                   m.D[segs.back().classes.back() - 1][0];
  for (int k = 1; k <= m.eta; ++k) {
    int p = 0, q = 0;
    for (const Segment& s : segs)
      if (segment_has_class(s, k))
        (s.task == Task::Takeoff ? p : q) += 1;
    delta -= sgn_correction(p, m.D[k - 1][k - 1] - m.D[k - 1][0]);
    delta -= sgn_correction(q, m.T[k - 1][k - 1] - m.T[k - 1][0]);
  }
  for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
    const int tail = segs[i].classes.back();
    const int head = segs[i + 1].classes.front();
    delta += min_separation(m, tail, segs[i].task, head, segs[i + 1].task,
                            Layout::Single) -
             m.D[tail - 1][0];
  }
  return delta;
}

} // namespace

Duration merge_delta(const SeparationModel& m,
                     const SegmentedSequence& segs) {
  bool mixed = false;
  for (const Segment& s : segs)
    if (s.task != segs.front().task) mixed = true;
  if (!mixed) return pure_merge_delta(m, segs.front().task, segs);
  return mixed_merge_delta(m, segs);
}

Duration omega_min_bound(const SeparationModel& m, Layout layout, int c1,
                         Task t1, int c2, Task t2, int c3, Task t3, int c4,
                         Task t4, int cand, Task cand_task) {
  const auto sep = [&](int a, Task ta, int b, Task tb) {
    return min_separation(m, a, ta, b, tb, layout);
  };
  // Cross-task round trip cost for this layout.
  const Duration cross = sep(1, Task::Landing, 1, Task::Takeoff) +
                         sep(1, Task::Takeoff, 1, Task::Landing);
  if (t2 == t3 && t3 == cand_task)
    return sep(c2, t2, cand, cand_task) + sep(cand, cand_task, c3, t3) -
           sep(c2, t2, c3, t3);
  if (t2 == cand_task && t3 != cand_task) {
    const Duration corr = std::min<Duration>(
        {cross - sep(c1, t1, c3, t3), cross - sep(c2, t2, c4, t4), 0});
    return corr + sep(c2, t2, cand, cand_task);
  }
  if (t3 == cand_task && t2 != cand_task) {
    const Duration corr = std::min<Duration>(
        {cross - sep(c1, t1, c3, t3), cross - sep(c2, t2, c4, t4), 0});
    return corr + sep(cand, cand_task, c3, t3);
  }
  // t2 == t3, candidate of the other task.
  return std::max<Duration>(cross - sep(c2, t2, c3, t3), 0);
}

namespace {

std::vector<int> order_key(const Sequence& seq) {
  std::vector<int> key;
  key.reserve(seq.size());
  for (const Aircraft& a : seq) key.push_back(a.id);
  return key;
}

} // namespace

std::vector<Sequence> breakpoint_drift_set(const Schedule& s,
                                           const SeparationModel& model,
                                           Layout layout, int budget) {
  std::vector<Sequence> out;
  if (s.seq.empty() || budget <= 0) return out;
  const Duration target = makespan(s);
  const int n = static_cast<int>(s.seq.size());

  std::set<std::vector<int>> seen;
  std::deque<Sequence> queue;
  seen.insert(order_key(s.seq));
  queue.push_back(s.seq);
  out.push_back(s.seq);

  // Positions to move first: breakpoint aircraft and their trailers (pure
  // sequences); every position for mixed ones.
  const auto priority_positions = [&](const Sequence& seq) {
    std::vector<int> pos;
    bool mixed = false;
    for (const Aircraft& a : seq)
      if (a.task != seq.front().task) mixed = true;
    if (!mixed) {
      for (int i = 0; i + 1 < static_cast<int>(seq.size()); ++i)
        if (seq[i].klass < seq[i + 1].klass) {
          pos.push_back(i);
          pos.push_back(i + 1);
        }
    }
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) pos.push_back(i);
    std::vector<int> uniq;
    for (int p : pos)
      if (std::find(uniq.begin(), uniq.end(), p) == uniq.end())
        uniq.push_back(p);
    return uniq;
  };

  const auto try_add = [&](Sequence cand) {
    if (static_cast<int>(out.size()) >= budget) return;
    auto key = order_key(cand);
    if (seen.count(key)) return;
    auto sched = earliest_schedule(cand, model, layout, s.t0);
    if (!sched || makespan(*sched) != target) return;
    seen.insert(std::move(key));
    out.push_back(cand);
    queue.push_back(std::move(cand));
  };

  while (!queue.empty() && static_cast<int>(out.size()) < budget) {
    Sequence cur = queue.front();
    queue.pop_front();
    // Single-aircraft relocations.
    for (int from : priority_positions(cur)) {
      for (int to = 0; to < n; ++to) {
        if (to == from) continue;
        Sequence next = cur;
        Aircraft a = next[from];
        next.erase(next.begin() + from);
        next.insert(next.begin() + to, a);
        try_add(std::move(next));
        if (static_cast<int>(out.size()) >= budget) return out;
      }
    }
    // Same-class block relocations.
    for (int from = 0; from < n;) {
      int end = from;
      while (end + 1 < n && cur[end + 1].klass == cur[from].klass &&
             cur[end + 1].task == cur[from].task)
        ++end;
      const int len = end - from + 1;
      if (len >= 2) {
        for (int to = 0; to + len <= n; ++to) {
          if (to == from) continue;
          Sequence next;
          next.reserve(n);
          for (int i = 0; i < n; ++i)
            if (i < from || i > end) next.push_back(cur[i]);
          next.insert(next.begin() + to, cur.begin() + from,
                      cur.begin() + end + 1);
          try_add(std::move(next));
          if (static_cast<int>(out.size()) >= budget) return out;
        }
      }
      from = end + 1;
    }
  }
  return out;
}

} // namespace rwsched
