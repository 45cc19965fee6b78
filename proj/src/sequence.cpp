// Earliest-time scheduling and the structural queries built on top of it:
// makespan, tight pairs, breakpoints, resident points, path existence.
#include "rwsched/sequence.hpp"

#include <algorithm>
#include <ostream>

namespace rwsched {

Duration pair_separation(const Sequence& seq, int i, int j,
                         const SeparationModel& model, Layout layout) {
  return min_separation(model, seq[i].klass, seq[i].task, seq[j].klass,
                        seq[j].task, layout);
}

std::optional<Schedule> earliest_schedule(const Sequence& seq,
                                          const SeparationModel& model,
                                          Layout layout, Duration t0,
                                          bool full_pairs, int* bad_index) {
  const int n = static_cast<int>(seq.size());
  Schedule s;
  s.seq = seq;
  s.t0 = t0;
  s.times.resize(n);
  for (int i = 0; i < n; ++i) {
    Duration t = std::max(t0, seq[i].fmin);
    const int first = full_pairs ? 0 : std::max(0, i - 4);
    for (int j = first; j < i; ++j)
      t = std::max(t, s.times[j] + pair_separation(seq, j, i, model, layout));
    if (t > seq[i].fmax) {
      if (bad_index) *bad_index = i;
      return std::nullopt;
    }
    s.times[i] = t;
  }
  return s;
}

Duration makespan(const Schedule& s) {
  return s.times.empty() ? 0 : s.times.back() - s.t0;
}

std::vector<RelevancePair> relevance_pairs(const Schedule& s,
                                           const SeparationModel& model,
                                           Layout layout) {
  std::vector<RelevancePair> out;
  const int n = static_cast<int>(s.seq.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && j <= i + 4; ++j)
      if (s.times[j] - s.times[i] ==
          pair_separation(s.seq, i, j, model, layout))
        out.push_back({i + 1, j + 1});
  return out;
}

std::vector<int> breakpoints(const Sequence& seq) {
  for (const Aircraft& a : seq)
    if (a.task != seq.front().task)
      throw MixedTasks("breakpoints are defined for single-task sequences");
  std::vector<int> out;
  for (int i = 0; i + 1 < static_cast<int>(seq.size()); ++i)
    if (seq[i].klass < seq[i + 1].klass) out.push_back(i + 1);
  return out;
}

std::vector<std::pair<int, Duration>> resident_points(
    const Schedule& s, const SeparationModel& model, Layout layout) {
  std::vector<std::pair<int, Duration>> out;
  const int n = static_cast<int>(s.seq.size());
  if (n == 0) return out;
  if (s.times[0] > s.t0) out.emplace_back(1, s.times[0] - s.t0);

  bool mixed = false;
  for (const Aircraft& a : s.seq)
    if (a.task != s.seq.front().task) mixed = true;

  for (int i = 1; i < n; ++i) {
    if (!mixed) {
      const Duration slack = s.times[i] - s.times[i - 1] -
                             pair_separation(s.seq, i - 1, i, model, layout);
      if (slack > 0) out.emplace_back(i + 1, slack);
      continue;
    }
    // Mixed: slack against the nearest preceding landing and the nearest
    // preceding takeoff; a missing branch imposes no constraint.
    Duration min_slack = -1;
    bool tight = false;
    for (Task task : {Task::Landing, Task::Takeoff}) {
      int j = -1;
      for (int k = i - 1; k >= 0; --k)
        if (s.seq[k].task == task) {
          j = k;
          break;
        }
      if (j < 0) continue;
      const Duration slack =
          s.times[i] - s.times[j] - pair_separation(s.seq, j, i, model, layout);
      if (slack == 0) tight = true;
      if (min_slack < 0 || slack < min_slack) min_slack = slack;
    }
    if (!tight && min_slack > 0) out.emplace_back(i + 1, min_slack);
  }
  return out;
}

bool has_optimal_path(const Schedule& s, const SeparationModel& model,
                      Layout layout) {
  const int n = static_cast<int>(s.seq.size());
  if (n <= 1) return true;
  // Walk tight pairs backwards from the last aircraft.
  std::vector<char> reaches(n, 0);
  reaches[n - 1] = 1;
  for (int j = n - 1; j >= 1; --j) {
    if (!reaches[j]) continue;
    for (int i = std::max(0, j - 4); i < j; ++i)
      if (s.times[j] - s.times[i] ==
          pair_separation(s.seq, i, j, model, layout))
        reaches[i] = 1;
  }
  return reaches[0] != 0;
}

void write_schedule(const Schedule& s, std::ostream& out) {
  for (std::size_t i = 0; i < s.seq.size(); ++i) {
    const Aircraft& a = s.seq[i];
    out << a.id << ' ' << a.klass << ' '
        << (a.task == Task::Landing ? 'L' : 'T') << ' ' << s.times[i] << ' '
        << a.fmin << ' ';
    if (a.fmax >= kNoDeadline)
      out << "inf";
    else
      out << a.fmax;
    out << '\n';
  }
}

} // namespace rwsched
