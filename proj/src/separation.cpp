// Separation matrices, the unified minimum-separation lookup, structural
// validation of the tables, and the text serialization of a model.
#include "rwsched/separation.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rwsched {

namespace {

// Minimum landing separation times (seconds), rows = leading class A..F.
constexpr Duration kLandingT[6][6] = {
    {90, 135, 158, 158, 158, 180}, //
    {90, 90, 113, 113, 135, 158},  //
    {60, 60, 68, 90, 90, 135},     //
    {60, 60, 60, 60, 68, 113},     //
    {60, 60, 60, 60, 68, 90},      //
    {60, 60, 60, 60, 60, 60},      //
};

// Minimum takeoff separation times (seconds), rows = leading class A..F.
constexpr Duration kTakeoffD[6][6] = {
    {80, 100, 120, 140, 160, 180}, //
    {80, 80, 100, 100, 120, 140},  //
    {60, 60, 80, 80, 100, 120},    //
    {60, 60, 60, 60, 60, 120},     //
    {60, 60, 60, 60, 60, 100},     //
    {60, 60, 60, 60, 60, 80},      //
};

SeparationModel base_model() {
  SeparationModel m;
  m.eta = 6;
  m.t0_base = 60;
  m.delta = 8;
  m.rho1 = 3;
  m.rho2 = 5;
  m.T.assign(6, std::vector<Duration>(6));
  m.D.assign(6, std::vector<Duration>(6));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      m.T[i][j] = kLandingT[i][j];
      m.D[i][j] = kTakeoffD[i][j];
    }
  }
  return m;
}

} // namespace

SeparationModel builtin_model(const std::string& name) {
  if (name == "heathrow-recat-single") {
    SeparationModel m = base_model();
    m.td = 75;
    m.dt = 60;
    m.pd = 0;
    m.dp = 60;
    return m;
  }
  if (name == "heathrow-recat-dual") {
    SeparationModel m = base_model();
    m.td = 75;
    m.dt = 60;
    m.pd = 0;
    m.dp = 60;
    return m;
  }
  throw ModelNotFound("unknown builtin separation model: " + name);
}

Duration min_separation(const SeparationModel& model, int lead_class,
                        Task lead_task, int trail_class, Task trail_task,
                        Layout layout) {
  if (lead_task == Task::Landing && trail_task == Task::Landing)
    return model.t(lead_class, trail_class);
  if (lead_task == Task::Takeoff && trail_task == Task::Takeoff)
    return model.d(lead_class, trail_class);
  if (layout == Layout::Single)
    return lead_task == Task::Landing ? model.td : model.dt;
  return lead_task == Task::Landing ? model.pd : model.dp;
}

bool ValidationReport::all_pass() const {
  for (const CheckRow& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckRow* ValidationReport::find(const std::string& assumption,
                                       const std::string& subclause) const {
  for (const CheckRow& c : checks)
    if (c.assumption == assumption && c.subclause == subclause) return &c;
  return nullptr;
}

namespace {

struct ClauseBuilder {
  CheckRow row;

  ClauseBuilder(std::string assumption, std::string subclause) {
    row.assumption = std::move(assumption);
    row.subclause = std::move(subclause);
  }

  void require(bool ok, std::initializer_list<int> witness,
               const std::string& detail) {
    if (ok || !row.pass) return;
    row.pass = false;
    row.witness.assign(witness);
    row.detail = detail;
  }
};

std::string eq_detail(const char* lhs, Duration got, Duration want) {
  std::ostringstream os;
  os << lhs << " = " << got << ", expected " << want;
  return os.str();
}

} // namespace

ValidationReport validate_landing_table(const SeparationModel& m) {
  ValidationReport rep;
  const int n = m.eta;
  const Duration t0 = m.t0_base;

  // Diagonal values: 1.5*T0 for the two heaviest classes, T0+delta for the
  // two special classes, T0 otherwise; delta confined to (T0/8, T0/6).
  {
    ClauseBuilder c("landing-1", "(1)");
    for (int i = 1; i <= n && i <= 2; ++i)
      c.require(2 * m.t(i, i) == 3 * t0, {i, i},
                eq_detail("2*T_ii", 2 * m.t(i, i), 3 * t0));
    rep.checks.push_back(c.row);
  }
  {
    ClauseBuilder c("landing-1", "(2)");
    for (int i : {m.rho1, m.rho2})
      if (i >= 1 && i <= n)
        c.require(m.t(i, i) == t0 + m.delta, {i, i},
                  eq_detail("T_ii", m.t(i, i), t0 + m.delta));
    c.require(8 * m.delta > t0 && 6 * m.delta < t0, {},
              "delta outside (T0/8, T0/6)");
    rep.checks.push_back(c.row);
  }
  {
    ClauseBuilder c("landing-1", "(3)");
    for (int i = 3; i <= n; ++i)
      if (i != m.rho1 && i != m.rho2 && i != 1 && i != 2)
        c.require(m.t(i, i) == t0, {i, i}, eq_detail("T_ii", m.t(i, i), t0));
    rep.checks.push_back(c.row);
  }

  // Range and monotonicity: every entry in [T0, 3*T0], rows non-decreasing
  // in the trailing class, columns non-increasing in the leading class.
  {
    ClauseBuilder c("landing-2", "(1)");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        c.require(m.t(i, j) >= t0 && m.t(i, j) <= 3 * t0, {i, j},
                  "entry outside [T0, 3*T0]");
        if (j < n)
          c.require(m.t(i, j) <= m.t(i, j + 1), {i, j},
                    "row not non-decreasing");
        if (i < n)
          c.require(m.t(i, j) >= m.t(i + 1, j), {i, j},
                    "column not non-increasing");
      }
    rep.checks.push_back(c.row);
  }
  // Strict triangle inequality.
  {
    ClauseBuilder c("landing-2", "(2)");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          c.require(m.t(i, k) < m.t(i, j) + m.t(j, k), {i, j, k},
                    "triangle inequality violated");
    rep.checks.push_back(c.row);
  }

  // Below-diagonal structure.
  {
    ClauseBuilder c("landing-3", "(1)");
    if (n >= 2)
      c.require(2 * m.t(2, 1) == 3 * t0, {2, 1},
                eq_detail("2*T_21", 2 * m.t(2, 1), 3 * t0));
    rep.checks.push_back(c.row);
  }
  {
    ClauseBuilder c("landing-3", "(2)");
    for (int i = 3; i <= n; ++i)
      for (int j = 1; j < i; ++j)
        c.require(m.t(i, j) == t0, {i, j}, eq_detail("T_ij", m.t(i, j), t0));
    rep.checks.push_back(c.row);
  }

  // First superdiagonal and column gaps.
  {
    ClauseBuilder c("landing-4", "(1)");
    for (int k = 2; k <= n; ++k) {
      if (k == m.rho2)
        c.require(m.t(k - 1, k) == t0 + m.delta, {k - 1, k},
                  eq_detail("T_(k-1)k", m.t(k - 1, k), t0 + m.delta));
      else
        c.require(2 * m.t(k - 1, k) >= 3 * t0, {k - 1, k},
                  "superdiagonal entry below 1.5*T0");
    }
    rep.checks.push_back(c.row);
  }
  {
    ClauseBuilder c("landing-4", "(2)");
    for (int k = 2; k <= n; ++k)
      for (int i = 2; i <= k; ++i) {
        if (i == m.rho2 && k == m.rho2) continue;
        c.require(m.t(i - 1, k) - m.t(i, k) > 2 * m.delta, {i, k},
                  "column gap not above 2*delta");
      }
    rep.checks.push_back(c.row);
  }
  {
    ClauseBuilder c("landing-4", "(3)");
    if (n >= 2)
      c.require(m.t(1, 2) > 2 * t0, {1, 2}, "T_12 not above 2*T0");
    if (n >= 3)
      c.require(2 * m.t(2, 3) > 3 * t0 + 4 * m.delta, {2, 3},
                "T_23 not above 1.5*T0 + 2*delta");
    rep.checks.push_back(c.row);
  }
  {
    ClauseBuilder c("landing-4", "(4)");
    for (int h = 3; h <= n; ++h)
      for (int j = h; j <= n; ++j)
        c.require(2 * (m.t(1, j) - m.t(h, j)) > t0, {h, j},
                  "first-row drop not above 0.5*T0");
    rep.checks.push_back(c.row);
  }
  // The near-delta column-drop pair set must be exactly {<3,4>, <3,eta>}.
  {
    ClauseBuilder c("landing-4", "(5)");
    for (int k = 3; k <= n; ++k)
      for (int j = k + 1; j <= n; ++j) {
        const Duration drop = m.t(2, j) - m.t(k, j);
        const bool member = 2 * drop >= t0 - 2 * m.delta && 2 * drop < t0;
        const bool expected = k == 3 && (j == 4 || j == n);
        c.require(member == expected, {k, j},
                  member ? "unexpected near-delta pair"
                         : "missing near-delta pair");
      }
    rep.checks.push_back(c.row);
  }
  return rep;
}

ValidationReport validate_takeoff_table(const SeparationModel& m) {
  ValidationReport rep;
  const int n = m.eta;
  const Duration t0 = m.t0_base;

  // Diagonal: (1+1/3)*T0 for classes 1, 2, 3 and eta, T0 elsewhere.
  {
    ClauseBuilder c("takeoff-6", "(1)");
    for (int i = 1; i <= n; ++i)
      if (i <= 3 || i == n)
        c.require(3 * m.d(i, i) == 4 * t0, {i, i},
                  eq_detail("3*D_ii", 3 * m.d(i, i), 4 * t0));
    rep.checks.push_back(c.row);
  }
  {
    ClauseBuilder c("takeoff-6", "(2)");
    for (int i = 4; i < n; ++i)
      c.require(m.d(i, i) == t0, {i, i}, eq_detail("D_ii", m.d(i, i), t0));
    rep.checks.push_back(c.row);
  }

  // Below-diagonal structure.
  {
    ClauseBuilder c("takeoff-7", "(1)");
    if (n >= 2)
      c.require(3 * m.d(2, 1) == 4 * t0, {2, 1},
                eq_detail("3*D_21", 3 * m.d(2, 1), 4 * t0));
    rep.checks.push_back(c.row);
  }
  {
    ClauseBuilder c("takeoff-7", "(2)");
    for (int i = 3; i <= n; ++i)
      for (int j = 1; j < i; ++j)
        c.require(m.d(i, j) == t0, {i, j}, eq_detail("D_ij", m.d(i, j), t0));
    rep.checks.push_back(c.row);
  }

  // Range and monotonicity.
  {
    ClauseBuilder c("takeoff-8", "(1)");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        c.require(m.d(i, j) >= t0 && m.d(i, j) <= 3 * t0, {i, j},
                  "entry outside [T0, 3*T0]");
        if (j < n)
          c.require(m.d(i, j) <= m.d(i, j + 1), {i, j},
                    "row not non-decreasing");
        if (i < n)
          c.require(m.d(i, j) >= m.d(i + 1, j), {i, j},
                    "column not non-increasing");
      }
    rep.checks.push_back(c.row);
  }
  {
    ClauseBuilder c("takeoff-8", "(2)");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          c.require(m.d(i, k) < m.d(i, j) + m.d(j, k), {i, j, k},
                    "triangle inequality violated");
    rep.checks.push_back(c.row);
  }

  // Superdiagonal steps relative to the diagonal.
  {
    ClauseBuilder c("takeoff-9", "(1)");
    for (int k = 1; k <= 2 && k + 1 <= n; ++k)
      c.require(6 * (m.d(k, k + 1) - m.d(k, k)) == t0, {k},
                eq_detail("6*(D_k(k+1) - D_kk)",
                          6 * (m.d(k, k + 1) - m.d(k, k)), t0));
    rep.checks.push_back(c.row);
  }
  {
    ClauseBuilder c("takeoff-9", "(2)");
    for (int k : {3, m.rho2 - 1})
      if (k >= 1 && k + 1 <= n)
        c.require(m.d(k, k + 1) == m.d(k, k), {k},
                  eq_detail("D_k(k+1)", m.d(k, k + 1), m.d(k, k)));
    rep.checks.push_back(c.row);
  }

  // First-versus-second row drops.
  {
    ClauseBuilder c("takeoff-9", "(3a)");
    if (n >= 3)
      c.require(3 * (m.d(1, 3) - m.d(2, 3)) == t0, {1, 3},
                eq_detail("3*(D_13 - D_23)", 3 * (m.d(1, 3) - m.d(2, 3)),
                          t0));
    rep.checks.push_back(c.row);
  }
  {
    ClauseBuilder c("takeoff-9", "(3b)");
    for (int j = 3; j <= n; ++j)
      c.require(3 * (m.d(1, j) - m.d(2, j)) == 2 * t0, {1, j},
                eq_detail("3*(D_1j - D_2j)", 3 * (m.d(1, j) - m.d(2, j)),
                          2 * t0));
    rep.checks.push_back(c.row);
  }

  // Last-column ties.
  {
    ClauseBuilder c("takeoff-9", "(4)");
    if (n >= 4)
      c.require(m.d(3, n) == m.d(4, n), {3, n},
                eq_detail("D_3eta", m.d(3, n), m.d(4, n)));
    if (m.rho2 - 1 >= 1 && m.rho2 <= n)
      c.require(m.d(m.rho2 - 1, n) == m.d(m.rho2, m.rho2) + t0,
                {m.rho2 - 1, n},
                eq_detail("D_(rho2-1)eta", m.d(m.rho2 - 1, n),
                          m.d(m.rho2, m.rho2) + t0));
    rep.checks.push_back(c.row);
  }

  // Uniform one-third-T0 column steps away from the named exceptions.
  {
    ClauseBuilder c("takeoff-9", "(5)");
    for (int k = 2; k < n; ++k)
      for (int j = std::max(3, k + 1); j <= n; ++j) {
        if ((k == 3 && j == n) || (k == m.rho2 - 1 && j == m.rho2) ||
            (k == m.rho2 - 2 && j == m.rho2))
          continue;
        c.require(3 * (m.d(k, j) - m.d(k + 1, j)) == t0, {k, j},
                  eq_detail("3*(D_kj - D_(k+1)j)",
                            3 * (m.d(k, j) - m.d(k + 1, j)), t0));
      }
    rep.checks.push_back(c.row);
  }
  return rep;
}

ValidationReport validate_cross(const SeparationModel& m, Layout layout) {
  ValidationReport rep;
  const Duration t0 = m.t0_base;
  if (layout == Layout::Single) {
    {
      ClauseBuilder c("cross-11", "(td)");
      c.require(m.td >= t0 && 2 * m.td < 3 * t0, {},
                eq_detail("T_D", m.td, t0));
      rep.checks.push_back(c.row);
    }
    {
      ClauseBuilder c("cross-11", "(dt)");
      c.require(m.dt >= t0 && 2 * m.dt < 3 * t0, {},
                eq_detail("D_T", m.dt, t0));
      rep.checks.push_back(c.row);
    }
  } else {
    {
      ClauseBuilder c("cross-19", "(dp)");
      c.require(m.dp == t0, {}, eq_detail("D_P", m.dp, t0));
      rep.checks.push_back(c.row);
    }
    {
      ClauseBuilder c("cross-19", "(pd)");
      c.require(m.pd == 0, {}, eq_detail("P_D", m.pd, 0));
      rep.checks.push_back(c.row);
    }
  }
  return rep;
}

SeparationModel read_separation_model(std::istream& in) {
  SeparationModel m;
  if (!(in >> m.eta >> m.t0_base >> m.delta >> m.rho1 >> m.rho2))
    throw ParseError("separation model: bad header");
  if (m.eta < 1 || m.eta > 64)
    throw ParseError("separation model: eta out of range");
  m.T.assign(m.eta, std::vector<Duration>(m.eta));
  m.D.assign(m.eta, std::vector<Duration>(m.eta));
  for (auto* mat : {&m.T, &m.D})
    for (auto& row : *mat)
      for (auto& v : row)
        if (!(in >> v)) throw ParseError("separation model: bad matrix");
  if (!(in >> m.td >> m.dt >> m.pd >> m.dp))
    throw ParseError("separation model: bad cross separations");
  return m;
}

void write_separation_model(const SeparationModel& m, std::ostream& out) {
  out << m.eta << ' ' << m.t0_base << ' ' << m.delta << ' ' << m.rho1 << ' '
      << m.rho2 << '\n';
  for (const auto* mat : {&m.T, &m.D})
    for (const auto& row : *mat) {
      for (std::size_t j = 0; j < row.size(); ++j)
        out << (j ? " " : "") << row[j];
      out << '\n';
    }
  out << m.td << ' ' << m.dt << ' ' << m.pd << ' ' << m.dp << '\n';
}

SeparationModel load_separation_model(const std::string& path_or_builtin) {
  if (path_or_builtin == "builtin" ||
      path_or_builtin.rfind("heathrow-", 0) == 0) {
    return builtin_model(path_or_builtin == "builtin"
                             ? "heathrow-recat-single"
                             : path_or_builtin);
  }
  std::ifstream in(path_or_builtin);
  if (!in) throw ModelNotFound("cannot open model file: " + path_or_builtin);
  return read_separation_model(in);
}

} // namespace rwsched
