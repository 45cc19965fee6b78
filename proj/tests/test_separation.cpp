#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "rwsched/separation.hpp"

using namespace rwsched;

TEST_CASE("builtin model carries the reference matrices") {
  SeparationModel m = builtin_model("heathrow-recat-single");
  CHECK(m.eta == 6);
  CHECK(m.t0_base == 60);
  CHECK(m.delta == 8);
  CHECK(m.rho1 == 3);
  CHECK(m.rho2 == 5);
  // Landing matrix spot checks (1-based class indices, A=1..F=6).
  CHECK(m.t(1, 6) == 180);
  CHECK(m.t(1, 2) == 135);
  CHECK(m.t(2, 3) == 113);
  CHECK(m.t(3, 3) == 68);
  CHECK(m.t(5, 5) == 68);
  CHECK(m.t(6, 6) == 60);
  // Takeoff matrix spot checks.
  CHECK(m.d(4, 5) == 60);
  CHECK(m.d(1, 1) == 80);
  CHECK(m.d(2, 1) == 80);
  CHECK(m.d(3, 3) == 80);
  CHECK(m.d(6, 6) == 80);
  CHECK(m.d(1, 6) == 180);
  // Single-runway cross separations.
  CHECK(m.td == 75);
  CHECK(m.dt == 60);

  SeparationModel d = builtin_model("heathrow-recat-dual");
  CHECK(d.pd == 0);
  CHECK(d.dp == 60);
  // Both builtins share the same matrices.
  CHECK(d.T == m.T);
  CHECK(d.D == m.D);

  CHECK_THROWS_AS(builtin_model("bogus"), ModelNotFound);
}

TEST_CASE("min_separation dispatches on task pair and layout") {
  SeparationModel s = builtin_model("heathrow-recat-single");
  SeparationModel d = builtin_model("heathrow-recat-dual");
  // Landing/landing pairs use T regardless of layout.
  CHECK(min_separation(s, 2, Task::Landing, 3, Task::Landing,
                       Layout::Single) == 113);
  CHECK(min_separation(d, 2, Task::Landing, 3, Task::Landing,
                       Layout::DualClose) == 113);
  // Takeoff/takeoff pairs use D.
  CHECK(min_separation(s, 2, Task::Takeoff, 2, Task::Takeoff,
                       Layout::Single) == 80);
  // Cross pairs depend on the layout.
  CHECK(min_separation(s, 1, Task::Landing, 6, Task::Takeoff,
                       Layout::Single) == 75);
  CHECK(min_separation(s, 6, Task::Takeoff, 1, Task::Landing,
                       Layout::Single) == 60);
  CHECK(min_separation(d, 1, Task::Landing, 6, Task::Takeoff,
                       Layout::DualClose) == 0);
  CHECK(min_separation(d, 6, Task::Takeoff, 1, Task::Landing,
                       Layout::DualClose) == 60);
  // Pure function: repeat calls identical.
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      CHECK(min_separation(s, i, Task::Landing, j, Task::Landing,
                           Layout::Single) ==
            min_separation(s, i, Task::Landing, j, Task::Landing,
                           Layout::Single));
}

TEST_CASE("landing table validation passes on the builtin model") {
  SeparationModel m = builtin_model("heathrow-recat-single");
  ValidationReport r = validate_landing_table(m);
  CHECK(r.all_pass());
  for (const CheckRow& row : r.checks) {
    CAPTURE(row.assumption);
    CAPTURE(row.subclause);
    CHECK(row.pass);
  }
  // Triangle inequality holds strictly for every class triple.
  for (int i = 1; i <= m.eta; ++i)
    for (int j = 1; j <= m.eta; ++j)
      for (int k = 1; k <= m.eta; ++k)
        CHECK(m.t(i, k) < m.t(i, j) + m.t(j, k));
}

TEST_CASE("landing validation flags a perturbed diagonal") {
  SeparationModel m = builtin_model("heathrow-recat-single");
  m.T[0][0] = 60; // 1.5*T0 expected for the top class
  ValidationReport r = validate_landing_table(m);
  const CheckRow* row = r.find("landing-1", "(1)");
  REQUIRE(row != nullptr);
  CHECK_FALSE(row->pass);
}

TEST_CASE("landing validation on a one-class table is vacuous") {
  SeparationModel m;
  m.eta = 1;
  m.t0_base = 60;
  m.delta = 8;
  m.rho1 = 1;
  m.rho2 = 1;
  m.T = {{90}};
  m.D = {{80}};
  ValidationReport r = validate_landing_table(m);
  const CheckRow* row = r.find("landing-1", "(1)");
  REQUIRE(row != nullptr);
  CHECK(row->pass); // 2*90 == 3*60
}

TEST_CASE("takeoff table validation: documented clause outcomes") {
  SeparationModel m = builtin_model("heathrow-recat-single");
  ValidationReport r = validate_takeoff_table(m);

  // Everything passes except the two conflicting diagonal-step clauses.
  for (const CheckRow& row : r.checks) {
    CAPTURE(row.assumption);
    CAPTURE(row.subclause);
    if (row.assumption == "takeoff-9" &&
        (row.subclause == "(1)" || row.subclause == "(3b)"))
      CHECK_FALSE(row.pass);
    else
      CHECK(row.pass);
  }

  // The first diagonal-step failure witnesses k=1: D12 - D11 = 20, not 10.
  const CheckRow* c91 = r.find("takeoff-9", "(1)");
  REQUIRE(c91 != nullptr);
  REQUIRE_FALSE(c91->pass);
  REQUIRE_FALSE(c91->witness.empty());
  CHECK(c91->witness[0] == 1);
  CHECK(m.d(1, 2) - m.d(1, 1) == 20);
  CHECK(m.t0_base / 6 == 10);

  // The companion column clause fails first at j=3: D13 - D23 = 20, not 40.
  const CheckRow* c93 = r.find("takeoff-9", "(3b)");
  REQUIRE(c93 != nullptr);
  REQUIRE_FALSE(c93->pass);
  CHECK(m.d(1, 3) - m.d(2, 3) == 20);
}

TEST_CASE("takeoff validation flags a perturbed diagonal") {
  SeparationModel m = builtin_model("heathrow-recat-single");
  m.D[5][5] = 60; // last-class diagonal must be 4*T0/3 = 80
  ValidationReport r = validate_takeoff_table(m);
  const CheckRow* row = r.find("takeoff-6", "(1)");
  REQUIRE(row != nullptr);
  CHECK_FALSE(row->pass);
}

TEST_CASE("cross separation validation") {
  SeparationModel s = builtin_model("heathrow-recat-single");
  CHECK(validate_cross(s, Layout::Single).all_pass());

  SeparationModel bad = s;
  bad.td = 95; // must stay below 1.5*T0 = 90
  CHECK_FALSE(validate_cross(bad, Layout::Single).all_pass());

  SeparationModel d = builtin_model("heathrow-recat-dual");
  CHECK(validate_cross(d, Layout::DualClose).all_pass());
}

TEST_CASE("model text round trip is bit-exact") {
  SeparationModel m = builtin_model("heathrow-recat-dual");
  std::ostringstream out;
  write_separation_model(m, out);
  std::istringstream in(out.str());
  SeparationModel back = read_separation_model(in);
  CHECK(back.eta == m.eta);
  CHECK(back.t0_base == m.t0_base);
  CHECK(back.delta == m.delta);
  CHECK(back.rho1 == m.rho1);
  CHECK(back.rho2 == m.rho2);
  CHECK(back.T == m.T);
  CHECK(back.D == m.D);
  CHECK(back.td == m.td);
  CHECK(back.dt == m.dt);
  CHECK(back.pd == m.pd);
  CHECK(back.dp == m.dp);

  std::ostringstream again;
  write_separation_model(back, again);
  CHECK(again.str() == out.str());
}
