#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dicut/simplex.hpp"

using namespace dicut;

namespace {

LPConstraint row(std::vector<std::pair<int, Rat>> terms, Rel rel, Rat rhs) {
  return LPConstraint{std::move(terms), rel, std::move(rhs)};
}

// Feasible bounded random LP: box-bounded variables, mixed-relation rows
// anchored at a random interior point.
LPProblem random_lp(std::mt19937_64& rng, int max_vars) {
  std::uniform_int_distribution<int> nd(1, max_vars);
  int n = nd(rng);
  std::uniform_int_distribution<int> md(1, std::max(1, n));
  int m = md(rng);
  std::uniform_int_distribution<int> coef(-6, 6), pick(0, 2), val(0, 40);
  LPProblem p;
  p.num_vars = n;
  for (int j = 0; j < n; ++j) {
    p.objective.push_back(rat_frac(coef(rng), 1 + (val(rng) % 3)));
    p.bound_overrides.push_back({j, VarBounds::boxed(Rat(0), Rat(10))});
  }
  std::vector<Rat> x0(n);
  for (int j = 0; j < n; ++j) x0[j] = rat_frac(val(rng), 4);  // in [0, 10]
  for (int i = 0; i < m; ++i) {
    LPConstraint r;
    Rat lhs(0);
    for (int j = 0; j < n; ++j) {
      int a = coef(rng);
      if (a == 0) continue;
      r.terms.emplace_back(j, Rat(a));
      lhs += Rat(a) * x0[j];
    }
    int kind = pick(rng);
    if (kind == 0) {
      r.rel = Rel::Le;
      r.rhs = lhs + rat_frac(val(rng), 8);
    } else if (kind == 1) {
      r.rel = Rel::Ge;
      r.rhs = lhs - rat_frac(val(rng), 8);
    } else {
      r.rel = Rel::Eq;
      r.rhs = lhs;
    }
    p.rows.push_back(std::move(r));
  }
  return p;
}

}  // namespace

TEST_CASE("one-variable LP in both modes") {
  LPProblem p;
  p.num_vars = 1;
  p.objective = {Rat(-1)};
  p.rows.push_back(row({{0, Rat(1)}}, Rel::Le, Rat(1)));
  for (LPMode mode : {LPMode::ExactRational, LPMode::Float}) {
    LPSolution s = solve_lp(p, mode);
    REQUIRE(s.status == LPStatus::Optimal);
    CHECK(s.objective == Rat(-1));
    CHECK(s.primal[0] == Rat(1));
  }
}

TEST_CASE("infeasible box") {
  LPProblem p;
  p.num_vars = 1;
  p.objective = {Rat(0)};
  p.rows.push_back(row({{0, Rat(1)}}, Rel::Ge, Rat(2)));
  p.rows.push_back(row({{0, Rat(1)}}, Rel::Le, Rat(1)));
  CHECK(solve_lp(p, LPMode::ExactRational).status == LPStatus::Infeasible);
  CHECK(solve_lp(p, LPMode::Float).status == LPStatus::Infeasible);
}

TEST_CASE("unbounded ray") {
  LPProblem p;
  p.num_vars = 2;
  p.objective = {Rat(-1), Rat(0)};
  p.rows.push_back(row({{0, Rat(1)}, {1, Rat(-1)}}, Rel::Le, Rat(3)));
  CHECK(solve_lp(p, LPMode::ExactRational).status == LPStatus::Unbounded);
  CHECK(solve_lp(p, LPMode::Float).status == LPStatus::Unbounded);
}

TEST_CASE("hand-built single-class ratio LP solves to 1/4") {
  // Three pair types over one class with value 1/2: every objective
  // coefficient is 1/4, only the first type is in C+.
  LPProblem p;
  p.num_vars = 3;
  p.objective = {Rat(1, 4), Rat(1, 4), Rat(1, 4)};
  p.rows.push_back(row({{0, Rat(1)}}, Rel::Eq, Rat(1)));
  LPSolution s = solve_lp(p, LPMode::ExactRational);
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.objective == Rat(1, 4));
  CHECK(s.primal[0] == 1);
  CHECK(s.primal[1] == 0);
}

TEST_CASE("free variables and equality rows") {
  // min x + y subject to x - y = 3, y >= 0 free x.
  LPProblem p;
  p.num_vars = 2;
  p.objective = {Rat(1), Rat(1)};
  p.bound_overrides.push_back({0, VarBounds::free_var()});
  p.rows.push_back(row({{0, Rat(1)}, {1, Rat(-1)}}, Rel::Eq, Rat(3)));
  LPSolution s = solve_lp(p, LPMode::ExactRational);
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.objective == Rat(3));
  CHECK(s.primal[0] == Rat(3));
  LPSolution f = solve_lp(p, LPMode::Float);
  REQUIRE(f.status == LPStatus::Optimal);
  CHECK(rat_to_double(f.objective) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("boxed variables hit their upper bounds") {
  LPProblem p;
  p.num_vars = 2;
  p.objective = {Rat(-2), Rat(-3)};
  p.bound_overrides.push_back({0, VarBounds::boxed(Rat(0), Rat(2))});
  p.bound_overrides.push_back({1, VarBounds::boxed(Rat(1, 2), Rat(5, 2))});
  p.rows.push_back(row({{0, Rat(1)}, {1, Rat(1)}}, Rel::Le, Rat(4)));
  for (LPMode mode : {LPMode::ExactRational, LPMode::Float}) {
    LPSolution s = solve_lp(p, mode);
    REQUIRE(s.status == LPStatus::Optimal);
    CHECK(s.objective == Rat(-21, 2));  // x=3/2, y=5/2
  }
}

TEST_CASE("exact and float modes agree on 100 random LPs") {
  std::mt19937_64 rng(20240820);
  int solved = 0;
  for (int trial = 0; trial < 100; ++trial) {
    LPProblem p = random_lp(rng, 50);
    LPSolution e = solve_lp(p, LPMode::ExactRational);
    LPSolution f = solve_lp(p, LPMode::Float);
    REQUIRE(e.status == f.status);
    if (e.status != LPStatus::Optimal) continue;
    ++solved;
    double ev = rat_to_double(e.objective), fv = rat_to_double(f.objective);
    CHECK(std::abs(ev - fv) <= 1e-7 * (1.0 + std::abs(ev)));
    REQUIRE(f.audit.has_value());
    CHECK(f.audit->max_primal_residual <= SimplexTolerances::kFeasibility);
    CHECK(f.audit->duality_gap <= 1e-7 * (1.0 + std::abs(ev)));
  }
  CHECK(solved > 50);  // the generator makes mostly solvable instances
}

TEST_CASE("exact primal satisfies every row exactly") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    LPProblem p = random_lp(rng, 12);
    LPSolution s = solve_lp(p, LPMode::ExactRational);
    if (s.status != LPStatus::Optimal) continue;
    for (const auto& r : p.rows) {
      Rat lhs(0);
      for (const auto& [j, a] : r.terms) lhs += a * s.primal[j];
      if (r.rel == Rel::Le) CHECK(lhs <= r.rhs);
      if (r.rel == Rel::Ge) CHECK(lhs >= r.rhs);
      if (r.rel == Rel::Eq) CHECK(lhs == r.rhs);
    }
    Rat obj(0);
    for (int j = 0; j < p.num_vars; ++j) obj += p.objective[j] * s.primal[j];
    CHECK(obj == s.objective);
  }
}

TEST_CASE("explicit dual attains the negated primal value") {
  std::mt19937_64 rng(777);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    // dual_of needs x >= 0 or free variables; build without boxes.
    LPProblem p = random_lp(rng, 8);
    p.bound_overrides.clear();
    // Keep it bounded: nonnegative objective plus a capping row.
    for (auto& c : p.objective) c = rat_abs(c) + 1;
    LPSolution e = solve_lp(p, LPMode::ExactRational);
    if (e.status != LPStatus::Optimal) continue;
    LPProblem d = dual_of(p);
    LPSolution ds = solve_lp(d, LPMode::ExactRational);
    REQUIRE(ds.status == LPStatus::Optimal);
    CHECK(ds.objective == Rat(-e.objective));
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("solving via the explicit dual recovers the primal solution") {
  std::mt19937_64 rng(515151);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    LPProblem p = random_lp(rng, 8);
    p.bound_overrides.clear();
    for (auto& c : p.objective) c = rat_abs(c) + 1;  // bounded below
    LPSolution direct = solve_lp(p, LPMode::ExactRational);
    for (LPMode mode : {LPMode::ExactRational, LPMode::Float}) {
      LPSolution via = solve_lp_via_dual(p, mode);
      REQUIRE(via.status == direct.status);
      if (direct.status != LPStatus::Optimal) continue;
      double want = rat_to_double(direct.objective);
      CHECK(std::abs(rat_to_double(via.objective) - want) <= 1e-8 * (1.0 + std::abs(want)));
      // Recovered primal is feasible and achieves the objective.
      Rat obj(0);
      for (int j = 0; j < p.num_vars; ++j) {
        CHECK(rat_to_double(via.primal[j]) >= -1e-8);
        obj += p.objective[j] * via.primal[j];
      }
      CHECK(std::abs(rat_to_double(obj) - want) <= 1e-8 * (1.0 + std::abs(want)));
      for (const auto& r : p.rows) {
        Rat lhs(0);
        for (const auto& [j, a] : r.terms) lhs += a * via.primal[j];
        double slack = rat_to_double(Rat(lhs - r.rhs));
        if (r.rel == Rel::Le) CHECK(slack <= 1e-8);
        if (r.rel == Rel::Ge) CHECK(slack >= -1e-8);
        if (r.rel == Rel::Eq) CHECK(std::abs(slack) <= 1e-8);
      }
      ++checked;
    }
  }
  CHECK(checked > 30);
}

TEST_CASE("float audit reports an exactly optimal basis on a clean LP") {
  LPProblem p;
  p.num_vars = 2;
  p.objective = {Rat(1), Rat(2)};
  p.rows.push_back(row({{0, Rat(1)}, {1, Rat(1)}}, Rel::Ge, Rat(1)));
  LPSolution s = solve_lp(p, LPMode::Float);
  REQUIRE(s.status == LPStatus::Optimal);
  REQUIRE(s.audit.has_value());
  CHECK(s.objective == Rat(1));
  CHECK(s.audit->dual_violation == 0.0);
  CHECK(s.audit->duality_gap == 0.0);
}

TEST_CASE("dump lists one constraint per line") {
  LPProblem p;
  p.num_vars = 2;
  p.objective = {Rat(1), Rat(0)};
  p.rows.push_back(row({{0, Rat(1)}, {1, Rat(2)}}, Rel::Le, Rat(3)));
  std::string text = p.dump({"alpha", "beta"});
  CHECK(text.find("alpha") != std::string::npos);
  CHECK(text.find("<= 3") != std::string::npos);
}
