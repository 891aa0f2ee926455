#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dicut/rational.hpp"

namespace dicut {

enum class Rel { Le, Eq, Ge };

struct LPConstraint {
  std::vector<std::pair<int, Rat>> terms;  // (variable index, coefficient)
  Rel rel = Rel::Le;
  Rat rhs = Rat(0);
};

// Variable bound override; absent optional = infinite on that side.
struct VarBounds {
  std::optional<Rat> lo = Rat(0);
  std::optional<Rat> hi = std::nullopt;
  static VarBounds nonneg() { return {}; }
  static VarBounds free_var() { return {std::nullopt, std::nullopt}; }
  static VarBounds boxed(Rat l, Rat h) { return {std::move(l), std::move(h)}; }
};

// min c.x  subject to rows and bounds; default bound is x >= 0.
struct LPProblem {
  int num_vars = 0;
  std::vector<Rat> objective;
  std::vector<LPConstraint> rows;
  std::vector<std::pair<int, VarBounds>> bound_overrides;

  VarBounds bounds_of(int j) const;
  void validate() const;
  // Plain-text standard-form listing, one constraint per line (debug aid).
  std::string dump(const std::vector<std::string>& var_names = {}) const;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };
enum class LPMode { ExactRational, Float };

// Float-backend audit, computed after termination with exact rational
// arithmetic on the dyadic solution vectors (doubles are exact rationals):
//   max_primal_residual  max |(Ax - b)_i| and bound violations of x
//   dual_violation       worst sign violation of exact reduced costs at the
//                        final basis (0 means the basis is exactly optimal)
//   duality_gap          |c.x - dual bound assembled from (y, reduced costs)|
struct FloatAudit {
  double max_primal_residual = 0;
  double dual_violation = 0;
  double duality_gap = 0;
  double primal_objective = 0;
  double dual_objective = 0;
  int polish_rounds = 0;
};

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  Rat objective = Rat(0);   // exact, or dyadic-exact (polished) in float mode
  std::vector<Rat> primal;  // per original variable
  std::vector<Rat> dual;    // per original row
  std::vector<int> basis;   // internal column ids, for certificates/debugging
  std::optional<FloatAudit> audit;
};

// Float-backend tolerances, in one place.
struct SimplexTolerances {
  static constexpr double kFeasibility = 1e-9;   // relative primal feasibility
  static constexpr double kReducedCost = 1e-10;  // pricing threshold
  static constexpr double kPivot = 1e-9;         // minimum pivot magnitude
};

// Exact mode: dense-tableau two-phase primal simplex with Bland's rule
// (always terminates, everything exact). Float mode: bounded-variable
// revised simplex with partial pricing, followed by iterative refinement
// and an exact reduced-cost audit of the final basis; if the audit finds a
// violated column the solve resumes, so a returned Optimal is backed by an
// exactly verified basis whenever audit->dual_violation == 0.
LPSolution solve_lp(const LPProblem& p, LPMode mode);

// Explicit dual of a problem whose variables are all >= 0 or free.
// Minimization convention: value(dual) == -value(primal) at optimality.
LPProblem dual_of(const LPProblem& p);

// Solves p by solving its explicit dual and reading the primal solution off
// the dual's row multipliers. The method of choice for tall problems (many
// rows, few variables), where the revised simplex would otherwise crawl
// through a huge degenerate basis.
LPSolution solve_lp_via_dual(const LPProblem& p, LPMode mode);

}  // namespace dicut
