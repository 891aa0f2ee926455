#include "dicut/quadopt.hpp"

#include <optional>
#include <stdexcept>

#include "dicut/simplex.hpp"

namespace dicut {

namespace {

// Exact solve of A z = rhs (square, possibly singular). Result is either
// inconsistent, or a particular solution plus a nullspace basis.
struct LinSolve {
  bool consistent = false;
  std::vector<Rat> particular;                 // one solution
  std::vector<std::vector<Rat>> null_basis;    // basis of the kernel
};

LinSolve solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> rhs) {
  const int n = static_cast<int>(rhs.size());
  std::vector<int> pivot_col_of_row(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int i = rank; i < n; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    std::swap(rhs[piv], rhs[rank]);
    Rat d = a[rank][col];
    for (int j = 0; j < n; ++j) a[rank][j] /= d;
    rhs[rank] /= d;
    for (int i = 0; i < n; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[rank][j];
      rhs[i] -= f * rhs[rank];
    }
    pivot_col_of_row[rank] = col;
    ++rank;
  }
  LinSolve out;
  for (int i = rank; i < n; ++i)
    if (rhs[i] != 0) return out;  // inconsistent
  out.consistent = true;
  out.particular.assign(n, Rat(0));
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < rank; ++r) {
    is_pivot[pivot_col_of_row[r]] = true;
    out.particular[pivot_col_of_row[r]] = rhs[r];
  }
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    std::vector<Rat> dir(n, Rat(0));
    dir[col] = 1;
    for (int r = 0; r < rank; ++r) dir[pivot_col_of_row[r]] = -a[r][col];
    out.null_basis.push_back(std::move(dir));
  }
  return out;
}

// A point of {z0 + N t : 0 <= . <= 1}, or nullopt. Exact feasibility LP.
std::optional<std::vector<Rat>> stationary_point_in_box(
    const std::vector<Rat>& z0, const std::vector<std::vector<Rat>>& null_basis) {
  const int d = static_cast<int>(z0.size());
  const int k = static_cast<int>(null_basis.size());
  if (k == 0) {
    for (const auto& v : z0)
      if (v < 0 || v > 1) return std::nullopt;
    return z0;
  }
  LPProblem lp;
  lp.num_vars = k;
  lp.objective.assign(k, Rat(0));
  for (int j = 0; j < k; ++j) lp.bound_overrides.push_back({j, VarBounds::free_var()});
  for (int i = 0; i < d; ++i) {
    LPConstraint lo, hi;
    for (int j = 0; j < k; ++j) {
      if (null_basis[j][i] == 0) continue;
      lo.terms.emplace_back(j, null_basis[j][i]);
      hi.terms.emplace_back(j, null_basis[j][i]);
    }
    lo.rel = Rel::Ge;
    lo.rhs = -z0[i];
    hi.rel = Rel::Le;
    hi.rhs = Rat(1) - z0[i];
    lp.rows.push_back(std::move(lo));
    lp.rows.push_back(std::move(hi));
  }
  LPSolution sol = solve_lp(lp, LPMode::ExactRational);
  if (sol.status != LPStatus::Optimal) return std::nullopt;
  std::vector<Rat> z = z0;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < d; ++i) z[i] += null_basis[j][i] * sol.primal[j];
  return z;
}

}  // namespace

BoxMaxResult maximize_over_box(const QuadraticForm& q) {
  const int n = q.dim();
  if (n > 6) throw std::invalid_argument("box maximization limited to 6 variables");
  if (n == 0) return {q.constant(), {}, false};

  BoxMaxResult best{Rat(0), {}, false};
  bool have = false;

  long faces = 1;
  for (int i = 0; i < n; ++i) faces *= 3;
  std::vector<int> trit(n);
  for (long code = 0; code < faces; ++code) {
    long c = code;
    std::vector<int> free_idx;
    for (int i = 0; i < n; ++i) {
      trit[i] = static_cast<int>(c % 3);
      c /= 3;
      if (trit[i] == 2) free_idx.push_back(i);
    }
    const int d = static_cast<int>(free_idx.size());

    std::vector<Rat> x(n, Rat(0));
    for (int i = 0; i < n; ++i)
      if (trit[i] == 1) x[i] = 1;

    bool singular_face = false;
    if (d == 0) {
      // Corner.
    } else {
      // Stationary system of the restricted quadratic:
      //   2 A_ff z = -(b_f + 2 A_fp x_p)
      std::vector<std::vector<Rat>> a(d, std::vector<Rat>(d, Rat(0)));
      std::vector<Rat> rhs(d, Rat(0));
      for (int r = 0; r < d; ++r) {
        int i = free_idx[r];
        for (int s = 0; s < d; ++s) a[r][s] = 2 * q.quad(i, free_idx[s]);
        Rat acc = q.lin(i);
        for (int j = 0; j < n; ++j)
          if (trit[j] == 1) acc += 2 * q.quad(i, j);
        rhs[r] = -acc;
      }
      LinSolve ls = solve_linear(std::move(a), std::move(rhs));
      if (!ls.consistent) continue;
      if (ls.null_basis.empty()) {
        bool inside = true;
        for (const auto& v : ls.particular)
          if (v < 0 || v > 1) {
            inside = false;
            break;
          }
        if (!inside) continue;
        for (int r = 0; r < d; ++r) x[free_idx[r]] = ls.particular[r];
      } else {
        auto pt = stationary_point_in_box(ls.particular, ls.null_basis);
        if (!pt) continue;
        for (int r = 0; r < d; ++r) x[free_idx[r]] = (*pt)[r];
        singular_face = true;
      }
    }

    Rat value = q.eval(x);
    if (!have || value > best.value) {
      best.value = value;
      best.argmax = x;
      best.degenerate = singular_face;
      have = true;
    } else if (value == best.value && singular_face) {
      best.degenerate = true;
    }
  }
  return best;
}

}  // namespace dicut
