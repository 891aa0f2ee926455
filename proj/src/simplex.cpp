#include "dicut/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <cstdlib>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dicut {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

VarBounds LPProblem::bounds_of(int j) const {
  for (const auto& [idx, vb] : bound_overrides)
    if (idx == j) return vb;
  return VarBounds::nonneg();
}

void LPProblem::validate() const {
  if (static_cast<int>(objective.size()) != num_vars)
    throw std::invalid_argument("objective length != num_vars");
  for (const auto& row : rows)
    for (const auto& [j, coef] : row.terms)
      if (j < 0 || j >= num_vars) throw std::invalid_argument("row references bad variable");
  for (const auto& [j, vb] : bound_overrides) {
    if (j < 0 || j >= num_vars) throw std::invalid_argument("bound override on bad variable");
    if (vb.lo && vb.hi && *vb.lo > *vb.hi)
      throw std::invalid_argument("empty variable bound interval");
  }
}

std::string LPProblem::dump(const std::vector<std::string>& var_names) const {
  auto name = [&](int j) {
    if (j < static_cast<int>(var_names.size())) return var_names[j];
    return "x" + std::to_string(j);
  };
  std::ostringstream os;
  os << "min";
  for (int j = 0; j < num_vars; ++j)
    if (objective[j] != 0) os << " + " << rat_to_string(objective[j]) << "*" << name(j);
  os << "\n";
  for (const auto& row : rows) {
    bool first = true;
    for (const auto& [j, coef] : row.terms) {
      os << (first ? "  " : " + ") << rat_to_string(coef) << "*" << name(j);
      first = false;
    }
    os << (row.rel == Rel::Le ? " <= " : row.rel == Rel::Ge ? " >= " : " = ")
       << rat_to_string(row.rhs) << "\n";
  }
  for (int j = 0; j < num_vars; ++j) {
    VarBounds vb = bounds_of(j);
    os << "  " << (vb.lo ? rat_to_string(*vb.lo) : std::string("-inf")) << " <= " << name(j)
       << " <= " << (vb.hi ? rat_to_string(*vb.hi) : std::string("+inf")) << "\n";
  }
  return os.str();
}

// ===========================================================================
// Exact dense-tableau simplex (two phases, Bland's rule).
// ===========================================================================

namespace {

struct ExactForm {
  // min c.u + c0, A u = b, u >= 0, b >= 0.
  int ncols = 0;  // structural columns after the bound transformations
  std::vector<std::vector<Rat>> rows;  // coefficients, per row
  std::vector<Rat> rhs;
  std::vector<Rat> cost;
  Rat cost0 = Rat(0);
  std::vector<Rel> rel;       // per row, after sign normalization
  std::vector<int> row_sign;  // +1/-1 multiplier applied to the original row
  int num_orig_rows = 0;

  struct Back {
    int plus = -1, minus = -1;
    Rat shift = Rat(0);
    bool flip = false;  // x = shift - u[plus]
  };
  std::vector<Back> back;
};

ExactForm make_exact_form(const LPProblem& p) {
  ExactForm f;
  f.back.resize(p.num_vars);
  std::vector<std::pair<int, Rat>> upper_rows;  // (column, cap)
  for (int j = 0; j < p.num_vars; ++j) {
    VarBounds vb = p.bounds_of(j);
    auto& bk = f.back[j];
    if (vb.lo) {
      bk.plus = f.ncols++;
      bk.shift = *vb.lo;
      if (vb.hi) upper_rows.emplace_back(bk.plus, *vb.hi - *vb.lo);
    } else if (vb.hi) {
      bk.plus = f.ncols++;
      bk.shift = *vb.hi;
      bk.flip = true;
    } else {
      bk.plus = f.ncols++;
      bk.minus = f.ncols++;
    }
  }
  f.cost.assign(f.ncols, Rat(0));
  for (int j = 0; j < p.num_vars; ++j) {
    const auto& bk = f.back[j];
    const Rat& c = p.objective[j];
    f.cost0 += c * bk.shift;
    f.cost[bk.plus] += bk.flip ? Rat(-c) : c;
    if (bk.minus >= 0) f.cost[bk.minus] -= c;
  }
  f.num_orig_rows = static_cast<int>(p.rows.size());
  for (const auto& row : p.rows) {
    std::vector<Rat> coef(f.ncols, Rat(0));
    Rat rhs = row.rhs;
    for (const auto& [j, a] : row.terms) {
      const auto& bk = f.back[j];
      rhs -= a * bk.shift;
      coef[bk.plus] += bk.flip ? Rat(-a) : a;
      if (bk.minus >= 0) coef[bk.minus] -= a;
    }
    Rel rel = row.rel;
    int sign = 1;
    if (rhs < 0) {
      for (auto& x : coef) x = -x;
      rhs = -rhs;
      sign = -1;
      rel = rel == Rel::Le ? Rel::Ge : rel == Rel::Ge ? Rel::Le : Rel::Eq;
    }
    f.rows.push_back(std::move(coef));
    f.rhs.push_back(std::move(rhs));
    f.rel.push_back(rel);
    f.row_sign.push_back(sign);
  }
  for (const auto& [col, cap] : upper_rows) {
    if (cap < 0) {
      // empty box; validate() rejects this earlier, keep a guard
      throw std::invalid_argument("empty variable bound interval");
    }
    std::vector<Rat> coef(f.ncols, Rat(0));
    coef[col] = 1;
    f.rows.push_back(std::move(coef));
    f.rhs.push_back(cap);
    f.rel.push_back(Rel::Le);
    f.row_sign.push_back(1);
  }
  return f;
}

// Full-tableau two-phase simplex over the rationals, Bland pivoting.
class ExactSimplex {
 public:
  explicit ExactSimplex(ExactForm f) : f_(std::move(f)) {
    m_ = static_cast<int>(f_.rows.size());
    n_struct_ = f_.ncols;
    // Column layout: structurals | slack/surplus | artificials.
    for (int i = 0; i < m_; ++i)
      if (f_.rel[i] != Rel::Eq) slack_col_.push_back(n_struct_ + static_cast<int>(slack_col_.size()));
    n_slack_ = static_cast<int>(slack_col_.size());
    int next_art = n_struct_ + n_slack_;
    art_col_.assign(m_, -1);
    row_slack_.assign(m_, -1);
    int s = 0;
    for (int i = 0; i < m_; ++i) {
      if (f_.rel[i] != Rel::Eq) row_slack_[i] = n_struct_ + s++;
      if (f_.rel[i] != Rel::Le) art_col_[i] = next_art++;
    }
    ncols_ = next_art;
    tab_.assign(m_, std::vector<Rat>(ncols_ + 1, Rat(0)));
    basis_.assign(m_, -1);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_struct_; ++j) tab_[i][j] = f_.rows[i][j];
      if (row_slack_[i] >= 0) tab_[i][row_slack_[i]] = f_.rel[i] == Rel::Le ? 1 : -1;
      if (art_col_[i] >= 0) tab_[i][art_col_[i]] = 1;
      tab_[i][ncols_] = f_.rhs[i];
      basis_[i] = art_col_[i] >= 0 ? art_col_[i] : row_slack_[i];
    }
  }

  LPStatus run() {
    // Phase 1: minimize the sum of artificials.
    std::vector<Rat> phase1(ncols_ + 1, Rat(0));
    bool any_art = false;
    for (int i = 0; i < m_; ++i)
      if (art_col_[i] >= 0) {
        phase1[art_col_[i]] = 1;
        any_art = true;
      }
    if (any_art) {
      set_cost_row(phase1);
      pivot_loop(/*block_artificials=*/false);
      if (obj_val_ != 0) return LPStatus::Infeasible;
      purge_artificials();
    }
    std::vector<Rat> phase2(ncols_ + 1, Rat(0));
    for (int j = 0; j < n_struct_; ++j) phase2[j] = f_.cost[j];
    set_cost_row(phase2);
    bool bounded = pivot_loop(/*block_artificials=*/true);
    return bounded ? LPStatus::Optimal : LPStatus::Unbounded;
  }

  Rat objective() const { return obj_val_ + f_.cost0; }

  std::vector<Rat> primal_original(const LPProblem& p) const {
    std::vector<Rat> u(ncols_, Rat(0));
    for (int i = 0; i < m_; ++i) u[basis_[i]] = tab_[i][ncols_];
    std::vector<Rat> x(p.num_vars, Rat(0));
    for (int j = 0; j < p.num_vars; ++j) {
      const auto& bk = f_.back[j];
      Rat v = bk.flip ? Rat(bk.shift - u[bk.plus]) : Rat(bk.shift + u[bk.plus]);
      if (bk.minus >= 0) v -= u[bk.minus];
      x[j] = v;
    }
    return x;
  }

  // y_i read off the final cost row: d(slack_i) = -y_i for +1 slacks,
  // d(surplus_i) = +y_i, d(artificial_i) = -y_i.
  std::vector<Rat> duals_original() const {
    std::vector<Rat> y(f_.num_orig_rows, Rat(0));
    for (int i = 0; i < f_.num_orig_rows; ++i) {
      Rat yi(0);
      if (art_col_[i] >= 0)
        yi = -cost_row_[art_col_[i]];
      else if (f_.rel[i] == Rel::Le)
        yi = -cost_row_[row_slack_[i]];
      else
        yi = cost_row_[row_slack_[i]];
      y[i] = f_.row_sign[i] * yi;
    }
    return y;
  }

  const std::vector<int>& basis() const { return basis_; }

 private:
  void set_cost_row(const std::vector<Rat>& c) {
    cost_ = c;
    cost_row_ = c;
    obj_val_ = 0;
    for (int i = 0; i < m_; ++i) {
      const Rat& cb = cost_[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= ncols_; ++j) cost_row_[j] -= cb * tab_[i][j];
    }
    obj_val_ = -cost_row_[ncols_];
    cost_row_[ncols_] = 0;
  }

  // Returns false when unbounded.
  bool pivot_loop(bool block_artificials) {
    for (;;) {
      int q = -1;  // Bland: smallest eligible column index
      for (int j = 0; j < ncols_; ++j) {
        if (block_artificials && j >= n_struct_ + n_slack_) break;
        if (cost_row_[j] < 0) {
          q = j;
          break;
        }
      }
      if (q < 0) return true;
      int r = -1;
      Rat best_ratio(0);
      for (int i = 0; i < m_; ++i) {
        if (tab_[i][q] <= 0) continue;
        Rat ratio = tab_[i][ncols_] / tab_[i][q];
        if (r < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[r])) {
          r = i;
          best_ratio = ratio;
        }
      }
      if (r < 0) return false;
      pivot(r, q);
    }
  }

  void pivot(int r, int q) {
    Rat piv = tab_[r][q];
    for (int j = 0; j <= ncols_; ++j) tab_[r][j] /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || tab_[i][q] == 0) continue;
      Rat factor = tab_[i][q];
      for (int j = 0; j <= ncols_; ++j) tab_[i][j] -= factor * tab_[r][j];
    }
    if (cost_row_[q] != 0) {
      Rat factor = cost_row_[q];
      for (int j = 0; j < ncols_; ++j) cost_row_[j] -= factor * tab_[r][j];
      obj_val_ += factor * tab_[r][ncols_];
    }
    basis_[r] = q;
  }

  // After phase 1: pivot basic artificials out on any usable column, or drop
  // redundant rows.
  void purge_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_struct_ + n_slack_) continue;
      int q = -1;
      for (int j = 0; j < n_struct_ + n_slack_; ++j)
        if (tab_[i][j] != 0) {
          q = j;
          break;
        }
      if (q >= 0) {
        pivot(i, q);
      } else {
        // Redundant row: clear it; keep a harmless basic artificial at 0.
        // (The artificial is blocked from re-entering in phase 2.)
      }
    }
  }

  ExactForm f_;
  int m_ = 0, n_struct_ = 0, n_slack_ = 0, ncols_ = 0;
  std::vector<int> slack_col_, art_col_, row_slack_;
  std::vector<std::vector<Rat>> tab_;
  std::vector<Rat> cost_, cost_row_;
  Rat obj_val_ = Rat(0);
  std::vector<int> basis_;
};

LPSolution solve_exact(const LPProblem& p) {
  ExactSimplex engine(make_exact_form(p));
  LPSolution sol;
  sol.status = engine.run();
  if (sol.status != LPStatus::Optimal) return sol;
  sol.objective = engine.objective();
  sol.primal = engine.primal_original(p);
  sol.dual = engine.duals_original();
  sol.basis = engine.basis();
  return sol;
}

// ===========================================================================
// Float bounded-variable revised simplex with exact audit.
// ===========================================================================

enum class VStat : uint8_t { Basic, AtLower, AtUpper, FreeZero };

struct FloatForm {
  int m = 0;
  int n = 0;  // structurals | logicals | artificials
  int n_struct = 0;
  std::vector<std::vector<std::pair<int, double>>> cols;
  std::vector<std::vector<std::pair<int, Rat>>> cols_exact;
  std::vector<double> lo, hi, cost;
  std::vector<std::optional<Rat>> lo_exact, hi_exact;
  std::vector<Rat> cost_exact;
  std::vector<double> b;
  std::vector<Rat> b_exact;
};

FloatForm make_float_form(const LPProblem& p) {
  FloatForm f;
  f.m = static_cast<int>(p.rows.size());
  f.n_struct = p.num_vars;
  auto add_col = [&](std::vector<std::pair<int, Rat>> entries, std::optional<Rat> lo,
                     std::optional<Rat> hi, Rat cost) {
    std::vector<std::pair<int, double>> dentries;
    dentries.reserve(entries.size());
    for (const auto& [i, a] : entries) dentries.emplace_back(i, rat_to_double(a));
    f.cols.push_back(std::move(dentries));
    f.cols_exact.push_back(std::move(entries));
    f.lo.push_back(lo ? rat_to_double(*lo) : -kInf);
    f.hi.push_back(hi ? rat_to_double(*hi) : kInf);
    f.lo_exact.push_back(std::move(lo));
    f.hi_exact.push_back(std::move(hi));
    f.cost.push_back(rat_to_double(cost));
    f.cost_exact.push_back(std::move(cost));
    return static_cast<int>(f.cols.size()) - 1;
  };
  // Structural columns.
  std::vector<std::vector<std::pair<int, Rat>>> col_entries(p.num_vars);
  for (int i = 0; i < f.m; ++i) {
    std::map<int, Rat> acc;
    for (const auto& [j, a] : p.rows[i].terms) acc[j] += a;
    for (const auto& [j, a] : acc)
      if (a != 0) col_entries[j].emplace_back(i, a);
  }
  for (int j = 0; j < p.num_vars; ++j) {
    VarBounds vb = p.bounds_of(j);
    add_col(std::move(col_entries[j]), vb.lo, vb.hi, p.objective[j]);
  }
  // Logical column per inequality row.
  for (int i = 0; i < f.m; ++i) {
    f.b.push_back(rat_to_double(p.rows[i].rhs));
    f.b_exact.push_back(p.rows[i].rhs);
    if (p.rows[i].rel == Rel::Le)
      add_col({{i, Rat(1)}}, Rat(0), std::nullopt, Rat(0));
    else if (p.rows[i].rel == Rel::Ge)
      add_col({{i, Rat(1)}}, std::nullopt, Rat(0), Rat(0));
  }
  f.n = static_cast<int>(f.cols.size());
  return f;
}

class RevisedSimplex {
 public:
  explicit RevisedSimplex(FloatForm f) : f_(std::move(f)) {}

  LPStatus run() {
    setup();
    // Phase 1: artificial cost vector.
    if (num_artificial_ > 0) {
      phase1_ = true;
      if (!main_loop()) throw std::runtime_error("phase 1 unbounded (cannot happen)");
      if (objective() > 1e-7 * (1.0 + norm_b_))
        return LPStatus::Infeasible;
      // Freeze artificials at zero for phase 2.
      for (int j = artificial_begin_; j < f_.n; ++j) {
        f_.lo[j] = 0;
        f_.hi[j] = 0;
        f_.lo_exact[j] = Rat(0);
        f_.hi_exact[j] = Rat(0);
      }
    }
    phase1_ = false;
    if (!main_loop()) return LPStatus::Unbounded;
    return LPStatus::Optimal;
  }

  // Re-enter optimization after the exact audit found a violated column.
  bool resume() { return main_loop(); }

  double objective() const {
    double z = 0;
    for (int k = 0; k < f_.m; ++k) z += cost(basis_[k]) * xb_[k];
    for (int j = 0; j < f_.n; ++j)
      if (vstat_[j] != VStat::Basic) z += cost(j) * nonbasic_value(j);
    return z;
  }

  const std::vector<int>& basis() const { return basis_; }
  const std::vector<double>& xb() const { return xb_; }
  const std::vector<double>& binv() const { return binv_; }
  VStat vstat(int j) const { return vstat_[j]; }
  const FloatForm& form() const { return f_; }

  double nonbasic_value(int j) const {
    switch (vstat_[j]) {
      case VStat::AtLower:
        return f_.lo[j];
      case VStat::AtUpper:
        return f_.hi[j];
      default:
        return 0.0;
    }
  }

  std::vector<double> dual_y() const {
    std::vector<double> y(f_.m, 0.0);
    for (int i = 0; i < f_.m; ++i) {
      double cb = cost(basis_[i]);
      if (cb == 0) continue;
      const double* row = &binv_[static_cast<size_t>(i) * f_.m];
      for (int k = 0; k < f_.m; ++k) y[k] += cb * row[k];
    }
    return y;
  }

 private:
  double cost_base(int j) const {
    return phase1_ ? (j >= artificial_begin_ ? 1.0 : 0.0) : f_.cost[j];
  }
  double cost(int j) const {
    double base = cost_base(j);
    return perturbed_ ? base + pert_[j] : base;
  }

  // Deterministic cost perturbation: breaks the reduced-cost ties behind
  // long degenerate plateaus. The final basis is re-verified against the
  // true costs (pricing after the perturbation is lifted, plus the exact
  // audit), so this never changes the reported optimum.
  void apply_perturbation() {
    std::uniform_real_distribution<double> u(0.5, 1.5);
    pert_.assign(f_.n, 0.0);
    for (int j = 0; j < f_.n; ++j) pert_[j] = 1e-8 * (1.0 + std::abs(cost_base(j))) * u(rng_);
    perturbed_ = true;
  }

  void setup() {
    vstat_.assign(f_.n, VStat::AtLower);
    for (int j = 0; j < f_.n; ++j) {
      if (f_.lo[j] > -kInf)
        vstat_[j] = VStat::AtLower;
      else if (f_.hi[j] < kInf)
        vstat_[j] = VStat::AtUpper;
      else
        vstat_[j] = VStat::FreeZero;
    }
    norm_b_ = 0;
    std::vector<double> r = f_.b;
    for (double v : f_.b) norm_b_ = std::max(norm_b_, std::abs(v));
    for (int j = 0; j < f_.n; ++j) {
      double xv = nonbasic_value(j);
      if (xv == 0) continue;
      for (const auto& [i, a] : f_.cols[j]) r[i] -= a * xv;
    }
    // Try to host each row's residual in its logical; otherwise add an
    // artificial column.
    basis_.assign(f_.m, -1);
    xb_.assign(f_.m, 0.0);
    artificial_begin_ = f_.n;
    num_artificial_ = 0;
    std::vector<int> logical_of(f_.m, -1);
    for (int j = f_.n_struct; j < f_.n; ++j) logical_of[f_.cols[j][0].first] = j;
    for (int i = 0; i < f_.m; ++i) {
      int lg = logical_of[i];
      bool ok = false;
      if (lg >= 0) {
        double v = r[i];  // logical coefficient is +1
        if (v >= f_.lo[lg] - 1e-12 && v <= f_.hi[lg] + 1e-12) {
          basis_[i] = lg;
          xb_[i] = v;
          vstat_[lg] = VStat::Basic;
          ok = true;
        }
      }
      if (!ok) {
        double sign = r[i] >= 0 ? 1.0 : -1.0;
        f_.cols.push_back({{i, sign}});
        f_.cols_exact.push_back({{i, Rat(sign)}});
        f_.lo.push_back(0);
        f_.hi.push_back(kInf);
        f_.lo_exact.push_back(Rat(0));
        f_.hi_exact.push_back(std::nullopt);
        f_.cost.push_back(0);
        f_.cost_exact.push_back(Rat(0));
        int aj = static_cast<int>(f_.cols.size()) - 1;
        vstat_.push_back(VStat::Basic);
        basis_[i] = aj;
        xb_[i] = std::abs(r[i]);
        ++num_artificial_;
      }
    }
    f_.n = static_cast<int>(f_.cols.size());
    // Initial basis matrix is diagonal (+-1): invert directly.
    binv_.assign(static_cast<size_t>(f_.m) * f_.m, 0.0);
    for (int i = 0; i < f_.m; ++i) {
      double diag = f_.cols[basis_[i]][0].second;
      binv_[static_cast<size_t>(i) * f_.m + i] = 1.0 / diag;
    }
    in_basis_pos_.assign(f_.n, -1);
    for (int i = 0; i < f_.m; ++i) in_basis_pos_[basis_[i]] = i;
    updates_since_refactor_ = 0;
    price_block_ = 0;
  }

  // Dantzig pricing over rotating blocks; full sweep before declaring
  // optimality. Returns -1 when no eligible column exists.
  int price(const std::vector<double>& y, double* dq_out) {
    const int nblocks = 16;
    int block_size = (f_.n + nblocks - 1) / nblocks;
    int best = -1;
    double best_score = SimplexTolerances::kReducedCost;
    for (int pass = 0; pass < nblocks; ++pass) {
      int blk = (price_block_ + pass) % nblocks;
      int begin = blk * block_size, end = std::min(f_.n, begin + block_size);
      for (int j = begin; j < end; ++j) {
        if (vstat_[j] == VStat::Basic || banned_[j]) continue;
        if (f_.lo[j] == f_.hi[j]) continue;  // fixed
        double d = cost(j);
        for (const auto& [i, a] : f_.cols[j]) d -= y[i] * a;
        double score = 0;
        if (vstat_[j] == VStat::AtLower && d < -SimplexTolerances::kReducedCost)
          score = -d;
        else if (vstat_[j] == VStat::AtUpper && d > SimplexTolerances::kReducedCost)
          score = d;
        else if (vstat_[j] == VStat::FreeZero && std::abs(d) > SimplexTolerances::kReducedCost)
          score = std::abs(d);
        if (score > best_score) {
          best_score = score;
          best = j;
          *dq_out = d;
        }
      }
      if (best >= 0 && pass >= 1) break;  // best of at least two blocks
    }
    if (best >= 0) price_block_ = (price_block_ + 1) % nblocks;
    return best;
  }

  int price_bland(const std::vector<double>& y, double* dq_out) {
    for (int j = 0; j < f_.n; ++j) {
      if (vstat_[j] == VStat::Basic || banned_[j] || f_.lo[j] == f_.hi[j]) continue;
      double d = cost(j);
      for (const auto& [i, a] : f_.cols[j]) d -= y[i] * a;
      bool elig = (vstat_[j] == VStat::AtLower && d < -SimplexTolerances::kReducedCost) ||
                  (vstat_[j] == VStat::AtUpper && d > SimplexTolerances::kReducedCost) ||
                  (vstat_[j] == VStat::FreeZero && std::abs(d) > SimplexTolerances::kReducedCost);
      if (elig) {
        *dq_out = d;
        return j;
      }
    }
    return -1;
  }

  std::vector<double> ftran(int col) const {
    std::vector<double> w(f_.m, 0.0);
    for (const auto& [i, a] : f_.cols[col])
      for (int k = 0; k < f_.m; ++k) w[k] += binv_[static_cast<size_t>(k) * f_.m + i] * a;
    return w;
  }

  struct RatioPick {
    double t = kInf;
    int leave = -1;    // basis position, -1 = entering bound flip
    int leave_to = 0;  // -1 lower, +1 upper
  };

  // Bounded-variable ratio test. Rows whose pivot magnitude is below
  // min_pivot are ignored (their bound drift is cleaned up by refactoring
  // and the exact audit).
  RatioPick ratio_test(int q, double sigma, const std::vector<double>& w, bool bland,
                       double min_pivot) const {
    RatioPick pick;
    if (f_.lo[q] > -kInf && f_.hi[q] < kInf) pick.t = f_.hi[q] - f_.lo[q];  // bound flip
    for (int k = 0; k < f_.m; ++k) {
      double dir = sigma * w[k];
      if (std::abs(dir) < min_pivot) continue;
      int bk = basis_[k];
      double t;
      int to;
      if (dir > 0) {
        if (f_.lo[bk] <= -kInf) continue;
        t = (xb_[k] - f_.lo[bk]) / dir;
        to = -1;
      } else {
        if (f_.hi[bk] >= kInf) continue;
        t = (f_.hi[bk] - xb_[k]) / (-dir);
        to = +1;
      }
      if (t < 0) t = 0;  // tolerate tiny infeasibility
      if (t < pick.t - 1e-12 ||
          (t < pick.t + 1e-12 &&
           (pick.leave < 0 || (bland ? basis_[k] < basis_[pick.leave]
                                     : std::abs(w[k]) > std::abs(w[pick.leave]))))) {
        pick.t = t;
        pick.leave = k;
        pick.leave_to = to;
      }
    }
    return pick;
  }

  // Returns false on unbounded.
  bool main_loop() {
    int stall = 0;
    bool bland = false;
    double best_obj = kInf;
    banned_.assign(f_.n, 0);
    num_banned_ = 0;
    const bool verbose = std::getenv("DICUT_LP_VERBOSE") != nullptr;
    for (long iter = 0;; ++iter) {
      if (iter > 2000000) throw std::runtime_error("simplex iteration limit exceeded");
      if (verbose && iter % 20000 == 0 && iter > 0)
        std::fprintf(stderr, "[lp] phase%d iter=%ld obj=%.12g stall=%d bland=%d\n",
                     phase1_ ? 1 : 2, iter, objective(), stall, bland ? 1 : 0);
      std::vector<double> y = dual_y();
      double dq = 0;
      int q = bland ? price_bland(y, &dq) : price(y, &dq);
      if (q < 0) {
        if (num_banned_ > 0) {
          banned_.assign(f_.n, 0);
          num_banned_ = 0;
          continue;  // re-price with the bans lifted
        }
        if (perturbed_) {
          perturbed_ = false;  // optimal for the perturbed costs; re-price true ones
          stall = 0;
          bland = false;
          best_obj = kInf;
          continue;
        }
        return true;
      }

      // Direction: sigma = +1 when the entering variable increases.
      double sigma = (vstat_[q] == VStat::AtUpper) ? -1.0 : (dq < 0 ? 1.0 : -1.0);
      std::vector<double> w = ftran(q);
      RatioPick pick = ratio_test(q, sigma, w, bland, SimplexTolerances::kPivot);
      if (pick.leave >= 0 && std::abs(w[pick.leave]) < 1e-7 && updates_since_refactor_ > 0) {
        // Suspicious pivot: refresh the factorization and retry once.
        refactor();
        w = ftran(q);
        pick = ratio_test(q, sigma, w, bland, SimplexTolerances::kPivot);
      }
      if (pick.t == kInf) {
        // No limiting row above the pivot threshold; allow smaller pivots
        // before declaring the problem unbounded.
        pick = ratio_test(q, sigma, w, bland, 1e-12);
        if (pick.t == kInf) {
          if (phase1_) throw std::runtime_error("phase-1 unbounded");
          return false;
        }
      }
      if (pick.leave >= 0 && std::abs(w[pick.leave]) < 1e-11) {
        banned_[q] = 1;  // numerically hopeless column this round
        ++num_banned_;
        continue;
      }

      if (pick.leave < 0) {
        // Bound flip of the entering variable.
        for (int k = 0; k < f_.m; ++k) xb_[k] -= sigma * pick.t * w[k];
        vstat_[q] = vstat_[q] == VStat::AtLower ? VStat::AtUpper : VStat::AtLower;
      } else {
        int leave = pick.leave;
        double enter_val = nonbasic_value(q) + sigma * pick.t;
        for (int k = 0; k < f_.m; ++k) xb_[k] -= sigma * pick.t * w[k];
        int out = basis_[leave];
        vstat_[out] = pick.leave_to < 0 ? VStat::AtLower : VStat::AtUpper;
        if (f_.lo[out] <= -kInf && f_.hi[out] >= kInf) vstat_[out] = VStat::FreeZero;
        in_basis_pos_[out] = -1;
        basis_[leave] = q;
        in_basis_pos_[q] = leave;
        vstat_[q] = VStat::Basic;
        xb_[leave] = enter_val;
        update_binv(leave, w);
        if (++updates_since_refactor_ >= 500) refactor();
      }
      if (num_banned_ > 0) {
        banned_.assign(f_.n, 0);
        num_banned_ = 0;
      }

      double z = objective();
      if (z < best_obj - 1e-13 * (1.0 + std::abs(best_obj))) {
        best_obj = z;
        stall = 0;
        bland = false;
      } else {
        ++stall;
        if (stall == 400) bland = true;
        if (stall >= 2000 && stall % 2000 == 0) {
          apply_perturbation();  // escalate with a fresh draw each round
          bland = false;
          best_obj = kInf;
        }
      }
    }
  }

  void update_binv(int r, const std::vector<double>& w) {
    double piv = w[r];
    if (std::abs(piv) < 1e-13) {
      refactor();
      return;
    }
    double* rowr = &binv_[static_cast<size_t>(r) * f_.m];
    double inv = 1.0 / piv;
    for (int k = 0; k < f_.m; ++k) rowr[k] *= inv;
    for (int i = 0; i < f_.m; ++i) {
      if (i == r || w[i] == 0) continue;
      double* rowi = &binv_[static_cast<size_t>(i) * f_.m];
      double factor = w[i];
      for (int k = 0; k < f_.m; ++k) rowi[k] -= factor * rowr[k];
    }
  }

  void refactor() {
    const int m = f_.m;
    std::vector<double> B(static_cast<size_t>(m) * m, 0.0);
    for (int k = 0; k < m; ++k)
      for (const auto& [i, a] : f_.cols[basis_[k]]) B[static_cast<size_t>(i) * m + k] = a;
    // Gauss-Jordan inversion with partial pivoting.
    std::vector<double> inv(static_cast<size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) inv[static_cast<size_t>(i) * m + i] = 1.0;
    for (int col = 0; col < m; ++col) {
      int piv = col;
      double best = std::abs(B[static_cast<size_t>(col) * m + col]);
      for (int i = col + 1; i < m; ++i) {
        double v = std::abs(B[static_cast<size_t>(i) * m + col]);
        if (v > best) {
          best = v;
          piv = i;
        }
      }
      if (best < 1e-13) {
        std::map<int, int> seen;
        for (int k = 0; k < m; ++k) ++seen[basis_[k]];
        int dups = 0;
        for (const auto& [c, cnt] : seen)
          if (cnt > 1) dups += cnt - 1;
        throw std::runtime_error("numeric degeneracy: singular basis (col " +
                                 std::to_string(col) + "/" + std::to_string(m) +
                                 ", duplicate basic columns: " + std::to_string(dups) + ")");
      }
      if (piv != col) {
        for (int k = 0; k < m; ++k) {
          std::swap(B[static_cast<size_t>(piv) * m + k], B[static_cast<size_t>(col) * m + k]);
          std::swap(inv[static_cast<size_t>(piv) * m + k], inv[static_cast<size_t>(col) * m + k]);
        }
      }
      double d = 1.0 / B[static_cast<size_t>(col) * m + col];
      for (int k = 0; k < m; ++k) {
        B[static_cast<size_t>(col) * m + k] *= d;
        inv[static_cast<size_t>(col) * m + k] *= d;
      }
      for (int i = 0; i < m; ++i) {
        if (i == col) continue;
        double factor = B[static_cast<size_t>(i) * m + col];
        if (factor == 0) continue;
        for (int k = 0; k < m; ++k) {
          B[static_cast<size_t>(i) * m + k] -= factor * B[static_cast<size_t>(col) * m + k];
          inv[static_cast<size_t>(i) * m + k] -= factor * inv[static_cast<size_t>(col) * m + k];
        }
      }
    }
    binv_ = std::move(inv);
    // Recompute basic values from scratch.
    std::vector<double> r = f_.b;
    for (int j = 0; j < f_.n; ++j) {
      if (vstat_[j] == VStat::Basic) continue;
      double xv = nonbasic_value(j);
      if (xv == 0) continue;
      for (const auto& [i, a] : f_.cols[j]) r[i] -= a * xv;
    }
    for (int k = 0; k < f_.m; ++k) {
      double v = 0;
      const double* row = &binv_[static_cast<size_t>(k) * f_.m];
      for (int i = 0; i < f_.m; ++i) v += row[i] * r[i];
      xb_[k] = v;
    }
    updates_since_refactor_ = 0;
  }

  FloatForm f_;
  bool phase1_ = false;
  int num_artificial_ = 0;
  int artificial_begin_ = 0;
  double norm_b_ = 0;
  std::vector<VStat> vstat_;
  std::vector<int> basis_;
  std::vector<int> in_basis_pos_;
  std::vector<double> xb_;
  std::vector<double> binv_;
  std::vector<char> banned_;
  int num_banned_ = 0;
  long updates_since_refactor_ = 0;
  int price_block_ = 0;
  std::vector<double> pert_;
  bool perturbed_ = false;
  std::mt19937_64 rng_{0x5eed5eedULL};  // fixed seed: solves stay deterministic
};

// Exact audit + polish of the float solution; may resume the solver when the
// final basis is exactly suboptimal beyond 1e-9.
LPSolution audit_and_finish(RevisedSimplex& engine, const LPProblem& p) {
  LPSolution sol;
  sol.status = LPStatus::Optimal;
  const Rat resume_threshold = rat_from_double(1e-9);
  FloatAudit audit;

  for (int round = 0;; ++round) {
    const FloatForm& f = engine.form();
    const int m = f.m, n = f.n;
    const auto& basis = engine.basis();
    const auto& binv = engine.binv();

    // Exact nonbasic values; basic values refined below.
    std::vector<Rat> x(n, Rat(0));
    for (int j = 0; j < n; ++j) {
      if (engine.vstat(j) == VStat::Basic) continue;
      x[j] = rat_from_double(engine.nonbasic_value(j));
    }
    for (int k = 0; k < m; ++k) x[basis[k]] = rat_from_double(engine.xb()[k]);

    // Iterative refinement of B x_B = b - N x_N with exact residuals.
    Rat max_resid(0);
    for (int round_ref = 0; round_ref < 4; ++round_ref) {
      std::vector<Rat> r(f.b_exact);
      for (int j = 0; j < n; ++j) {
        if (x[j] == 0) continue;
        for (const auto& [i, a] : f.cols_exact[j]) r[i] -= a * x[j];
      }
      max_resid = 0;
      for (const auto& v : r) max_resid = std::max(max_resid, rat_abs(v));
      if (round_ref == 3 || max_resid == 0) break;
      std::vector<double> rd(m);
      for (int i = 0; i < m; ++i) rd[i] = rat_to_double(r[i]);
      for (int k = 0; k < m; ++k) {
        double delta = 0;
        const double* row = &binv[static_cast<size_t>(k) * m];
        for (int i = 0; i < m; ++i) delta += row[i] * rd[i];
        if (delta != 0) x[basis[k]] += rat_from_double(delta);
      }
    }

    // Refine B^T y = c_B similarly.
    std::vector<double> y0 = engine.dual_y();
    std::vector<Rat> y(m);
    for (int i = 0; i < m; ++i) y[i] = rat_from_double(y0[i]);
    for (int round_ref = 0; round_ref < 4; ++round_ref) {
      std::vector<Rat> rd(m, Rat(0));
      bool clean = true;
      for (int k = 0; k < m; ++k) {
        Rat acc = f.cost_exact[basis[k]];
        for (const auto& [i, a] : f.cols_exact[basis[k]]) acc -= a * y[i];
        rd[k] = std::move(acc);
        if (rd[k] != 0) clean = false;
      }
      if (round_ref == 3 || clean) break;
      std::vector<double> rdd(m);
      for (int k = 0; k < m; ++k) rdd[k] = rat_to_double(rd[k]);
      for (int i = 0; i < m; ++i) {
        double delta = 0;
        for (int k = 0; k < m; ++k) delta += binv[static_cast<size_t>(k) * m + i] * rdd[k];
        if (delta != 0) y[i] += rat_from_double(delta);
      }
    }

    // Exact reduced costs over all columns; detect sign violations.
    Rat worst_violation(0);
    int violated_col = -1;
    for (int j = 0; j < n; ++j) {
      if (engine.vstat(j) == VStat::Basic) continue;
      if (f.lo_exact[j] && f.hi_exact[j] && *f.lo_exact[j] == *f.hi_exact[j]) continue;
      Rat d = f.cost_exact[j];
      for (const auto& [i, a] : f.cols_exact[j]) d -= a * y[i];
      Rat viol(0);
      switch (engine.vstat(j)) {
        case VStat::AtLower:
          if (d < 0) viol = -d;
          break;
        case VStat::AtUpper:
          if (d > 0) viol = d;
          break;
        default:
          viol = rat_abs(d);
      }
      if (viol > worst_violation) {
        worst_violation = viol;
        violated_col = j;
      }
    }

    if (violated_col >= 0 && worst_violation > resume_threshold && round < 10) {
      if (!engine.resume()) {
        sol.status = LPStatus::Unbounded;
        return sol;
      }
      continue;
    }

    // Final exact evaluations.
    Rat primal_obj(0);
    for (int j = 0; j < n; ++j)
      if (x[j] != 0) primal_obj += f.cost_exact[j] * x[j];
    Rat dual_obj(0);
    for (int i = 0; i < m; ++i) dual_obj += f.b_exact[i] * y[i];
    for (int j = 0; j < n; ++j) {
      if (engine.vstat(j) == VStat::Basic) continue;
      if (x[j] == 0) continue;
      Rat d = f.cost_exact[j];
      for (const auto& [i, a] : f.cols_exact[j]) d -= a * y[i];
      dual_obj += d * x[j];
    }
    Rat bound_violation(0);
    for (int k = 0; k < m; ++k) {
      int j = basis[k];
      if (f.lo_exact[j] && x[j] < *f.lo_exact[j])
        bound_violation = std::max(bound_violation, Rat(*f.lo_exact[j] - x[j]));
      if (f.hi_exact[j] && x[j] > *f.hi_exact[j])
        bound_violation = std::max(bound_violation, Rat(x[j] - *f.hi_exact[j]));
    }
    audit.max_primal_residual = rat_to_double(std::max(max_resid, bound_violation));
    audit.dual_violation = rat_to_double(worst_violation);
    audit.duality_gap = std::abs(rat_to_double(Rat(primal_obj - dual_obj)));
    audit.primal_objective = rat_to_double(primal_obj);
    audit.dual_objective = rat_to_double(dual_obj);
    audit.polish_rounds = round + 1;

    sol.objective = primal_obj;
    sol.primal.assign(x.begin(), x.begin() + f.n_struct);
    sol.dual = std::move(y);
    sol.basis = basis;
    sol.audit = audit;
    return sol;
  }
}

LPSolution solve_float(const LPProblem& p) {
  RevisedSimplex engine(make_float_form(p));
  LPStatus st = engine.run();
  if (st != LPStatus::Optimal) {
    LPSolution sol;
    sol.status = st;
    return sol;
  }
  return audit_and_finish(engine, p);
}

}  // namespace

LPSolution solve_lp(const LPProblem& p, LPMode mode) {
  p.validate();
  return mode == LPMode::ExactRational ? solve_exact(p) : solve_float(p);
}

LPProblem dual_of(const LPProblem& p) {
  p.validate();
  for (const auto& [j, vb] : p.bound_overrides) {
    bool nonneg = vb.lo && *vb.lo == 0 && !vb.hi;
    bool free_var = !vb.lo && !vb.hi;
    if (!nonneg && !free_var)
      throw std::invalid_argument("dual_of: only x >= 0 or free variables supported");
  }
  const int m = static_cast<int>(p.rows.size());
  LPProblem d;
  d.num_vars = m;
  d.objective.resize(m);
  for (int i = 0; i < m; ++i) d.objective[i] = -p.rows[i].rhs;  // min -b.y
  for (int i = 0; i < m; ++i) {
    switch (p.rows[i].rel) {
      case Rel::Ge:
        break;  // y_i >= 0, the default
      case Rel::Le:
        d.bound_overrides.push_back({i, VarBounds{std::nullopt, Rat(0)}});
        break;
      case Rel::Eq:
        d.bound_overrides.push_back({i, VarBounds::free_var()});
        break;
    }
  }
  // One dual row per primal variable: A^T y <= c (x >= 0) or = c (x free).
  std::vector<LPConstraint> rows(p.num_vars);
  for (int j = 0; j < p.num_vars; ++j) {
    VarBounds vb = p.bounds_of(j);
    rows[j].rel = (!vb.lo && !vb.hi) ? Rel::Eq : Rel::Le;
    rows[j].rhs = p.objective[j];
  }
  for (int i = 0; i < m; ++i)
    for (const auto& [j, a] : p.rows[i].terms) rows[j].terms.emplace_back(i, a);
  d.rows = std::move(rows);
  return d;
}

LPSolution solve_lp_via_dual(const LPProblem& p, LPMode mode) {
  LPProblem d = dual_of(p);
  LPSolution ds = solve_lp(d, mode);
  LPSolution sol;
  if (ds.status == LPStatus::Infeasible) {
    // Dual infeasible: primal is unbounded or infeasible; our callers' LPs
    // are bounded, so report the latter only when the primal has no point.
    sol.status = LPStatus::Unbounded;
    return sol;
  }
  if (ds.status == LPStatus::Unbounded) {
    sol.status = LPStatus::Infeasible;
    return sol;
  }
  sol.status = LPStatus::Optimal;
  sol.objective = -ds.objective;
  // Row j of the dual is the stationarity condition of primal variable j;
  // its multiplier is -x_j under this engine's sign convention.
  sol.primal.resize(p.num_vars);
  for (int j = 0; j < p.num_vars; ++j) sol.primal[j] = -ds.dual[j];
  // The dual's variables are the primal row multipliers.
  sol.dual = ds.primal;
  sol.basis = ds.basis;
  sol.audit = ds.audit;
  return sol;
}

}  // namespace dicut
