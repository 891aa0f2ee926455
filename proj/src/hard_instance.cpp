#include "dicut/hard_instance.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dicut {

std::vector<std::vector<Rat>> antisym_family_grid(const std::vector<Rat>& biases,
                                                  const Rat& step) {
  const int L = static_cast<int>(biases.size());
  if (step <= 0 || step > 1) throw std::invalid_argument("grid step must be in (0, 1]");
  for (int i = 1; i < L; ++i)
    if (biases[i] <= biases[i - 1]) throw std::invalid_argument("biases must be increasing");

  // Per class: fixed value, tied to a partner, or a free grid range.
  struct Slot {
    enum { Fixed, Tied, Grid } kind;
    Rat fixed;
    int partner = -1;
    std::vector<Rat> grid;
  };
  std::vector<Slot> slots(L);
  auto index_of = [&](const Rat& b) {
    for (int i = 0; i < L; ++i)
      if (biases[i] == b) return i;
    return -1;
  };
  auto make_grid = [&](const Rat& lo, const Rat& hi) {
    std::vector<Rat> g;
    for (Rat v = lo; v <= hi; v += step) g.push_back(v);
    if (g.empty() || g.back() != hi) g.push_back(hi);
    return g;
  };
  for (int i = 0; i < L; ++i) {
    if (biases[i] == 0) {
      slots[i] = {Slot::Fixed, Rat(1, 2), -1, {}};
    } else if (biases[i] > 0) {
      slots[i] = {Slot::Grid, Rat(0), -1, make_grid(Rat(1, 2), Rat(1))};
    } else {
      int partner = index_of(Rat(-biases[i]));
      if (partner >= 0)
        slots[i] = {Slot::Tied, Rat(0), partner, {}};
      else
        slots[i] = {Slot::Grid, Rat(0), -1, make_grid(Rat(0), Rat(1, 2))};
    }
  }

  size_t count = 1;
  for (const auto& s : slots)
    if (s.kind == Slot::Grid) {
      count *= s.grid.size();
      if (count > 2000000) throw std::invalid_argument("family grid too large");
    }

  std::vector<std::vector<Rat>> family;
  family.reserve(count);
  std::vector<size_t> pos;
  std::vector<int> grid_slots;
  for (int i = 0; i < L; ++i)
    if (slots[i].kind == Slot::Grid) grid_slots.push_back(i);
  pos.assign(grid_slots.size(), 0);
  for (;;) {
    std::vector<Rat> p(L, Rat(0));
    for (size_t gi = 0; gi < grid_slots.size(); ++gi)
      p[grid_slots[gi]] = slots[grid_slots[gi]].grid[pos[gi]];
    for (int i = 0; i < L; ++i) {
      if (slots[i].kind == Slot::Fixed) p[i] = slots[i].fixed;
      if (slots[i].kind == Slot::Tied) p[i] = Rat(1) - p[slots[i].partner];
    }
    family.push_back(std::move(p));
    size_t gi = 0;
    for (; gi < grid_slots.size(); ++gi) {
      if (++pos[gi] < slots[grid_slots[gi]].grid.size()) break;
      pos[gi] = 0;
    }
    if (gi == grid_slots.size()) break;
    if (grid_slots.empty()) break;
  }
  return family;
}

MinmaxLP build_minmax_lp(const HardInstanceSpec& spec) {
  const int L = static_cast<int>(spec.biases.size());
  if (L == 0) throw std::invalid_argument("need at least one bias class");
  if (spec.family.empty()) throw std::invalid_argument("need at least one algorithm");
  for (int i = 1; i < L; ++i)
    if (spec.biases[i] <= spec.biases[i - 1])
      throw std::invalid_argument("biases must be strictly increasing");
  for (const auto& p : spec.family) {
    if (static_cast<int>(p.size()) != L)
      throw std::invalid_argument("family vector length != L");
    for (const auto& v : p)
      if (v < 0 || v > 1) throw std::invalid_argument("family entries must lie in [0,1]");
  }

  MinmaxLP m;
  m.num_vertices = 2 * L;
  // vertex id: bit * L + i
  for (int u = 0; u < m.num_vertices; ++u)
    for (int v = 0; v < m.num_vertices; ++v)
      if (u != v) m.pairs.emplace_back(u, v);
  m.z_var = static_cast<int>(m.pairs.size());

  LPProblem& lp = m.lp;
  lp.num_vars = m.z_var + 1;
  lp.objective.assign(lp.num_vars, Rat(0));
  lp.objective[m.z_var] = 1;
  lp.bound_overrides.push_back({m.z_var, VarBounds::free_var()});

  auto class_of = [&](int vid) { return vid % L; };
  auto bit_of = [&](int vid) { return vid / L; };

  // One epigraph row per algorithm: sum p(i1)(1-p(i2)) w - z <= 0.
  for (const auto& p : spec.family) {
    LPConstraint row;
    row.rel = Rel::Le;
    row.rhs = 0;
    for (int j = 0; j < m.z_var; ++j) {
      auto [u, v] = m.pairs[j];
      Rat coef = p[class_of(u)] * (1 - p[class_of(v)]);
      if (coef != 0) row.terms.emplace_back(j, std::move(coef));
    }
    row.terms.emplace_back(m.z_var, Rat(-1));
    lp.rows.push_back(std::move(row));
  }
  // Cut normalization: edges from bit 1 to bit 0 carry weight exactly 1.
  m.cut_row = static_cast<int>(lp.rows.size());
  {
    LPConstraint row;
    row.rel = Rel::Eq;
    row.rhs = 1;
    for (int j = 0; j < m.z_var; ++j) {
      auto [u, v] = m.pairs[j];
      if (bit_of(u) == 1 && bit_of(v) == 0) row.terms.emplace_back(j, Rat(1));
    }
    lp.rows.push_back(std::move(row));
  }
  // Per-vertex bias equality: t_i (W+ + W-) = W+ - W-.
  for (int vid = 0; vid < m.num_vertices; ++vid) {
    const Rat& t = spec.biases[class_of(vid)];
    LPConstraint row;
    row.rel = Rel::Eq;
    row.rhs = 0;
    for (int j = 0; j < m.z_var; ++j) {
      auto [u, v] = m.pairs[j];
      Rat coef(0);
      if (u == vid) coef += 1 - t;
      if (v == vid) coef -= 1 + t;
      if (coef != 0) row.terms.emplace_back(j, std::move(coef));
    }
    lp.rows.push_back(std::move(row));
  }
  return m;
}

namespace {

Rat reconstruct_dyadic(const Rat& x) {
  // Continued-fraction rounding with a denominator cap; see ratio_lp.
  const mpz_class max_den(1000000000000L);
  if (x.get_den() <= max_den) return x;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class num = x.get_num(), den = x.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  while (den != 0) {
    mpz_class a = num / den;
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    mpz_class rem = num - a * den;
    num = den;
    den = rem;
  }
  Rat out(neg ? mpz_class(-p1) : p1, q1);
  out.canonicalize();
  return out;
}

}  // namespace

HardGraphResult find_hard_graph(const HardInstanceSpec& spec, LPMode mode) {
  MinmaxLP m = build_minmax_lp(spec);
  // Large families make the LP tall (one row per algorithm, few columns);
  // solve the explicit dual then, it has the transposed shape.
  bool tall = m.lp.rows.size() > static_cast<size_t>(m.lp.num_vars);
  LPSolution sol = tall ? solve_lp_via_dual(m.lp, mode) : solve_lp(m.lp, mode);
  if (sol.status == LPStatus::Infeasible) {
    std::string msg = "hard-instance LP infeasible for bias classes {";
    for (const auto& b : spec.biases) msg += rat_to_string(b) + " ";
    throw std::runtime_error(msg + "}");
  }
  if (sol.status != LPStatus::Optimal)
    throw std::runtime_error("hard-instance LP did not solve to optimality");

  const int L = static_cast<int>(spec.biases.size());
  std::vector<Rat> w(sol.primal.begin(), sol.primal.begin() + m.z_var);
  bool exact = mode == LPMode::ExactRational;
  if (!exact) {
    // Try to recover the exact vertex solution; keep it only if the bias and
    // cut equalities then hold exactly.
    std::vector<Rat> recon(w.size());
    for (size_t j = 0; j < w.size(); ++j) {
      recon[j] = reconstruct_dyadic(w[j]);
      if (recon[j] < 0 && recon[j] > rat_from_double(-1e-9)) recon[j] = 0;
    }
    bool ok = true;
    for (const auto& v : recon)
      if (v < 0) ok = false;
    if (ok) {
      for (size_t i = m.cut_row; i < m.lp.rows.size() && ok; ++i) {
        Rat acc(0);
        for (const auto& [j, a] : m.lp.rows[i].terms)
          if (j < m.z_var) acc += a * recon[j];
        if (acc != m.lp.rows[i].rhs) ok = false;
      }
    }
    if (ok) {
      w = std::move(recon);
      exact = true;
    }
  }

  const Rat drop = mode == LPMode::Float && !exact ? rat_from_double(1e-12) : Rat(0);
  auto vname = [&](int vid) {
    int bit = vid / L, k = vid % L;
    return (bit ? std::string("v1:") : std::string("v0:")) + rat_to_string(spec.biases[k]);
  };
  std::vector<std::tuple<std::string, std::string, Rat>> edges;
  for (int j = 0; j < m.z_var; ++j)
    if (w[j] > drop) edges.emplace_back(vname(m.pairs[j].first), vname(m.pairs[j].second), w[j]);
  if (edges.empty()) throw std::runtime_error("hard-instance LP returned an empty graph");
  WeightedDigraph g = WeightedDigraph::from_edges(edges);

  // Rescale so the reference cut is exactly 1 (float-mode safety; a no-op
  // when the cut row held exactly).
  HardGraphResult out;
  out.weights_exact = exact;
  Assignment reference;
  for (const auto& name : g.vertices())
    reference.bits[name] = name.rfind("v1:", 0) == 0 ? 1 : 0;
  CutValue cut = cut_value(g, reference);
  if (cut.satisfied == 0) throw std::runtime_error("hard-instance graph has empty reference cut");
  if (cut.satisfied != 1) g = g.scaled(Rat(1 / cut.satisfied));
  out.g = std::move(g);
  out.reference = std::move(reference);

  // Per-algorithm value of the realized graph.
  std::vector<int> cls(out.g.num_vertices(), -1);
  for (int v = 0; v < out.g.num_vertices(); ++v) {
    const std::string& nm = out.g.name(v);
    Rat b = rat_from_string(nm.substr(3));
    for (int i = 0; i < L; ++i)
      if (spec.biases[i] == b) cls[v] = i;
  }
  Rat best(-1);
  for (size_t pi = 0; pi < spec.family.size(); ++pi) {
    const auto& p = spec.family[pi];
    Rat acc(0);
    for (const auto& e : out.g.edges()) acc += e.w * p[cls[e.tail]] * (1 - p[cls[e.head]]);
    Rat norm = acc / out.g.total_weight();
    out.per_p_normalized.push_back(norm);
    if (norm > best) {
      best = norm;
      out.argmax_p = static_cast<int>(pi);
    }
  }
  out.minmax_normalized = best;
  out.lp_objective = sol.objective;
  return out;
}

}  // namespace dicut
