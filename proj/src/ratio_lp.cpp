#include "dicut/ratio_lp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dicut {

namespace {

// Selection value attached to a slot: S on the class for positive sign,
// 1 - S for negative sign.
Rat slot_factor(const AntisymPiecewise& s, const LiteralSlot& slot) {
  Rat v = class_value(s, slot.class_index);
  return slot.sign == 1 ? v : Rat(1 - v);
}

}  // namespace

RatioLP build_ratio_lp(const AntisymPiecewise& s) {
  RatioLP r;
  r.ell = s.ell();
  const int K = r.num_classes();
  const int M = 2 * K;

  auto slot_of = [&](int sid) {
    LiteralSlot slot;
    slot.sign = sid < K ? 1 : -1;
    slot.class_index = (sid % K) - r.ell;
    return slot;
  };

  r.pair_types.reserve(static_cast<size_t>(M) * (M + 1) / 2);
  for (int sa = 0; sa < M; ++sa)
    for (int sb = sa; sb < M; ++sb) r.pair_types.push_back({slot_of(sa), slot_of(sb)});

  LPProblem& lp = r.lp;
  lp.num_vars = static_cast<int>(r.pair_types.size());
  lp.objective.resize(lp.num_vars);
  lp.rows.resize(1 + 2 * K);
  r.cut_row = 0;
  lp.rows[0].rel = Rel::Eq;
  lp.rows[0].rhs = 1;
  // Interval endpoints per class: a_i = sup I_i, b_i = inf I_i.
  std::vector<Rat> asup(K), binf(K);
  for (int k = 0; k < K; ++k) {
    asup[k] = class_sup(s, k - r.ell);
    binf[k] = class_inf(s, k - r.ell);
    auto& lower = lp.rows[1 + 2 * k];
    lower.rel = Rel::Ge;
    lower.rhs = 0;
    auto& upper = lp.rows[2 + 2 * k];
    upper.rel = Rel::Le;
    upper.rhs = 0;
  }

  for (int j = 0; j < lp.num_vars; ++j) {
    const PairType& pt = r.pair_types[j];
    lp.objective[j] = slot_factor(s, pt.a) * slot_factor(s, pt.b);
    if (pt.in_c_plus()) lp.rows[0].terms.emplace_back(j, Rat(1));
    // Per-slot contributions to the class rows, accumulated per row.
    std::map<int, Rat> acc;
    for (const LiteralSlot* slot : {&pt.a, &pt.b}) {
      int k = slot->class_index + r.ell;
      Rat sgn(slot->sign);
      acc[1 + 2 * k] += sgn - binf[k];
      acc[2 + 2 * k] += sgn - asup[k];
    }
    for (auto& [row, coef] : acc)
      if (coef != 0) lp.rows[row].terms.emplace_back(j, std::move(coef));
  }
  return r;
}

LPProblem ratio_lp_dual(const RatioLP& r) { return dual_of(r.lp); }

RatioValue compute_ratio(const AntisymPiecewise& s, LPMode mode) {
  if (mode == LPMode::ExactRational && s.ell() > 30)
    throw std::invalid_argument("exact mode is reserved for ell <= 30; use float mode");
  RatioLP r = build_ratio_lp(s);
  LPSolution sol = solve_lp(r.lp, mode);
  if (sol.status != LPStatus::Optimal)
    throw std::runtime_error("ratio LP did not solve to optimality");
  if (sol.audit && sol.audit->dual_violation > 1e-9)
    throw std::runtime_error(
        "numeric degeneracy: float ratio LP finished with exact dual violation " +
        decimal17(sol.audit->dual_violation) + "; retry in exact mode");
  return RatioValue{sol.objective, std::move(sol)};
}

namespace {

// Continued-fraction rounding to the best rational with denominator at most
// max_den; used to recover exact vertex weights from polished dyadic ones.
Rat rat_reconstruct(const Rat& x, const mpz_class& max_den) {
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

struct VertexKey {
  int bit;
  int k;  // class array index (signed class = k - ell)
  int copy;
  auto operator<=>(const VertexKey&) const = default;
};

std::string vertex_name(const VertexKey& v, int ell) {
  int i = v.k - ell;
  std::string s = (v.bit ? "v1:" : "v0:") + std::string(i >= 0 ? "+" : "") + std::to_string(i);
  if (v.copy) s += "b";
  return s;
}

}  // namespace

WitnessGraph extract_witness_graph(const LPSolution& sol, const RatioLP& r,
                                   const AntisymPiecewise& s) {
  if (sol.status != LPStatus::Optimal)
    throw std::invalid_argument("witness extraction needs an optimal solution");
  const int K = r.num_classes();
  const int ell = r.ell;

  // Weights; in float mode try to recover the exact vertex rationals.
  std::vector<Rat> w(sol.primal.begin(), sol.primal.begin() + r.lp.num_vars);
  if (sol.audit) {
    std::vector<Rat> recon(w.size());
    for (size_t j = 0; j < w.size(); ++j) recon[j] = rat_reconstruct(w[j], mpz_class(1000000000000L));
    // Accept the reconstruction only if it is exactly feasible and matches
    // the polished objective closely.
    bool ok = true;
    Rat obj(0), cut(0);
    std::vector<Rat> row_acc(r.lp.rows.size(), Rat(0));
    for (size_t j = 0; j < recon.size() && ok; ++j) {
      if (recon[j] < 0) ok = false;
      obj += r.lp.objective[j] * recon[j];
    }
    if (ok) {
      for (size_t i = 0; i < r.lp.rows.size(); ++i) {
        for (const auto& [j, a] : r.lp.rows[i].terms) row_acc[i] += a * recon[j];
        const auto& row = r.lp.rows[i];
        if (row.rel == Rel::Eq && row_acc[i] != row.rhs) ok = false;
        if (row.rel == Rel::Ge && row_acc[i] < row.rhs) ok = false;
        if (row.rel == Rel::Le && row_acc[i] > row.rhs) ok = false;
      }
    }
    if (ok && rat_abs(obj - sol.objective) <= rat_from_double(1e-9)) w = std::move(recon);
  }

  const Rat drop = sol.audit ? rat_from_double(1e-12) : Rat(0);

  // Decode slots. tail(+,k) = (1,k); tail(-,k) = (0, 2ell-k);
  // head(+,k) = (0, 2ell-k); head(-,k) = (1,k).
  auto tail_of = [&](const LiteralSlot& slot) {
    int k = slot.class_index + ell;
    return slot.sign == 1 ? VertexKey{1, k, 0} : VertexKey{0, 2 * ell - k, 0};
  };
  auto head_of = [&](const LiteralSlot& slot) {
    int k = slot.class_index + ell;
    return slot.sign == 1 ? VertexKey{0, 2 * ell - k, 0} : VertexKey{1, k, 0};
  };

  // Classes that need two copies: both endpoints of some positive-weight
  // split coincide (exactly the {(+1,i),(-1,i)} pair types).
  std::map<std::pair<int, int>, int> copies;  // (bit,k) -> copy count
  bool self_pairs = false;
  for (int j = 0; j < r.lp.num_vars; ++j) {
    if (w[j] <= drop) continue;
    const PairType& pt = r.pair_types[j];
    for (int split = 0; split < 2; ++split) {
      VertexKey t = split == 0 ? tail_of(pt.a) : tail_of(pt.b);
      VertexKey h = split == 0 ? head_of(pt.b) : head_of(pt.a);
      copies.insert({{t.bit, t.k}, 1});
      copies.insert({{h.bit, h.k}, 1});
      if (t.bit == h.bit && t.k == h.k) {
        copies[{t.bit, t.k}] = 2;
        self_pairs = true;
      }
    }
  }

  std::map<std::pair<std::string, std::string>, Rat> edges;
  auto add_edge = [&](const VertexKey& u, const VertexKey& v, const Rat& weight) {
    edges[{vertex_name(u, ell), vertex_name(v, ell)}] += weight;
  };
  for (int j = 0; j < r.lp.num_vars; ++j) {
    if (w[j] <= drop) continue;
    const PairType& pt = r.pair_types[j];
    Rat half = w[j] / 2;  // one half per split
    for (int split = 0; split < 2; ++split) {
      VertexKey t = split == 0 ? tail_of(pt.a) : tail_of(pt.b);
      VertexKey h = split == 0 ? head_of(pt.b) : head_of(pt.a);
      if (t.bit == h.bit && t.k == h.k) {
        // Route between the two copies, both directions, keeping the copies
        // interchangeable.
        VertexKey c0 = t, c1 = t;
        c1.copy = 1;
        add_edge(c0, c1, half / 2);
        add_edge(c1, c0, half / 2);
      } else {
        int nu = copies[{t.bit, t.k}], nv = copies[{h.bit, h.k}];
        Rat share = half / (nu * nv);
        for (int cu = 0; cu < nu; ++cu)
          for (int cv = 0; cv < nv; ++cv) {
            VertexKey u = t, v = h;
            u.copy = cu;
            v.copy = cv;
            add_edge(u, v, share);
          }
      }
    }
  }

  // Check every decoded vertex's bias against its class interval; where the
  // LP pinned the aggregate on an excluded (open) endpoint, nudge it inward
  // with a tiny edge to a fresh one-sided vertex.
  WitnessGraph out;
  out.used_self_pair_types = self_pairs;
  out.perturbed = false;
  out.lp_value = sol.objective;

  std::map<std::string, std::pair<Rat, Rat>> flow;  // name -> (out, in)
  std::map<std::string, VertexKey> decoded;
  for (const auto& [bk, n] : copies)
    for (int c = 0; c < n; ++c) {
      VertexKey v{bk.first, bk.second, c};
      decoded[vertex_name(v, ell)] = v;
    }
  for (const auto& [key, weight] : edges) {
    flow[key.first].first += weight;
    flow[key.second].second += weight;
  }

  int gadget_id = 0;
  std::map<std::string, int> gadget_bits;
  for (const auto& [name, vk] : decoded) {
    auto it = flow.find(name);
    if (it == flow.end()) continue;  // isolated class
    Rat o = it->second.first, n = it->second.second;
    if (o + n == 0) continue;
    int i = vk.k - ell;
    Rat lo = class_inf(s, i), hi = class_sup(s, i);
    auto inside = [&](const Rat& ratio) {
      if (ratio < lo || ratio > hi) return false;
      if (i > 0 && ratio == lo) return false;  // I_{+i} open at inf
      if (i < 0 && ratio == hi) return false;  // I_{-i} open at sup
      return true;
    };
    Rat ratio = (o - n) / (o + n);
    if (inside(ratio)) continue;
    bool need_increase = ratio <= lo && !(i <= 0 && ratio == lo);
    if (lo == hi)
      throw std::runtime_error("witness decode: class " + std::to_string(i) +
                               " has a degenerate interval pinned at its endpoint");
    Rat delta = (o + n) / 1000000000;
    bool fixed = false;
    for (int att = 0; att < 80; ++att, delta /= 2) {
      Rat no = need_increase ? Rat(o + delta) : o;
      Rat nn = need_increase ? n : Rat(n + delta);
      if (inside(Rat((no - nn) / (no + nn)))) {
        fixed = true;
        break;
      }
    }
    if (!fixed)
      throw std::runtime_error("witness decode: cannot realize class " + std::to_string(i) +
                               " bias inside its interval");
    std::string aux = "aux" + std::to_string(gadget_id++);
    if (need_increase) {
      edges[{name, aux}] += delta;
      gadget_bits[aux] = 0;
    } else {
      edges[{aux, name}] += delta;
      gadget_bits[aux] = 1;
    }
    out.perturbed = true;
  }

  std::vector<std::tuple<std::string, std::string, Rat>> edge_list;
  for (const auto& [key, weight] : edges)
    if (weight > 0) edge_list.emplace_back(key.first, key.second, weight);
  out.g = WeightedDigraph::from_edges(edge_list);
  for (const auto& [name, vk] : decoded)
    if (out.g.index_of(name) >= 0) out.reference.bits[name] = vk.bit;
  for (const auto& [name, bit] : gadget_bits) out.reference.bits[name] = bit;
  return out;
}

}  // namespace dicut
