#include "dicut/lb_suite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dicut/quadopt.hpp"
#include "dicut/selection.hpp"

namespace dicut {

namespace {

Rat dec(const char* s) { return rat_from_string(s); }

Assignment bits_of(std::initializer_list<std::pair<const char*, int>> xs) {
  Assignment a;
  for (const auto& [name, b] : xs) a.bits[name] = b;
  return a;
}

void require_c_above_one(const Rat& c) {
  if (c <= 1) throw std::invalid_argument("instance parameter requires c > 1");
}

}  // namespace

NamedInstance two_vertex(const Rat& c) {
  require_c_above_one(c);
  NamedInstance inst;
  inst.g = WeightedDigraph::from_edges({{"1", "2", c}, {"2", "1", Rat(1)}});
  inst.reference = bits_of({{"1", 1}, {"2", 0}});
  inst.classes = classmap_of(inst.g, /*antisym_ties=*/true);
  return inst;
}

NamedInstance four_vertex(const Rat& c) {
  require_c_above_one(c);
  NamedInstance inst;
  inst.g = WeightedDigraph::from_edges({{"1", "2", Rat(1)},
                                        {"2", "1", c},
                                        {"3", "4", Rat(1)},
                                        {"4", "3", c},
                                        {"1", "4", Rat(c * c - 1)}});
  inst.reference = bits_of({{"1", 1}, {"2", 0}, {"3", 1}, {"4", 0}});
  inst.classes = classmap_of(inst.g, true);
  return inst;
}

NamedInstance antisym8() {
  NamedInstance inst;
  inst.g = WeightedDigraph::from_edges({
      {"1", "2", dec("6.2775")},
      {"2", "1", dec("7.6725")},
      {"7", "8", dec("12.1275")},
      {"8", "7", dec("9.9225")},
      {"5", "6", dec("3.6")},
      {"6", "5", dec("5.4")},
      {"2", "3", dec("94.185")},
      {"3", "2", dec("118.215")},
      {"8", "5", dec("22.005")},
      {"5", "8", dec("13.995")},
      {"4", "5", dec("1.035")},
      {"5", "4", dec("25.065")},
      {"4", "3", dec("24.03")},
  });
  inst.reference = bits_of({{"1", 1}, {"3", 1}, {"5", 1}, {"7", 1},
                            {"2", 0}, {"4", 0}, {"6", 0}, {"8", 0}});
  inst.classes = classmap_of(inst.g, true);
  return inst;
}

NamedInstance fj_g1(const Rat& c) {
  require_c_above_one(c);
  Rat c2m1 = c * c - 1;
  NamedInstance inst;
  inst.g = WeightedDigraph::from_edges({{"1", "2", Rat(1)},
                                        {"2", "1", c},
                                        {"1", "4", c2m1},
                                        {"4", "3", c2m1},
                                        {"3", "6", c2m1},
                                        {"5", "6", Rat(1)},
                                        {"6", "5", c}});
  inst.reference = bits_of({{"1", 1}, {"3", 1}, {"5", 1}, {"2", 0}, {"4", 0}, {"6", 0}});
  inst.classes = classmap_of(inst.g, true);
  return inst;
}

NamedInstance fj_g2(const Rat& c) {
  require_c_above_one(c);
  NamedInstance inst;
  inst.g = WeightedDigraph::from_edges({{"1", "2", Rat(1)},
                                        {"2", "1", c},
                                        {"3", "4", Rat(1)},
                                        {"4", "3", c},
                                        {"1", "4", Rat(c - 1)}});
  inst.reference = bits_of({{"2", 1}, {"4", 1}, {"1", 0}, {"3", 0}});
  inst.classes = classmap_of(inst.g, true);
  return inst;
}

namespace {

Rat glp_bias(int i) { return rat_frac(-475 + 50 * (i - 1), 1000); }

struct GlpEdge {
  std::string tail, head;
};

std::vector<GlpEdge> glp_edges(bool truncated_rule2) {
  std::vector<GlpEdge> edges;
  auto prime = [](int i) { return std::to_string(i) + "'"; };
  for (int i = 1; i <= 18; ++i) edges.push_back({std::to_string(i), prime(i + 2)});
  int rule2_hi = truncated_rule2 ? 16 : 17;
  for (int i = 1; i <= rule2_hi; ++i) edges.push_back({prime(i + 3), std::to_string(i)});
  edges.push_back({prime(3), "1"});
  edges.push_back({prime(20), "18"});
  return edges;
}

// Nullspace of the per-vertex bias equations over the edge weights. Returns
// the weights normalized to w(first edge) = 1 when the nullspace is
// one-dimensional and positive; empty vector otherwise.
std::vector<Rat> glp_solve(const std::vector<GlpEdge>& edges) {
  std::vector<std::string> verts;
  for (int i = 1; i <= 18; ++i) verts.push_back(std::to_string(i));
  for (int i = 3; i <= 20; ++i) verts.push_back(std::to_string(i) + "'");
  auto bias_of_name = [&](const std::string& v) {
    bool primed = v.back() == '\'';
    int i = std::stoi(primed ? v.substr(0, v.size() - 1) : v);
    return glp_bias(i);
  };
  const int m = static_cast<int>(verts.size());
  const int n = static_cast<int>(edges.size());
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n, Rat(0)));
  for (int r = 0; r < m; ++r) {
    Rat b = bias_of_name(verts[r]);
    for (int j = 0; j < n; ++j) {
      if (edges[j].tail == verts[r]) a[r][j] += 1 - b;
      if (edges[j].head == verts[r]) a[r][j] -= 1 + b;
    }
  }
  // Row-reduce; collect pivot columns.
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    for (int i = rank; i < m; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    Rat d = a[rank][col];
    for (int j = 0; j < n; ++j) a[rank][j] /= d;
    for (int i = 0; i < m; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (n - rank != 1) return {};
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = -1;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) free_col = j;
  std::vector<Rat> w(n, Rat(0));
  w[free_col] = 1;
  for (int r = 0; r < rank; ++r) w[pivot_col[r]] = -a[r][free_col];
  if (w[0] == 0) return {};
  Rat scale = w[0];
  bool positive = true;
  for (auto& x : w) {
    x /= scale;
    if (x <= 0) positive = false;
  }
  if (!positive) return {};
  return w;
}

}  // namespace

WeightedDigraph reconstruct_glp_weights() {
  auto edges = glp_edges(false);
  std::vector<Rat> w = glp_solve(edges);
  if (w.empty()) {
    // Alternate reading of edge rule (2), kept as a diagnosed fallback.
    auto alt = glp_edges(true);
    std::vector<Rat> walt = glp_solve(alt);
    if (walt.empty())
      throw std::runtime_error(
          "glp36 reconstruction failed: bias system has no one-dimensional "
          "positive nullspace under either edge-rule reading");
    throw std::runtime_error(
        "glp36 reconstruction: the truncated edge-rule reading, not the full "
        "one, yields the positive nullspace; review the edge structure");
  }
  std::vector<std::tuple<std::string, std::string, Rat>> elist;
  for (size_t j = 0; j < edges.size(); ++j)
    elist.emplace_back(edges[j].tail, edges[j].head, w[j]);
  return WeightedDigraph::from_edges(elist);
}

std::vector<std::string> glp_frontier_ordering() {
  std::vector<std::string> order = {"1", "3'"};
  for (int k = 4; k <= 20; ++k) {
    order.push_back(std::to_string(k) + "'");
    order.push_back(std::to_string(k - 2));
  }
  return order;
}

NamedInstance glp36() {
  NamedInstance inst;
  inst.g = reconstruct_glp_weights();
  for (const auto& v : inst.g.vertices())
    inst.reference.bits[v] = v.back() == '\'' ? 0 : 1;
  inst.classes = classmap_of(inst.g, true);
  return inst;
}

NamedInstance named_instance(const std::string& name, const Rat* c) {
  auto need_c = [&]() -> const Rat& {
    if (!c) throw std::invalid_argument("instance '" + name + "' requires parameter c");
    return *c;
  };
  if (name == "two_vertex") return two_vertex(need_c());
  if (name == "four_vertex") return four_vertex(need_c());
  if (name == "antisym8") return antisym8();
  if (name == "fj_g1") return fj_g1(need_c());
  if (name == "fj_g2") return fj_g2(need_c());
  if (name == "glp36") return glp36();
  throw std::invalid_argument("unknown instance '" + name + "'");
}

const char* bound_id_name(BoundId id) {
  switch (id) {
    case BoundId::PlsigmoidHalf:
      return "plsigmoid_half";
    case BoundId::PlsigmoidFamily:
      return "plsigmoid_family";
    case BoundId::General:
      return "general";
    case BoundId::Antisym:
      return "antisym";
    case BoundId::FjAntisym:
      return "fj_antisym";
    case BoundId::FjGeneralTradeoff:
      return "fj_general_tradeoff";
  }
  throw std::logic_error("unreachable");
}

BoundId parse_bound_id(const std::string& name) {
  for (BoundId id : {BoundId::PlsigmoidHalf, BoundId::PlsigmoidFamily, BoundId::General,
                     BoundId::Antisym, BoundId::FjAntisym, BoundId::FjGeneralTradeoff})
    if (name == bound_id_name(id)) return id;
  throw std::invalid_argument("unknown bound id '" + name + "'");
}

namespace {

void add_detail(BoundReport& r, const std::string& k, const std::string& v) {
  r.details.emplace_back(k, v);
}

void add_detail(BoundReport& r, const std::string& k, const Rat& v) {
  r.details.emplace_back(k, rat_to_string(v) + " (" + decimal17(rat_to_double(v)) + ")");
}

BoundReport verify_plsigmoid_half() {
  BoundReport r;
  r.id = bound_id_name(BoundId::PlsigmoidHalf);
  r.direction = "<=";
  r.target = "0.485282";
  const Sqrt2Num one(Rat(1)), half(Rat(1, 2));
  const Sqrt2Num c{Rat(9, 23), Rat(12, 23)};  // (9 + 12 sqrt2)/23
  bool ok = (c - one).sign() > 0 && (c - Sqrt2Num(Rat(3))).sign() < 0;
  Sqrt2Num bias = (c - one) / (c + one);
  ok = ok && bias.sign() > 0 && (bias - half).sign() < 0;  // linear branch
  Sqrt2Num p = half + bias;  // PLSigmoid_{1/2}(bias) = 1/2 + bias
  Sqrt2Num q = one - p;
  Sqrt2Num ratio = p * p + q * q / c;
  const Sqrt2Num closed_form{Rat(-8), Rat(6)};  // 6 sqrt2 - 8
  bool equal = ratio == closed_form;
  bool below = ratio <= Sqrt2Num(dec("0.485282"));

  // The same ratio formula, validated against the graph at a rational c.
  Rat c0(9, 8);
  auto inst = two_vertex(c0);
  Rat p0 = Rat(1, 2) + (c0 - 1) / (c0 + 1), q0 = 1 - p0;
  Rat formula = p0 * p0 + q0 * q0 / c0;
  auto rr = ratio_on_graph(inst.g, Selection(make_plsigmoid(Rat(1, 2))));
  bool formula_ok = rr.ratio == formula && !rr.upper_bound_only;

  r.pass = ok && equal && below && formula_ok;
  r.exact = false;
  r.value_decimal = ratio.to_double();
  r.notes = "value is exactly 6*sqrt(2) - 8 at c = (9 + 12*sqrt(2))/23; symbolic check in Q(sqrt2)";
  add_detail(r, "closed_form_equal", equal ? "true" : "false");
  add_detail(r, "graph_formula_agrees_at_c=9/8", formula_ok ? "true" : "false");
  return r;
}

BoundReport verify_plsigmoid_family() {
  BoundReport r;
  r.id = bound_id_name(BoundId::PlsigmoidFamily);
  r.direction = "<=";
  r.target = "0.486";
  const Rat limit = dec("0.486");

  // Case 1: intercepts in [1/2, 1] on the two-vertex graph with c = 1.12916.
  Rat c1 = dec("1.12916");
  auto inst1 = two_vertex(c1);
  Rat b1 = (c1 - 1) / (c1 + 1);
  Rat p_at_b_one = Rat(1, 2) + b1 / 2;  // selection prob at intercept b = 1
  Rat p_at_b_half = Rat(1, 2) + b1;     // at intercept b = 1/2
  Rat p_vertex = Rat(1) / (c1 + 1);     // stationary point of c p^2 + (1-p)^2
  bool monotone = b1 < Rat(1, 2) && p_at_b_one >= p_vertex;
  Rat case1 = (c1 * p_at_b_half * p_at_b_half + (1 - p_at_b_half) * (1 - p_at_b_half)) / c1;
  auto rr1 = ratio_on_graph(inst1.g, Selection(make_plsigmoid(Rat(1, 2))));
  bool case1_ok = monotone && rr1.ratio == case1 && case1 <= dec("0.485282");
  add_detail(r, "case1_max_ratio", case1);

  // Case 2: intercepts in [0.225, 1/2] on the reconstructed 36-vertex graph.
  WeightedDigraph g = reconstruct_glp_weights();
  Assignment ref;
  for (const auto& v : g.vertices()) ref.bits[v] = v.back() == '\'' ? 0 : 1;
  Rat ref_cut = cut_value(g, ref).satisfied;
  Rat opt_cut = opt_value(g, OptMethod::FrontierDP, glp_frontier_ordering()).normalized *
                g.total_weight();
  ClassMap cm = classmap_of(g, false);
  ClassQuadratic cq = class_quadratic(g, cm);
  const int K = cm.num_classes();

  std::vector<Rat> boundaries = {dec("0.225"), dec("0.275"), dec("0.325"), dec("0.375"),
                                 dec("0.425"), dec("0.475"), Rat(1, 2)};
  // Paper order is descending in b; listed maxima rounded up in the sixth
  // decimal place.
  std::vector<Rat> listed_desc = {dec("0.485895"), dec("0.485870"), dec("0.485488"),
                                  dec("0.484375"), dec("0.482019"), dec("0.477739")};
  std::vector<Rat> max_ev(6);
  for (int j = 0; j < 6; ++j) {
    const Rat &blo = boundaries[j], &bhi = boundaries[j + 1];
    std::vector<Rat> slope(K, Rat(0)), inter(K, Rat(0));
    for (int k = 0; k < K; ++k) {
      const Rat& beta = cm.classes[k];
      Rat abeta = rat_abs(beta);
      if (abeta <= blo) {  // linear branch: S = 1/2 + beta/(2b), u = 1/b
        slope[k] = beta / 2;
        inter[k] = Rat(1, 2);
      } else if (abeta >= bhi) {  // saturated on the whole interval
        slope[k] = 0;
        inter[k] = beta > 0 ? Rat(1) : Rat(0);
      } else {
        throw std::logic_error("bias class straddles an intercept interval");
      }
    }
    auto uni = cq.form.restrict_affine(slope, inter);
    Rat ulo = Rat(1) / bhi, uhi = Rat(1) / blo;
    Rat best = std::max(uni.eval(ulo), uni.eval(uhi));
    if (uni.a2 != 0) {
      Rat ustar = -uni.a1 / (2 * uni.a2);
      if (uni.a2 < 0 && ustar >= ulo && ustar <= uhi) best = std::max(best, uni.eval(ustar));
    }
    max_ev[j] = best;
  }
  auto matches_listed = [&](const Rat& denom, std::vector<Rat>* out) {
    bool all = true;
    for (int j = 0; j < 6; ++j) {
      Rat ratio = max_ev[j] / denom;
      const Rat& listed = listed_desc[5 - j];
      if (ratio > listed || listed - ratio > Rat(1, 1000000)) all = false;
      out->push_back(ratio);
    }
    return all;
  };
  std::vector<Rat> six_ref, six_opt;
  bool ref_match = matches_listed(ref_cut, &six_ref);
  bool opt_match = matches_listed(opt_cut, &six_opt);
  bool use_opt = opt_match;
  const std::vector<Rat>& six = use_opt ? six_opt : six_ref;
  Rat case2 = *std::max_element(six.begin(), six.end());
  bool case2_ok = (ref_match || opt_match) && case2 <= limit;
  add_detail(r, "case2_denominator",
             std::string(use_opt ? "exact optimum (frontier DP)" : "reference cut") + " = " +
                 rat_to_string(use_opt ? opt_cut : ref_cut));
  add_detail(r, "case2_ref_cut", ref_cut);
  add_detail(r, "case2_opt_cut", opt_cut);
  for (int j = 5; j >= 0; --j)
    add_detail(r, "case2_max_interval_[" + rat_to_string(boundaries[j]) + "," +
                      rat_to_string(boundaries[j + 1]) + "]",
               six[j]);

  // Case 3: intercepts in (0, 0.225] on the four-vertex graph with
  // c = (1+b)/(1-b); the bound (c^2-1)/(c^2+1) is increasing in b, so the
  // endpoint b = 0.225 dominates.
  Rat b3 = dec("0.225");
  Rat c3 = (1 + b3) / (1 - b3);
  auto inst3 = four_vertex(c3);
  auto rr3 = ratio_on_graph(inst3.g, Selection(make_plsigmoid(b3)));
  Rat case3_bound = (c3 * c3 - 1) / (c3 * c3 + 1);
  bool case3_ok = rr3.ratio <= case3_bound && case3_bound < limit;
  add_detail(r, "case3_bound_at_b=0.225", case3_bound);
  add_detail(r, "case3_graph_ratio", rr3.ratio);

  r.pass = case1_ok && case2_ok && case3_ok;
  r.exact = true;
  r.value = std::max(std::max(case1, case2), case3_bound);
  r.value_decimal = rat_to_double(r.value);
  r.notes = use_opt ? "case 2 certified against the exact optimum"
                    : "case 2 certified against the reference cut (unprimed->1)";
  return r;
}

BoundReport verify_general() {
  BoundReport r;
  r.id = bound_id_name(BoundId::General);
  r.direction = "==";
  r.target = "4031104/8135775";
  Rat lam(15, 32), c(9, 8);
  auto a = two_vertex(c), b = four_vertex(c);
  WeightedDigraph u = WeightedDigraph::weighted_union(a.g, lam, b.g, 1 - lam);
  Assignment ref;
  for (const auto& [name, bit] : a.reference.bits) ref.bits["a:" + name] = bit;
  for (const auto& [name, bit] : b.reference.bits) ref.bits["b:" + name] = bit;
  Rat denom = lam * c + (1 - lam) * (c * c + 1);
  bool denom_ok = cut_value(u, ref).satisfied == denom;

  ClassMap cm = classmap_of(u, /*antisym_ties=*/false);  // arbitrary selection
  ClassQuadratic cq = class_quadratic(u, cm);
  BoxMaxResult mx = maximize_over_box(cq.form);
  // Classes ascend, so variable 0 is S(-bias) = q and variable 1 is p.
  bool argmax_ok = cq.form.dim() == 2 && mx.argmax[1] == Rat(1352, 2295) &&
                   mx.argmax[0] == Rat(943, 2295);
  Rat ratio = mx.value / denom;
  r.pass = denom_ok && argmax_ok && ratio == Rat(4031104, 8135775);
  r.exact = true;
  r.value = ratio;
  r.value_decimal = rat_to_double(ratio);
  add_detail(r, "max_oblivious_weight", mx.value);
  add_detail(r, "argmax_p", mx.argmax[1]);
  add_detail(r, "argmax_q", mx.argmax[0]);
  add_detail(r, "opt_weight", denom);
  r.notes = "weighted union of the two- and four-vertex gadgets at lambda=15/32, c=9/8";
  return r;
}

BoundReport verify_antisym() {
  BoundReport r;
  r.id = bound_id_name(BoundId::Antisym);
  r.direction = "<=";
  r.target = "0.48899";
  auto inst = antisym8();
  Rat ref = cut_value(inst.g, inst.reference).satisfied;
  bool ref_ok = ref == dec("179.28");
  ClassQuadratic cq = class_quadratic(inst.g, inst.classes);
  BoxMaxResult mx = maximize_over_box(cq.form);
  bool max_ok = mx.value == dec("87.664725") && mx.degenerate;
  // The stationary set is a line; the argmax must sit on it.
  auto grad = cq.form.gradient(mx.argmax);
  bool on_line = std::all_of(grad.begin(), grad.end(), [](const Rat& gi) { return gi == 0; });
  Rat ratio = mx.value / ref;
  r.pass = ref_ok && max_ok && on_line && ratio <= dec("0.48899");
  r.exact = true;
  r.value = ratio;
  r.value_decimal = rat_to_double(ratio);
  add_detail(r, "reference_cut", ref);
  add_detail(r, "quadratic_max", mx.value);
  add_detail(r, "degenerate", mx.degenerate ? "true" : "false");
  add_detail(r, "argmax_p", mx.argmax[0]);
  add_detail(r, "argmax_q", mx.argmax[1]);
  r.notes = "ratio upper bound against the reference cut; quadratic maximum attained on a "
            "stationary line";
  return r;
}

BoundReport verify_fj_antisym() {
  BoundReport r;
  r.id = bound_id_name(BoundId::FjAntisym);
  r.direction = "<=";
  r.target = "0.4899";
  Rat c(5, 4);
  // Weighting note: assigning 3/4 to the six-vertex graph maximizes to
  // ~0.4966, outside the certified range; the intended split puts 3/4 on
  // the four-vertex graph (equivalently lambda' = 1/4 in the displayed
  // denominator 2(lambda' c^2 + (1-lambda') c)).
  Rat w1(1, 4), w2(3, 4);
  auto a = fj_g1(c), b = fj_g2(c);
  WeightedDigraph u = WeightedDigraph::weighted_union(a.g, w1, b.g, w2);
  Assignment ref;
  for (const auto& [name, bit] : a.reference.bits) ref.bits["a:" + name] = bit;
  for (const auto& [name, bit] : b.reference.bits) ref.bits["b:" + name] = bit;
  Rat denom = 2 * (w1 * c * c + w2 * c);
  bool denom_ok = cut_value(u, ref).satisfied == denom;

  ClassMap cm = classmap_of(u, /*antisym_ties=*/true);
  ClassQuadratic cq = class_quadratic(u, cm);
  bool onevar = cq.form.dim() == 1;
  BoxMaxResult mx = maximize_over_box(cq.form);
  Rat ratio = mx.value / denom;
  r.pass = denom_ok && onevar && ratio > dec("0.4890") && ratio <= dec("0.4899");
  r.exact = true;
  r.value = ratio;
  r.value_decimal = rat_to_double(ratio);
  add_detail(r, "max_oblivious_weight", mx.value);
  add_detail(r, "argmax_p", mx.argmax[0]);
  add_detail(r, "opt_weight", denom);
  r.notes = "weights (1/4, 3/4) on the six-/four-vertex graphs at c=5/4; the transposed "
            "association maximizes outside the certified range";
  return r;
}

BoundReport verify_fj_general_tradeoff() {
  BoundReport r;
  r.id = bound_id_name(BoundId::FjGeneralTradeoff);
  r.direction = "~=";
  r.target = "0.4998";
  r.tolerance = 1e-4;
  // max over delta >= 0 of min(0.4899 + delta, 1/2 - 2 delta^2): the first
  // branch increases, the second decreases, and they cross above 0.4899, so
  // the maximum sits at the positive root of 2 d^2 + d - 0.0101 = 0.
  double delta = (-1.0 + std::sqrt(1.0 + 8.0 * 0.0101)) / 4.0;
  double value = 0.4899 + delta;
  double other = 0.5 - 2.0 * delta * delta;
  bool crossing_ok = std::abs(value - other) < 1e-12;
  bool delta_ok = std::abs(delta - 0.0099) <= 1e-4;
  bool value_ok = std::abs(value - 0.4998) <= 1e-4;
  r.pass = crossing_ok && delta_ok && value_ok;
  r.exact = false;
  r.value_decimal = value;
  add_detail(r, "delta", decimal17(delta));
  add_detail(r, "branch_gap_at_crossing", decimal17(std::abs(value - other)));
  r.notes = "crossing of 0.4899 + delta with 1/2 - 2 delta^2";
  return r;
}

}  // namespace

BoundReport verify_bound(BoundId id) {
  switch (id) {
    case BoundId::PlsigmoidHalf:
      return verify_plsigmoid_half();
    case BoundId::PlsigmoidFamily:
      return verify_plsigmoid_family();
    case BoundId::General:
      return verify_general();
    case BoundId::Antisym:
      return verify_antisym();
    case BoundId::FjAntisym:
      return verify_fj_antisym();
    case BoundId::FjGeneralTradeoff:
      return verify_fj_general_tradeoff();
  }
  throw std::logic_error("unreachable");
}

std::vector<BoundReport> verify_all_bounds() {
  std::vector<BoundReport> out;
  for (BoundId id : {BoundId::PlsigmoidHalf, BoundId::PlsigmoidFamily, BoundId::General,
                     BoundId::Antisym, BoundId::FjAntisym, BoundId::FjGeneralTradeoff})
    out.push_back(verify_bound(id));
  return out;
}

}  // namespace dicut
