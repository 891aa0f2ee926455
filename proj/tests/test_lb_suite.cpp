#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dicut/lb_suite.hpp"
#include "dicut/quadopt.hpp"
#include "dicut/selection.hpp"

using namespace dicut;

namespace {
Rat dec(const char* s) { return rat_from_string(s); }
}

TEST_CASE("two-vertex gadget matches its caption") {
  Rat c(9, 8);
  auto inst = two_vertex(c);
  CHECK(bias_of(inst.g, "1") == Rat((c - 1) / (c + 1)));
  CHECK(bias_of(inst.g, "2") == Rat(-(c - 1) / (c + 1)));
  CHECK(cut_value(inst.g, inst.reference).satisfied == c);
  CHECK(opt_value(inst.g, OptMethod::Bruteforce).normalized == Rat(9, 17));
}

TEST_CASE("four-vertex gadget matches its caption") {
  Rat c(9, 8);
  auto inst = four_vertex(c);
  CHECK(cut_value(inst.g, inst.reference).satisfied == Rat(145, 64));
  for (const char* v : {"1", "2"}) CHECK(bias_of(inst.g, v) == Rat(1, 17));
  for (const char* v : {"3", "4"}) CHECK(bias_of(inst.g, v) == Rat(-1, 17));
}

TEST_CASE("eight-vertex instance: weights, biases, reference cut") {
  auto inst = antisym8();
  CHECK(inst.g.num_vertices() == 8);
  CHECK(inst.g.edges().size() == 13);
  CHECK(cut_value(inst.g, inst.reference).satisfied == dec("179.28"));
  CHECK(bias_of(inst.g, "1") == dec("-0.1"));
  CHECK(bias_of(inst.g, "2") == dec("-0.1"));
  CHECK(bias_of(inst.g, "3") == 0);
  CHECK(bias_of(inst.g, "4") == 0);
  CHECK(bias_of(inst.g, "5") == dec("0.2"));
  CHECK(bias_of(inst.g, "6") == dec("0.2"));
  CHECK(bias_of(inst.g, "7") == dec("0.1"));
  CHECK(bias_of(inst.g, "8") == dec("0.1"));
}

TEST_CASE("prior-bound graphs match their captions") {
  Rat c(5, 4);
  auto g1 = fj_g1(c);
  CHECK(cut_value(g1.g, g1.reference).satisfied == Rat(2 * c * c));
  CHECK(bias_of(g1.g, "1") == Rat(1, 9));
  CHECK(bias_of(g1.g, "3") == 0);
  CHECK(bias_of(g1.g, "5") == Rat(-1, 9));
  auto g2 = fj_g2(c);
  CHECK(cut_value(g2.g, g2.reference).satisfied == Rat(2 * c));
  CHECK(bias_of(g2.g, "2") == Rat(1, 9));
  CHECK(bias_of(g2.g, "1") == 0);
  CHECK(bias_of(g2.g, "4") == 0);
  CHECK(bias_of(g2.g, "3") == Rat(-1, 9));
}

TEST_CASE("caption polynomials re-derive from the graphs") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> num(0, 31);
  Rat c(9, 8);

  auto tv = two_vertex(c);
  ClassQuadratic tvq = class_quadratic(tv.g, classmap_of(tv.g, false));
  auto fj1 = fj_g1(c);
  ClassQuadratic f1q = class_quadratic(fj1.g, classmap_of(fj1.g, false));
  auto fj2 = fj_g2(c);
  ClassQuadratic f2q = class_quadratic(fj2.g, classmap_of(fj2.g, false));

  for (int trial = 0; trial < 50; ++trial) {
    Rat p = rat_frac(num(rng), 31), q = rat_frac(num(rng), 31), r = rat_frac(num(rng), 31);
    // two-vertex: p (1-q) c + q (1-p); ascending classes put q first.
    CHECK(tvq.form.eval(std::vector<Rat>{q, p}) == Rat(p * (1 - q) * c + q * (1 - p)));
    // six-vertex: p(1-p)(c+1) + p(1-r)(c^2-1) + r(1-r)(c^2-1) + r(1-q)(c^2-1)
    // + q(1-q)(c+1), with p on bias +, r on bias 0, q on bias -.
    Rat f1 = p * (1 - p) * (c + 1) + p * (1 - r) * (c * c - 1) + r * (1 - r) * (c * c - 1) +
             r * (1 - q) * (c * c - 1) + q * (1 - q) * (c + 1);
    CHECK(f1q.form.eval(std::vector<Rat>{q, r, p}) == f1);
    // four-vertex companion: p(1-r)c + r(1-p) + r(1-r)(c-1) + r(1-q)c + q(1-r),
    // with p on bias +, r on bias 0, q on bias -.
    Rat f2 = p * (1 - r) * c + r * (1 - p) + r * (1 - r) * (c - 1) + r * (1 - q) * c +
             q * (1 - r);
    CHECK(f2q.form.eval(std::vector<Rat>{q, r, p}) == f2);
  }
}

TEST_CASE("36-vertex reconstruction") {
  WeightedDigraph g = reconstruct_glp_weights();
  CHECK(g.num_vertices() == 36);
  CHECK(g.edges().size() == 37);
  // Local relation at 3': out = in * (1 + b3)/(1 - b3) with b3 = -0.375.
  Rat w_13 = 0, w_31 = 0;
  for (const auto& e : g.edges()) {
    if (g.name(e.tail) == "1" && g.name(e.head) == "3'") w_13 = e.w;
    if (g.name(e.tail) == "3'" && g.name(e.head) == "1") w_31 = e.w;
  }
  CHECK(w_13 == 1);  // normalization
  CHECK(w_31 == Rat(5, 11));
  CHECK(bias_of(g, "1") == dec("-0.475"));
  CHECK(bias_of(g, "20'") == dec("0.475"));
  for (const auto& e : g.edges()) CHECK(e.w > 0);
  for (int i = 1; i <= 18; ++i)
    CHECK(bias_of(g, std::to_string(i)) == rat_frac(-475 + 50 * (i - 1), 1000));
  for (int i = 3; i <= 20; ++i)
    CHECK(bias_of(g, std::to_string(i) + "'") == rat_frac(-475 + 50 * (i - 1), 1000));
}

TEST_CASE("frontier ordering is narrow and the DP matches bruteforce on a prefix") {
  WeightedDigraph g = reconstruct_glp_weights();
  auto order = glp_frontier_ordering();
  REQUIRE(order.size() == 36);
  CHECK(frontier_width(g, order) <= 6);
  // Induced subgraph on the first 12 ordered vertices.
  std::vector<std::string> prefix(order.begin(), order.begin() + 12);
  auto in_prefix = [&](int v) {
    for (const auto& name : prefix)
      if (g.name(v) == name) return true;
    return false;
  };
  std::vector<std::tuple<std::string, std::string, Rat>> edges;
  for (const auto& e : g.edges())
    if (in_prefix(e.tail) && in_prefix(e.head))
      edges.emplace_back(g.name(e.tail), g.name(e.head), e.w);
  auto sub = WeightedDigraph::from_edges(edges, prefix);
  auto bf = opt_value(sub, OptMethod::Bruteforce);
  auto dp = opt_value(sub, OptMethod::FrontierDP, prefix);
  CHECK(bf.normalized == dp.normalized);
}

TEST_CASE("glp36 instance carries the unprimed-to-primed reference cut") {
  auto inst = glp36();
  Rat ref = cut_value(inst.g, inst.reference).satisfied;
  CHECK(ref > 0);
  // Reference cut consists exactly of the unprimed -> primed edges.
  Rat manual(0);
  for (const auto& e : inst.g.edges())
    if (inst.g.name(e.tail).back() != '\'' && inst.g.name(e.head).back() == '\'')
      manual += e.w;
  CHECK(ref == manual);
  CHECK(inst.classes.num_classes() == 20);
}

TEST_CASE("verify: PL sigmoid half-intercept bound") {
  BoundReport r = verify_bound(BoundId::PlsigmoidHalf);
  CHECK(r.pass);
  CHECK(r.value_decimal == doctest::Approx(0.4852813742385703).epsilon(1e-12));
}

TEST_CASE("verify: PL sigmoid family bound") {
  BoundReport r = verify_bound(BoundId::PlsigmoidFamily);
  CHECK(r.pass);
  CHECK(rat_to_double(r.value) <= 0.486);
}

TEST_CASE("verify: general selection bound") {
  BoundReport r = verify_bound(BoundId::General);
  CHECK(r.pass);
  CHECK(r.exact);
  CHECK(r.value == Rat(4031104, 8135775));
}

TEST_CASE("verify: antisymmetric selection bound") {
  BoundReport r = verify_bound(BoundId::Antisym);
  CHECK(r.pass);
  CHECK(r.value <= dec("0.48899"));
  CHECK(r.value > dec("0.4889"));
}

TEST_CASE("verify: prior antisymmetric bound and the tradeoff recomputation") {
  BoundReport a = verify_bound(BoundId::FjAntisym);
  CHECK(a.pass);
  CHECK(a.value > dec("0.4890"));
  CHECK(a.value <= dec("0.4899"));
  BoundReport t = verify_bound(BoundId::FjGeneralTradeoff);
  CHECK(t.pass);
  CHECK(t.value_decimal == doctest::Approx(0.4998).epsilon(3e-4));
}

TEST_CASE("verify_all covers every bound id") {
  auto all = verify_all_bounds();
  CHECK(all.size() == 6);
  for (const auto& r : all) CHECK(r.pass);
}

TEST_CASE("named instance dispatch") {
  Rat c(9, 8);
  CHECK(named_instance("two_vertex", &c).g.num_vertices() == 2);
  CHECK(named_instance("antisym8").g.num_vertices() == 8);
  CHECK_THROWS_AS(named_instance("two_vertex"), std::invalid_argument);
  CHECK_THROWS_AS(named_instance("nope"), std::invalid_argument);
}
