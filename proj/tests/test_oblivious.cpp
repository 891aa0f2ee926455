#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dicut/lb_suite.hpp"
#include "dicut/oblivious.hpp"

using namespace dicut;

namespace {

const Rat kHalf(1, 2);

AntisymPiecewise const_half() { return make_antisym_piecewise({Rat(1)}, {}); }

// Step function hitting prescribed values on the classes 0.1 and 0.2 (and
// antisymmetric partners).
AntisymPiecewise two_class_step(const Rat& p_at_01, const Rat& p_at_02) {
  return make_antisym_piecewise({rat_from_string("0.05"), rat_from_string("0.15"), Rat(1)},
                                {p_at_01, p_at_02});
}

AntisymPiecewise random_step(std::mt19937_64& rng, int ell) {
  std::uniform_int_distribution<int> num(0, 64);
  std::vector<Rat> t{rat_frac(num(rng), 256)};
  for (int i = 1; i < ell; ++i) t.push_back(t.back() + rat_frac(1 + num(rng), 128));
  for (auto& x : t)
    if (x > 1) x = 1;
  t.push_back(Rat(1));
  std::vector<Rat> p;
  for (int i = 0; i < ell; ++i) p.push_back(rat_frac(num(rng), 64));
  return make_antisym_piecewise(std::move(t), std::move(p));
}

WeightedDigraph random_graph(std::mt19937_64& rng, int max_n) {
  std::uniform_int_distribution<int> nd(2, max_n);
  std::uniform_int_distribution<int> num(1, 20), den(1, 10);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int n = nd(rng);
  std::vector<std::tuple<std::string, std::string, Rat>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || coin(rng) > 0.4) continue;
      edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(j),
                         rat_frac(num(rng), den(rng)));
    }
  if (edges.empty()) edges.emplace_back("v0", "v1", Rat(1));
  return WeightedDigraph::from_edges(edges);
}

}  // namespace

TEST_CASE("two-vertex expected value matches the closed form") {
  std::mt19937_64 rng(3);
  for (const char* cs : {"9/8", "3/2", "2", "5/2"}) {
    Rat c = rat_from_string(cs);
    auto inst = two_vertex(c);
    auto s = random_step(rng, 3);
    Rat p = eval_selection(s, bias_of(inst.g, "1"));
    Rat q = eval_selection(s, bias_of(inst.g, "2"));
    ExpectedValue ev = expected_value(inst.g, Selection(s));
    CHECK(ev.satisfied == Rat(p * (1 - q) * c + q * (1 - p)));
  }
}

TEST_CASE("constant 1/2 selection satisfies a quarter of the weight") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    auto g = random_graph(rng, 9);
    CHECK(expected_value(g, Selection(const_half())).normalized == Rat(1, 4));
  }
}

TEST_CASE("eight-vertex instance at class probabilities (0.6, 0.745)") {
  auto inst = antisym8();
  auto s = two_class_step(rat_from_string("0.6"), rat_from_string("0.745"));
  ExpectedValue ev = expected_value(inst.g, Selection(s));
  CHECK(ev.satisfied == rat_from_string("87.664725"));
}

TEST_CASE("ratio of the two-vertex gadget under the half-intercept sigmoid") {
  for (const char* cs : {"9/8", "3/2", "2"}) {
    Rat c = rat_from_string(cs);
    auto inst = two_vertex(c);
    auto rr = ratio_on_graph(inst.g, Selection(make_plsigmoid(kHalf)));
    Rat p = kHalf + (c - 1) / (c + 1);
    Rat q = 1 - p;
    CHECK(rr.ratio == Rat(p * p + q * q / c));
    CHECK_FALSE(rr.upper_bound_only);
  }
}

TEST_CASE("deterministic optimal rounding achieves ratio 1") {
  auto g = WeightedDigraph::from_edges({{"u", "v", Rat(1)}});
  auto s = make_antisym_piecewise({Rat(0), Rat(1)}, {Rat(1)});  // sign indicator
  auto rr = ratio_on_graph(g, Selection(s));
  CHECK(rr.ratio == 1);
}

TEST_CASE("four-vertex ratio bound under the matching sigmoid") {
  Rat b = rat_from_string("0.2");
  Rat c = (1 + b) / (1 - b);
  auto inst = four_vertex(c);
  auto rr = ratio_on_graph(inst.g, Selection(make_plsigmoid(b)));
  CHECK(rr.ratio == Rat((c * c - 1) / (c * c + 1)));
}

TEST_CASE("ratio against a reference cut is flagged as an upper bound") {
  auto inst = two_vertex(Rat(2));
  auto rr = ratio_on_graph_vs_reference(inst.g, Selection(const_half()), inst.reference);
  CHECK(rr.upper_bound_only);
  CHECK(rr.denominator == 2);
}

TEST_CASE("class quadratic of the eight-vertex instance") {
  auto inst = antisym8();
  ClassQuadratic cq = class_quadratic(inst.g, inst.classes);
  REQUIRE(cq.form.dim() == 2);  // free: p(+0.1), q(+0.2)
  CHECK(cq.form.constant() == rat_from_string("53.6175"));
  CHECK(cq.form.lin(0) == rat_from_string("70.02"));
  CHECK(cq.form.lin(1) == rat_from_string("35.01"));
  CHECK(cq.form.quad(0, 0) == Rat(-36));
  CHECK(cq.form.quad(1, 1) == Rat(-9));
  CHECK(Rat(2 * cq.form.quad(0, 1)) == Rat(-36));
}

TEST_CASE("class quadratic of the four-vertex gadget matches its caption") {
  std::mt19937_64 rng(6);
  Rat c(9, 8);
  auto inst = four_vertex(c);
  ClassMap cm = classmap_of(inst.g, /*antisym_ties=*/false);
  ClassQuadratic cq = class_quadratic(inst.g, cm);
  REQUIRE(cq.form.dim() == 2);  // ascending classes: x0 = q = S(-bias), x1 = p
  std::uniform_int_distribution<int> num(0, 63);
  for (int trial = 0; trial < 50; ++trial) {
    Rat p = rat_frac(num(rng), 63), q = rat_frac(num(rng), 63);
    Rat caption = p * (1 - p) * (c + 1) + q * (1 - q) * (c + 1) + p * (1 - q) * (c * c - 1);
    std::vector<Rat> x{q, p};
    CHECK(cq.form.eval(x) == caption);
  }
}

TEST_CASE("single-edge class quadratic is x_tail (1 - x_head)") {
  auto g = WeightedDigraph::from_edges({{"u", "v", Rat(1)}});
  ClassQuadratic cq = class_quadratic(g, classmap_of(g, false));
  REQUIRE(cq.form.dim() == 2);  // x0 = S(-1) (head), x1 = S(+1) (tail)
  std::vector<Rat> x{Rat(1, 3), Rat(2, 5)};
  CHECK(cq.form.eval(x) == Rat(Rat(2, 5) * (1 - Rat(1, 3))));
}

TEST_CASE("class quadratic reproduces expected_value at the class probabilities") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_graph(rng, 8);
    auto s = random_step(rng, 3);
    ClassMap cm = classmap_of(g, false);
    ClassQuadratic cq = class_quadratic(g, cm);
    std::vector<Rat> probs;
    for (int k : cq.free_classes) probs.push_back(eval_selection(s, cm.classes[k]));
    CHECK(cq.form.eval(probs) == expected_value(g, Selection(s)).satisfied);
  }
}

TEST_CASE("transpose invariance for antisymmetric selections") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_graph(rng, 8);
    auto s = random_step(rng, 3);
    CHECK(expected_value(g, Selection(s)).satisfied ==
          expected_value(g.transposed(), Selection(s)).satisfied);
  }
}

TEST_CASE("expected value never exceeds the optimum") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_graph(rng, 8);
    auto s = random_step(rng, 4);
    Rat ev = expected_value(g, Selection(s)).normalized;
    Rat opt = opt_value(g, OptMethod::Bruteforce).normalized;
    CHECK(ev >= 0);
    CHECK(ev <= opt);
  }
}

TEST_CASE("ratio is invariant under uniform rescaling") {
  std::mt19937_64 rng(10);
  auto g = random_graph(rng, 7);
  auto s = random_step(rng, 3);
  auto r1 = ratio_on_graph(g, Selection(s));
  auto r2 = ratio_on_graph(g.scaled(Rat(13, 5)), Selection(s));
  CHECK(r1.ratio == r2.ratio);
}

TEST_CASE("antisym ties require positive partners and pin the zero class") {
  auto g = WeightedDigraph::from_edges(
      {{"a", "b", Rat(2)}, {"b", "a", Rat(1)}, {"c", "d", Rat(1)}, {"d", "c", Rat(1)}});
  ClassMap cm = classmap_of(g, true);  // classes -1/3, 0, 1/3
  ClassQuadratic cq = class_quadratic(g, cm);
  CHECK(cq.form.dim() == 1);
  // A one-sided class with no partner is rejected.
  auto h = WeightedDigraph::from_edges({{"a", "b", Rat(2)}, {"b", "c", Rat(1)}});
  CHECK_THROWS_AS(classmap_of(h, true), std::invalid_argument);
}

TEST_CASE("classmap validation catches bias drift") {
  auto g = WeightedDigraph::from_edges({{"a", "b", Rat(2)}, {"b", "a", Rat(1)}});
  ClassMap cm = classmap_of(g, false);
  cm.classes[0] = Rat(1, 7);  // corrupt
  CHECK_THROWS_AS(validate_classmap(g, cm), std::invalid_argument);
}
