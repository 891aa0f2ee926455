#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dicut/digraph.hpp"

using namespace dicut;

namespace {

WeightedDigraph two_cycle(const Rat& c) {
  return WeightedDigraph::from_edges({{"1", "2", c}, {"2", "1", Rat(1)}});
}

Assignment assign(std::initializer_list<std::pair<const char*, int>> xs) {
  Assignment a;
  for (auto& [v, b] : xs) a.bits[v] = b;
  return a;
}

WeightedDigraph random_graph(std::mt19937_64& rng, int max_n) {
  std::uniform_int_distribution<int> nd(2, max_n);
  std::uniform_int_distribution<int> num(1, 20), den(1, 10);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int n = nd(rng);
  std::vector<std::tuple<std::string, std::string, Rat>> edges;
  std::vector<std::string> verts;
  for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || coin(rng) > 0.35) continue;
      edges.emplace_back(verts[i], verts[j], rat_frac(num(rng), den(rng)));
    }
  if (edges.empty()) edges.emplace_back(verts[0], verts[1], Rat(1));
  return WeightedDigraph::from_edges(edges, verts);
}

}  // namespace

TEST_CASE("bias of the two-vertex gadget at c = 9/8") {
  auto g = two_cycle(Rat(9, 8));
  CHECK(bias_of(g, "1") == Rat(1, 17));
  CHECK(bias_of(g, "2") == Rat(-1, 17));
}

TEST_CASE("balanced vertex has zero bias") {
  auto g = WeightedDigraph::from_edges({{"a", "b", Rat(3, 2)}, {"b", "a", Rat(3, 2)}});
  CHECK(bias_of(g, "a") == 0);
  CHECK(bias_of(g, "b") == 0);
}

TEST_CASE("bias is undefined on isolated vertices") {
  auto g = WeightedDigraph::from_edges({{"a", "b", Rat(1)}}, {"a", "b", "c"});
  CHECK_THROWS_AS(bias_of(g, "c"), std::domain_error);
  CHECK_THROWS_AS(bias_of(g, "zzz"), std::invalid_argument);
}

TEST_CASE("cut value of the two-vertex gadget") {
  Rat c(9, 8);
  auto g = two_cycle(c);
  auto cv = cut_value(g, assign({{"1", 1}, {"2", 0}}));
  CHECK(cv.satisfied == c);
  CHECK(cv.normalized == Rat(c / (c + 1)));
}

TEST_CASE("all-ones assignment cuts nothing") {
  auto g = two_cycle(Rat(2));
  auto cv = cut_value(g, assign({{"1", 1}, {"2", 1}}));
  CHECK(cv.satisfied == 0);
}

TEST_CASE("four-vertex gadget cut at c = 9/8") {
  Rat c(9, 8);
  auto g = WeightedDigraph::from_edges({{"1", "2", Rat(1)},
                                        {"2", "1", c},
                                        {"3", "4", Rat(1)},
                                        {"4", "3", c},
                                        {"1", "4", Rat(c * c - 1)}});
  auto cv = cut_value(g, assign({{"1", 1}, {"3", 1}, {"2", 0}, {"4", 0}}));
  CHECK(cv.satisfied == Rat(145, 64));  // c^2 + 1
}

TEST_CASE("cut value requires full coverage") {
  auto g = two_cycle(Rat(2));
  CHECK_THROWS_AS(cut_value(g, assign({{"1", 1}})), std::invalid_argument);
}

TEST_CASE("optimum of the two-vertex gadget at c = 2") {
  auto opt = opt_value(two_cycle(Rat(2)), OptMethod::Bruteforce);
  CHECK(opt.normalized == Rat(2, 3));
  CHECK(opt.argmax.bits.at("1") == 1);
  CHECK(opt.argmax.bits.at("2") == 0);
}

TEST_CASE("single edge is fully cuttable") {
  auto g = WeightedDigraph::from_edges({{"u", "v", Rat(1)}});
  CHECK(opt_value(g, OptMethod::Bruteforce).normalized == 1);
}

TEST_CASE("bruteforce and frontier DP agree on 200 random graphs") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng, 14);
    auto bf = opt_value(g, OptMethod::Bruteforce);
    auto dp = opt_value(g, OptMethod::FrontierDP, g.vertices());
    CHECK(bf.normalized == dp.normalized);
    // Both argmaxes must actually achieve the optimum.
    CHECK(cut_value(g, bf.argmax).normalized == bf.normalized);
    CHECK(cut_value(g, dp.argmax).normalized == bf.normalized);
  }
}

TEST_CASE("transposing negates biases and preserves the optimum") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = random_graph(rng, 10);
    auto t = g.transposed();
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (g.is_isolated(v)) continue;
      CHECK(bias_of(g, v) == Rat(-bias_of(t, g.name(v))));
    }
    CHECK(opt_value(g, OptMethod::Bruteforce).normalized ==
          opt_value(t, OptMethod::Bruteforce).normalized);
  }
}

TEST_CASE("uniform rescaling changes nothing") {
  std::mt19937_64 rng(99);
  auto g = random_graph(rng, 8);
  auto s = g.scaled(Rat(7, 3));
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!g.is_isolated(v)) CHECK(bias_of(g, v) == bias_of(s, g.name(v)));
  CHECK(opt_value(g, OptMethod::Bruteforce).normalized ==
        opt_value(s, OptMethod::Bruteforce).normalized);
  Assignment all1;
  for (const auto& v : g.vertices()) all1.bits[v] = 1;
  CHECK(cut_value(g, all1).normalized == cut_value(s, all1).normalized);
}

TEST_CASE("size and width limits are enforced") {
  std::vector<std::tuple<std::string, std::string, Rat>> edges;
  std::vector<std::string> ordering;
  for (int i = 0; i < 25; ++i) {
    if (i > 0) edges.emplace_back("c", "l" + std::to_string(i), Rat(1));
    if (i > 0) ordering.push_back("l" + std::to_string(i));
  }
  auto g = WeightedDigraph::from_edges(edges);
  CHECK_THROWS_AS(opt_value(g, OptMethod::Bruteforce), std::invalid_argument);
  // Star with the center last: every leaf stays on the frontier.
  ordering.push_back("c");
  CHECK(frontier_width(g, ordering) == 24);
  CHECK_THROWS_AS(opt_value(g, OptMethod::FrontierDP, ordering), std::invalid_argument);
}

TEST_CASE("parallel edges merge and self-loops are rejected") {
  auto g = WeightedDigraph::from_edges({{"a", "b", Rat(1, 2)}, {"a", "b", Rat(1, 3)}});
  REQUIRE(g.edges().size() == 1);
  CHECK(g.edges()[0].w == Rat(5, 6));
  CHECK_THROWS_AS(WeightedDigraph::from_edges({{"a", "a", Rat(1)}}), std::invalid_argument);
}
