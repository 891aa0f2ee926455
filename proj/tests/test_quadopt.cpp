#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dicut/quadopt.hpp"

using namespace dicut;

namespace {

QuadraticForm antisym8_quadratic() {
  // 53.6175 - 36 p^2 + p (70.02 - 36 q) + 35.01 q - 9 q^2
  QuadraticForm q(2);
  q.add_constant(rat_from_string("53.6175"));
  q.add_quadratic(0, 0, Rat(-36));
  q.add_quadratic(0, 1, Rat(-36));
  q.add_quadratic(1, 1, Rat(-9));
  q.add_linear(0, rat_from_string("70.02"));
  q.add_linear(1, rat_from_string("35.01"));
  return q;
}

}  // namespace

TEST_CASE("degenerate concave quadratic maximizes on a stationary line") {
  QuadraticForm q = antisym8_quadratic();
  BoxMaxResult r = maximize_over_box(q);
  CHECK(r.value == rat_from_string("87.664725"));
  CHECK(r.degenerate);
  // The argmax lies on q = 1.945 - 2p, inside the box.
  REQUIRE(r.argmax.size() == 2);
  CHECK(r.argmax[1] == rat_from_string("1.945") - 2 * r.argmax[0]);
  for (const auto& x : r.argmax) {
    CHECK(x >= 0);
    CHECK(x <= 1);
  }
  // Named point on the line attains the same value.
  std::vector<Rat> pt{rat_from_string("0.6"), rat_from_string("0.745")};
  CHECK(q.eval(pt) == r.value);
}

TEST_CASE("strictly concave interior maximum with exact argmax") {
  // The weighted-union quadratic at lambda = 15/32, c = 9/8 (variables p, q).
  QuadraticForm q(2);
  q.add_quadratic(0, 0, Rat(-289, 256));
  q.add_quadratic(1, 1, Rat(-289, 256));
  q.add_quadratic(0, 1, Rat(-2329, 2048));
  q.add_linear(0, Rat(3681, 2048));
  q.add_linear(1, Rat(3272, 2048));
  BoxMaxResult r = maximize_over_box(q);
  CHECK_FALSE(r.degenerate);
  CHECK(r.argmax[0] == Rat(1352, 2295));
  CHECK(r.argmax[1] == Rat(943, 2295));
}

TEST_CASE("separable concave form peaks at the center") {
  QuadraticForm q(2);
  q.add_quadratic(0, 0, Rat(-1));
  q.add_quadratic(1, 1, Rat(-1));
  q.add_linear(0, Rat(1));
  q.add_linear(1, Rat(1));
  BoxMaxResult r = maximize_over_box(q);
  CHECK(r.value == Rat(1, 2));
  CHECK(r.argmax[0] == Rat(1, 2));
  CHECK(r.argmax[1] == Rat(1, 2));
}

TEST_CASE("linear forms maximize at corners") {
  QuadraticForm q(3);
  q.add_linear(0, Rat(1));
  q.add_linear(1, Rat(-2));
  q.add_linear(2, Rat(3));
  BoxMaxResult r = maximize_over_box(q);
  CHECK(r.value == Rat(4));
  CHECK(r.argmax == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
}

TEST_CASE("dimension guard") {
  CHECK_THROWS_AS(maximize_over_box(QuadraticForm(7)), std::invalid_argument);
}

TEST_CASE("returned value dominates random box points and corners") {
  std::mt19937_64 rng(20240821);
  std::uniform_int_distribution<int> coef(-8, 8), num(0, 16);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    QuadraticForm q(n);
    for (int i = 0; i < n; ++i) {
      q.add_linear(i, rat_frac(coef(rng), 3));
      for (int j = i; j < n; ++j) q.add_quadratic(i, j, rat_frac(coef(rng), 2));
    }
    BoxMaxResult r = maximize_over_box(q);
    for (int s = 0; s < 200; ++s) {
      std::vector<Rat> x(n);
      for (int i = 0; i < n; ++i) x[i] = rat_frac(num(rng), 16);
      CHECK(q.eval(x) <= r.value);
    }
    for (int corner = 0; corner < (1 << n); ++corner) {
      std::vector<Rat> x(n);
      for (int i = 0; i < n; ++i) x[i] = Rat((corner >> i) & 1);
      CHECK(q.eval(x) <= r.value);
    }
  }
}

TEST_CASE("KKT conditions hold at strictly concave argmaxes") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    // Diagonally dominant negative-definite Hessian.
    QuadraticForm q(n);
    for (int i = 0; i < n; ++i) {
      q.add_quadratic(i, i, Rat(-8 - (coef(rng) & 3)));
      for (int j = i + 1; j < n; ++j) q.add_quadratic(i, j, rat_frac(coef(rng), 2));
      q.add_linear(i, Rat(coef(rng)));
    }
    BoxMaxResult r = maximize_over_box(q);
    auto g = q.gradient(r.argmax);
    for (int i = 0; i < n; ++i) {
      if (r.argmax[i] == 0)
        CHECK(g[i] <= 0);  // pushing up from 0 must not help
      else if (r.argmax[i] == 1)
        CHECK(g[i] >= 0);  // pushing down from 1 must not help
      else
        CHECK(g[i] == 0);
    }
  }
}
