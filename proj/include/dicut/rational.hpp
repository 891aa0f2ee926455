#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dicut {

// Exact rational scalar used throughout the library. Weights, biases,
// probabilities and LP data are all kept as rationals; doubles appear only
// inside the float LP backend and in rendered output.
using Rat = mpq_class;

// Parses "9/8", "-3", "6.2775", "1e-3", "2.5e2". Decimal literals become
// exact fractions over powers of ten.
Rat rat_from_string(std::string_view s);

// "n/d", or just "n" when the denominator is 1.
std::string rat_to_string(const Rat& q);

double rat_to_double(const Rat& q);

// Exact dyadic rational equal to the double (finite doubles only).
Rat rat_from_double(double x);

// Deterministic decimal rendering with 17 significant digits; round-trips
// through strtod.
std::string decimal17(double x);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// n/d in canonical form. Use this instead of the raw two-argument
// mpq_class constructor, which keeps non-coprime inputs as-is and then
// breaks exact comparisons.
inline Rat rat_frac(long n, long d) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

// Element of Q(sqrt 2), used for the closed-form two-vertex bound where the
// optimal parameter is irrational.
struct Sqrt2Num {
  Rat a;  // rational part
  Rat b;  // coefficient of sqrt(2)

  Sqrt2Num() = default;
  Sqrt2Num(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit Sqrt2Num(const Rat& r) : a(r), b(0) {}

  Sqrt2Num operator+(const Sqrt2Num& o) const { return {a + o.a, b + o.b}; }
  Sqrt2Num operator-(const Sqrt2Num& o) const { return {a - o.a, b - o.b}; }
  Sqrt2Num operator*(const Sqrt2Num& o) const {
    return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
  }
  Sqrt2Num inverse() const;
  Sqrt2Num operator/(const Sqrt2Num& o) const { return *this * o.inverse(); }
  bool operator==(const Sqrt2Num& o) const { return a == o.a && b == o.b; }

  // Sign of a + b*sqrt(2), decided by exact rational comparisons.
  int sign() const;
  bool operator<(const Sqrt2Num& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const Sqrt2Num& o) const { return (*this - o).sign() <= 0; }
  double to_double() const;
};

}  // namespace dicut
