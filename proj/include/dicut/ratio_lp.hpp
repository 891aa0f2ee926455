#pragma once

#include <cstdint>
#include <vector>

#include "dicut/digraph.hpp"
#include "dicut/selection.hpp"
#include "dicut/simplex.hpp"

namespace dicut {

// One endpoint slot of a pair type: a sign in {+1,-1} and a signed bias
// class in [-ell, +ell]. Semantically, sign +1 means the endpoint literal is
// positive after renaming the optimal assignment to all-ones: the slot is
// either the tail of an edge assigned 1 (class i), or the head of an edge
// assigned 0 (class -i). Sign -1 is the reverse.
struct LiteralSlot {
  int sign;         // +1 or -1
  int class_index;  // signed, in [-ell, +ell]

  bool operator==(const LiteralSlot&) const = default;
  auto operator<=>(const LiteralSlot&) const = default;
};

// Unordered multiset of exactly two slots; aggregates all edges with the
// same endpoint classes/signs. C+ are the types with both signs +1 (the
// edges satisfied by the renamed optimal assignment).
struct PairType {
  LiteralSlot a, b;  // a <= b canonically
  bool in_c_plus() const { return a.sign == 1 && b.sign == 1; }
};

// The approximation-ratio LP for an antisymmetric piecewise-constant
// selection function: variables w(c) >= 0 per pair type; objective
// sum p(c) w(c) with p(c) the probability the oblivious assignment
// satisfies an edge of that type; the weight satisfied by the optimal
// assignment is normalized to 1; and per class the aggregated out/in
// weights must realize a bias inside the class interval.
struct RatioLP {
  LPProblem lp;
  int ell = 0;
  std::vector<PairType> pair_types;  // per LP variable
  int cut_row = 0;                   // sum_{C+} w = 1
  // Rows 1 + 2k (>= 0, lower) and 2 + 2k (<= 0, upper) for class k - ell.

  int num_classes() const { return 2 * ell + 1; }
};

RatioLP build_ratio_lp(const AntisymPiecewise& s);

// Explicit dual of the ratio LP (one variable per constraint); its optimal
// value is the negated ratio under the library's min convention.
LPProblem ratio_lp_dual(const RatioLP& r);

struct RatioValue {
  Rat value;
  LPSolution solution;
};

// alpha(Obl_S) for the induced selection function.
RatioValue compute_ratio(const AntisymPiecewise& s, LPMode mode);

struct WitnessGraph {
  WeightedDigraph g;
  Assignment reference;        // optimal-by-construction cut of weight ~1
  Rat lp_value;
  bool used_self_pair_types;   // weight on {(+1,i),(-1,i)} types (two copies
                               // of a class vertex are then materialized)
  bool perturbed;              // boundary-collision nudge applied
};

// Decodes a solved ratio LP back into a concrete worst-case graph whose
// ratio (against the built-in reference cut) reproduces the LP value.
WitnessGraph extract_witness_graph(const LPSolution& sol, const RatioLP& r,
                                   const AntisymPiecewise& s);

}  // namespace dicut
