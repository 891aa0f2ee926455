#pragma once

#include <string>
#include <vector>

#include "dicut/digraph.hpp"
#include "dicut/oblivious.hpp"

namespace dicut {

// A lower-bound gadget graph together with its high-value reference cut and
// bias classmap.
struct NamedInstance {
  WeightedDigraph g;
  Assignment reference;
  ClassMap classes;
};

// Two-vertex gadget: 1 -> 2 with weight c, 2 -> 1 with weight 1; biases
// +-(c-1)/(c+1); the cut 1->1, 2->0 satisfies weight c. Requires c > 1.
NamedInstance two_vertex(const Rat& c);

// Four-vertex gadget: two opposite 2-cycles (weights 1 and c) bridged by an
// edge of weight c^2-1; the cut {1,3}->1 satisfies weight c^2+1.
NamedInstance four_vertex(const Rat& c);

// Eight-vertex instance with biases -0.1, 0, +0.1, +0.2 and fixed decimal
// weights; its reference cut has weight 179.28.
NamedInstance antisym8();

// The two six- and four-vertex graphs of the earlier antisymmetric bound;
// reference cuts have weights 2c^2 and 2c.
NamedInstance fj_g1(const Rat& c);
NamedInstance fj_g2(const Rat& c);

// 36-vertex instance with biases -0.475 + 0.05(i-1) on vertices i and i';
// weights reconstructed from the bias constraints (reconstruct_glp_weights).
NamedInstance glp36();

// Solves the 36 homogeneous per-vertex bias equations over the 37 edge
// weights; asserts a one-dimensional, strictly positive nullspace and
// normalizes w(1 -> 3') = 1.
WeightedDigraph reconstruct_glp_weights();

// Vertex ordering with small frontier width for exact DP on glp36.
std::vector<std::string> glp_frontier_ordering();

// CLI-facing constructor dispatch; name in {two_vertex, four_vertex,
// antisym8, fj_g1, fj_g2, glp36}; c required for the parameterized ones.
NamedInstance named_instance(const std::string& name, const Rat* c = nullptr);

enum class BoundId {
  PlsigmoidHalf,
  PlsigmoidFamily,
  General,
  Antisym,
  FjAntisym,
  FjGeneralTradeoff,
};

const char* bound_id_name(BoundId id);
BoundId parse_bound_id(const std::string& name);

struct BoundReport {
  std::string id;
  bool pass = false;
  bool exact = false;      // `value` holds the exact rational
  Rat value = Rat(0);
  double value_decimal = 0;
  std::string target;
  std::string direction;   // "<=", ">=", "==", "~="
  double tolerance = 0;    // for "~="
  std::string notes;       // denominator/optimizer provenance
  std::vector<std::pair<std::string, std::string>> details;
};

// Mechanically re-derives one lower-bound theorem; never throws on a failed
// certification (pass=false carries both values instead).
BoundReport verify_bound(BoundId id);
std::vector<BoundReport> verify_all_bounds();

}  // namespace dicut
