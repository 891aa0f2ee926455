#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dicut/digraph.hpp"
#include "dicut/quadform.hpp"
#include "dicut/selection.hpp"

namespace dicut {

// Partition of a graph's non-isolated vertices into bias classes. Classes
// are the distinct bias values in ascending order. With antisym_ties, a
// negative class is tied to 1 minus its positive partner (which must exist)
// and the zero class is pinned to 1/2; the free variables are then exactly
// the positive classes, in ascending order.
struct ClassMap {
  std::vector<Rat> classes;
  std::vector<int> vertex_class;  // per vertex index; -1 for isolated
  bool antisym_ties = false;

  int num_classes() const { return static_cast<int>(classes.size()); }
};

ClassMap classmap_of(const WeightedDigraph& g, bool antisym_ties);

// Checks that every non-isolated vertex's bias equals its class value
// exactly; throws std::invalid_argument otherwise.
void validate_classmap(const WeightedDigraph& g, const ClassMap& cm);

struct ExpectedValue {
  Rat satisfied;   // expected satisfied weight
  Rat normalized;  // satisfied / m_G
};

// Expected cut weight of the oblivious assignment drawn from S applied to
// vertex biases: sum over edges of w * S(bias tail) * (1 - S(bias head)).
ExpectedValue expected_value(const WeightedDigraph& g, const Selection& s);

// Same, with one probability per class of the map (probs aligned with
// cm.classes).
ExpectedValue expected_value_with_class_probs(const WeightedDigraph& g, const ClassMap& cm,
                                              std::span<const Rat> probs);

struct RatioResult {
  Rat ratio;
  bool upper_bound_only;  // true when the denominator is a reference cut
  Rat numerator;          // expected satisfied weight
  Rat denominator;        // optimal (or reference) cut weight
};

// expected / exact optimum; method restrictions of opt_value apply.
RatioResult ratio_on_graph(const WeightedDigraph& g, const Selection& s,
                           OptMethod method = OptMethod::Bruteforce,
                           const std::vector<std::string>& ordering = {});

// expected / cut(reference): an upper bound on the true ratio, flagged.
RatioResult ratio_on_graph_vs_reference(const WeightedDigraph& g, const Selection& s,
                                        const Assignment& reference);

// The expected cut weight as a polynomial in the per-class probabilities,
// after antisymmetry substitutions. Variables are the free classes.
struct ClassQuadratic {
  QuadraticForm form;
  std::vector<int> free_classes;        // class index per variable
  std::vector<std::string> var_names;   // "p(<bias>)" per variable
};

ClassQuadratic class_quadratic(const WeightedDigraph& g, const ClassMap& cm);

}  // namespace dicut
