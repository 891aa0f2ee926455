#include "dicut/oblivious.hpp"

#include <algorithm>
#include <stdexcept>

namespace dicut {

ClassMap classmap_of(const WeightedDigraph& g, bool antisym_ties) {
  ClassMap cm;
  cm.antisym_ties = antisym_ties;
  std::vector<Rat> biases(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!g.is_isolated(v)) {
      biases[v] = bias_of(g, v);
      cm.classes.push_back(biases[v]);
    }
  std::sort(cm.classes.begin(), cm.classes.end());
  cm.classes.erase(std::unique(cm.classes.begin(), cm.classes.end()), cm.classes.end());
  cm.vertex_class.assign(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.is_isolated(v)) continue;
    auto it = std::lower_bound(cm.classes.begin(), cm.classes.end(), biases[v]);
    cm.vertex_class[v] = static_cast<int>(it - cm.classes.begin());
  }
  if (antisym_ties) {
    // Every negative class needs its positive partner to substitute into.
    for (const auto& b : cm.classes)
      if (b < 0 && !std::binary_search(cm.classes.begin(), cm.classes.end(), Rat(-b)))
        throw std::invalid_argument("antisym ties: class " + rat_to_string(b) +
                                    " has no positive partner");
  }
  return cm;
}

void validate_classmap(const WeightedDigraph& g, const ClassMap& cm) {
  if (static_cast<int>(cm.vertex_class.size()) != g.num_vertices())
    throw std::invalid_argument("classmap size mismatch");
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.is_isolated(v)) continue;
    int k = cm.vertex_class[v];
    if (k < 0 || k >= cm.num_classes())
      throw std::invalid_argument("vertex '" + g.name(v) + "' unmapped");
    if (bias_of(g, v) != cm.classes[k])
      throw std::invalid_argument("vertex '" + g.name(v) +
                                  "' bias differs from its class value");
  }
}

ExpectedValue expected_value(const WeightedDigraph& g, const Selection& s) {
  if (g.total_weight() == 0) throw std::domain_error("graph has zero total weight");
  // Cache S(bias) per vertex.
  std::vector<Rat> prob(g.num_vertices(), Rat(0));
  std::vector<bool> have(g.num_vertices(), false);
  auto p_of = [&](int v) -> const Rat& {
    if (!have[v]) {
      prob[v] = eval_selection(s, bias_of(g, v));
      have[v] = true;
    }
    return prob[v];
  };
  ExpectedValue out{Rat(0), Rat(0)};
  for (const auto& e : g.edges()) out.satisfied += e.w * p_of(e.tail) * (1 - p_of(e.head));
  out.normalized = out.satisfied / g.total_weight();
  return out;
}

ExpectedValue expected_value_with_class_probs(const WeightedDigraph& g, const ClassMap& cm,
                                              std::span<const Rat> probs) {
  if (static_cast<int>(probs.size()) != cm.num_classes())
    throw std::invalid_argument("one probability per class required");
  ExpectedValue out{Rat(0), Rat(0)};
  for (const auto& e : g.edges()) {
    const Rat& pt = probs[cm.vertex_class[e.tail]];
    const Rat& ph = probs[cm.vertex_class[e.head]];
    out.satisfied += e.w * pt * (1 - ph);
  }
  out.normalized = out.satisfied / g.total_weight();
  return out;
}

RatioResult ratio_on_graph(const WeightedDigraph& g, const Selection& s, OptMethod method,
                           const std::vector<std::string>& ordering) {
  ExpectedValue ev = expected_value(g, s);
  OptResult opt = opt_value(g, method, ordering);
  if (opt.normalized == 0) throw std::domain_error("graph has zero optimum");
  Rat denom = opt.normalized * g.total_weight();
  return RatioResult{ev.satisfied / denom, false, ev.satisfied, denom};
}

RatioResult ratio_on_graph_vs_reference(const WeightedDigraph& g, const Selection& s,
                                        const Assignment& reference) {
  ExpectedValue ev = expected_value(g, s);
  CutValue ref = cut_value(g, reference);
  if (ref.satisfied == 0) throw std::domain_error("reference cut has zero weight");
  return RatioResult{ev.satisfied / ref.satisfied, true, ev.satisfied, ref.satisfied};
}

ClassQuadratic class_quadratic(const WeightedDigraph& g, const ClassMap& cm) {
  validate_classmap(g, cm);
  ClassQuadratic out{QuadraticForm(0), {}, {}};

  // Variable layout and, per class, its affine expression in the variables.
  std::vector<QuadraticForm::Affine> expr(cm.num_classes());
  std::vector<int> var_of_class(cm.num_classes(), -1);
  if (cm.antisym_ties) {
    for (int k = 0; k < cm.num_classes(); ++k)
      if (cm.classes[k] > 0) {
        var_of_class[k] = static_cast<int>(out.free_classes.size());
        out.free_classes.push_back(k);
      }
    for (int k = 0; k < cm.num_classes(); ++k) {
      const Rat& b = cm.classes[k];
      if (b == 0) {
        expr[k] = {Rat(1, 2), {}};
      } else if (b > 0) {
        expr[k] = {Rat(0), {{var_of_class[k], Rat(1)}}};
      } else {
        auto it = std::lower_bound(cm.classes.begin(), cm.classes.end(), Rat(-b));
        int partner = static_cast<int>(it - cm.classes.begin());
        expr[k] = {Rat(1), {{var_of_class[partner], Rat(-1)}}};
      }
    }
  } else {
    for (int k = 0; k < cm.num_classes(); ++k) {
      var_of_class[k] = static_cast<int>(out.free_classes.size());
      out.free_classes.push_back(k);
      expr[k] = {Rat(0), {{var_of_class[k], Rat(1)}}};
    }
  }
  for (int k : out.free_classes)
    out.var_names.push_back("p(" + rat_to_string(cm.classes[k]) + ")");

  QuadraticForm q(static_cast<int>(out.free_classes.size()));
  for (const auto& e : g.edges()) {
    const auto& xt = expr[cm.vertex_class[e.tail]];
    const auto& xh = expr[cm.vertex_class[e.head]];
    // x_tail * (1 - x_head)
    QuadraticForm::Affine one_minus{Rat(1) - xh.constant, {}};
    for (const auto& [j, c] : xh.coeffs) one_minus.coeffs.emplace_back(j, Rat(-c));
    q.add_product(xt, one_minus, e.w);
  }
  out.form = std::move(q);
  return out;
}

}  // namespace dicut
