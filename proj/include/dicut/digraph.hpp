#pragma once

#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "dicut/rational.hpp"

namespace dicut {

// Weighted directed graph (V, w): opaque string vertex ids, strictly
// positive edge weights, no self-loops. Parallel inputs are merged by
// summing. Immutable after construction.
class WeightedDigraph {
 public:
  struct Edge {
    int tail;
    int head;
    Rat w;
  };

  WeightedDigraph() = default;

  // Vertices are kept in first-seen order; extra_vertices lets callers pin
  // isolated vertices or a fixed ordering up front.
  static WeightedDigraph from_edges(
      const std::vector<std::tuple<std::string, std::string, Rat>>& edges,
      const std::vector<std::string>& extra_vertices = {});

  int num_vertices() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  // -1 when the id is unknown.
  int index_of(std::string_view id) const;

  std::span<const Edge> edges() const { return edges_; }
  const Rat& total_weight() const { return total_; }
  const Rat& out_weight(int v) const { return out_[v]; }
  const Rat& in_weight(int v) const { return in_[v]; }
  Rat degree(int v) const { return out_[v] + in_[v]; }
  bool is_isolated(int v) const { return out_[v] == 0 && in_[v] == 0; }

  WeightedDigraph transposed() const;
  WeightedDigraph scaled(const Rat& lambda) const;

  // Disjoint union with edge weights scaled by lambda_a / lambda_b; vertex
  // ids are prefixed to keep the parts apart.
  static WeightedDigraph weighted_union(const WeightedDigraph& a, const Rat& lambda_a,
                                        const WeightedDigraph& b, const Rat& lambda_b,
                                        const std::string& prefix_a = "a:",
                                        const std::string& prefix_b = "b:");

 private:
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> index_;
  std::vector<Edge> edges_;
  std::vector<Rat> out_, in_;
  Rat total_ = 0;

  friend WeightedDigraph finish_graph(std::vector<std::string> names,
                                      std::map<std::pair<int, int>, Rat> w);
};

// Cut, i.e. a 0/1 assignment of vertices. Must cover every non-isolated
// vertex of the graph it is used with.
struct Assignment {
  std::map<std::string, int, std::less<>> bits;
};

// bias(v) = (outdeg - indeg) / deg. Throws std::domain_error on isolated
// vertices, where the quantity is undefined.
Rat bias_of(const WeightedDigraph& g, int v);
Rat bias_of(const WeightedDigraph& g, std::string_view vertex);

struct CutValue {
  Rat satisfied;   // total weight of edges cut (tail 1, head 0)
  Rat normalized;  // satisfied / m_G
};

CutValue cut_value(const WeightedDigraph& g, const Assignment& x);

enum class OptMethod { Bruteforce, FrontierDP };

struct OptResult {
  Rat normalized;
  Assignment argmax;
};

// Exact maximum cut value. Bruteforce enumerates all assignments (|V| <= 24,
// Gray-code order). FrontierDP runs over the supplied vertex ordering and
// requires frontier width <= 20.
OptResult opt_value(const WeightedDigraph& g, OptMethod method,
                    const std::vector<std::string>& ordering = {});

// Max, over prefixes of the given ordering, of the number of already-placed
// vertices that still have an edge into the unplaced suffix.
int frontier_width(const WeightedDigraph& g, const std::vector<std::string>& ordering);

}  // namespace dicut
