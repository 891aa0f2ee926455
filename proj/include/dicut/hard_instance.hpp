#pragma once

#include <vector>

#include "dicut/digraph.hpp"
#include "dicut/simplex.hpp"

namespace dicut {

// Bias classes t_1 < ... < t_L plus a finite family of per-class assignment
// probability vectors, viewed as oblivious algorithms on graphs whose
// vertices all have biases among the t_i.
struct HardInstanceSpec {
  std::vector<Rat> biases;
  std::vector<std::vector<Rat>> family;
};

// Vectors for every antisymmetric selection on the given biases: zero class
// fixed at 1/2, positive classes on a grid over [1/2, 1] with the given
// step, negative classes tied to 1 minus their positive partner (or gridded
// over [0, 1/2] when unpartnered).
std::vector<std::vector<Rat>> antisym_family_grid(const std::vector<Rat>& biases,
                                                  const Rat& step);

struct MinmaxLP {
  LPProblem lp;
  // Variables: one per ordered vertex pair over {0,1} x [L], then z (free,
  // epigraph of the max over the family).
  std::vector<std::pair<int, int>> pairs;  // (tail vertex id, head vertex id)
  int z_var = 0;
  int num_vertices = 0;  // 2L; vertex id = bit * L + class index
  int cut_row = 0;       // after the |family| objective rows
};

MinmaxLP build_minmax_lp(const HardInstanceSpec& spec);

struct HardGraphResult {
  WeightedDigraph g;
  Assignment reference;           // bit-1 vertices -> 1; cut weight exactly 1
  Rat lp_objective;               // min over graphs of max_p (expected weight
                                  // cut by p), with the reference cut
                                  // normalized to 1: a ratio upper bound
  Rat minmax_normalized;          // max_p of the normalized oblivious value
  std::vector<Rat> per_p_normalized;
  int argmax_p = -1;
  bool weights_exact = true;      // float mode: rational reconstruction held
};

// Solves the LP and converts the solution into a worst-case graph. Every
// non-isolated vertex has bias exactly equal to its class (in exact mode,
// and in float mode whenever reconstruction verifies).
HardGraphResult find_hard_graph(const HardInstanceSpec& spec, LPMode mode);

}  // namespace dicut
