#pragma once

#include <string>
#include <vector>

#include "dicut/ratio_lp.hpp"

namespace dicut {

struct SweepRow {
  int ell = 0;
  int x = 0;  // class-count label (adopted axis interpretation)
  Rat b;
  double ratio = 0;
  bool ok = false;
  std::string error;
};

// Class-count label for a discretization with ell positive classes. The
// adopted interpretation is x = ell; the acceptance suite validates it
// against the published sweep coordinates (the alternative 2*ell+1 counts
// classes of both signs).
int sweep_x_of_ell(int ell);
int sweep_ell_of_x(int x);

// compute_ratio(discretize_plsigmoid(b, ell)) per ell, evaluated on up to
// `workers` threads, emitted in ascending ell. Solver failures land in the
// row's error field without aborting the sweep.
std::vector<SweepRow> sweep_discretization(const Rat& b, std::vector<int> ells, LPMode mode,
                                           int workers = 0);

struct InterceptSearchResult {
  Rat best_b;
  double best_ratio = 0;
  std::vector<std::pair<Rat, double>> trace;  // every evaluation, in order
};

// Ternary search maximizing b -> ratio of the discretized sigmoid. The
// objective is not certified unimodal; the trace lets callers audit.
InterceptSearchResult search_intercept(int ell, const Rat& lo, const Rat& hi, int iters,
                                       LPMode mode);

// OBLIVIOUS_WORKERS env var, else hardware concurrency.
int default_workers();

}  // namespace dicut
