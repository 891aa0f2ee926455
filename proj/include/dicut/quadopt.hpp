#pragma once

#include <vector>

#include "dicut/quadform.hpp"

namespace dicut {

struct BoxMaxResult {
  Rat value;
  std::vector<Rat> argmax;
  // True when the maximum is attained on a positive-dimensional stationary
  // set (singular Hessian on some face), e.g. a whole line of maximizers.
  bool degenerate = false;
};

// Exact global maximum of q over [0,1]^n, n <= 6. Enumerates the 3^n faces;
// on each face either the stationary point of the restricted quadratic is a
// candidate, or, when the restricted Hessian is singular, the stationary
// affine set is intersected with the face exactly (small rational LP) and
// its constant value is a candidate. Corners are the zero-dimensional faces.
BoxMaxResult maximize_over_box(const QuadraticForm& q);

}  // namespace dicut
