#pragma once

#include <variant>
#include <vector>

#include "dicut/rational.hpp"

namespace dicut {

// S-shaped piecewise-linear selection function: 0 below -b, 1 above +b,
// linear with slope 1/(2b) in between. Intercept b in (0, 1].
struct PLSigmoid {
  Rat b;
};

// Antisymmetric piecewise-constant selection function with ell positive
// classes. thresholds = (t_0, ..., t_ell) with 0 <= t_0 <= ... <= t_ell = 1;
// values = (p_1, ..., p_ell) in [0,1]. Induced map:
//   (+t_{i-1}, +t_i] -> p_i,   [-t_i, -t_{i-1}) -> 1 - p_i,   [-t_0, +t_0] -> 1/2.
struct AntisymPiecewise {
  std::vector<Rat> thresholds;
  std::vector<Rat> values;

  int ell() const { return static_cast<int>(values.size()); }
};

using Selection = std::variant<PLSigmoid, AntisymPiecewise>;

PLSigmoid make_plsigmoid(const Rat& b);
AntisymPiecewise make_antisym_piecewise(std::vector<Rat> thresholds,
                                        std::vector<Rat> values);

Rat eval_selection(const PLSigmoid& s, const Rat& x);
Rat eval_selection(const AntisymPiecewise& s, const Rat& x);
Rat eval_selection(const Selection& s, const Rat& x);

// Step function agreeing with PLSigmoid_b outside (-b, +b): thresholds
// t_i = (i/(ell-1)) b for i < ell and t_ell = 1; each interior value is the
// average of the sigmoid at the interval's endpoints, and p_ell = 1.
// Requires ell >= 2.
AntisymPiecewise discretize_plsigmoid(const Rat& b, int ell);

// Signed class index i in [-ell, +ell]: value of the induced selection
// function on interval I_i, and inf/sup of I_i.
Rat class_value(const AntisymPiecewise& s, int i);
Rat class_inf(const AntisymPiecewise& s, int i);
Rat class_sup(const AntisymPiecewise& s, int i);

}  // namespace dicut
