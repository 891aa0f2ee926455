#include "dicut/selection.hpp"

#include <stdexcept>

namespace dicut {

PLSigmoid make_plsigmoid(const Rat& b) {
  if (b <= 0 || b > 1) throw std::invalid_argument("PL sigmoid intercept must be in (0, 1]");
  return PLSigmoid{b};
}

AntisymPiecewise make_antisym_piecewise(std::vector<Rat> thresholds,
                                        std::vector<Rat> values) {
  if (thresholds.size() != values.size() + 1)
    throw std::invalid_argument("need ell+1 thresholds for ell values");
  if (thresholds.empty() || thresholds.front() < 0)
    throw std::invalid_argument("t_0 must be >= 0");
  for (size_t i = 1; i < thresholds.size(); ++i)
    if (thresholds[i] < thresholds[i - 1])
      throw std::invalid_argument("thresholds must be nondecreasing");
  if (thresholds.back() != 1) throw std::invalid_argument("t_ell must equal 1");
  for (const auto& p : values)
    if (p < 0 || p > 1) throw std::invalid_argument("values must lie in [0, 1]");
  return AntisymPiecewise{std::move(thresholds), std::move(values)};
}

Rat eval_selection(const PLSigmoid& s, const Rat& x) {
  if (x < -1 || x > 1) throw std::domain_error("selection argument outside [-1, +1]");
  if (x <= -s.b) return Rat(0);
  if (x >= s.b) return Rat(1);
  return Rat(1, 2) + x / (2 * s.b);
}

Rat eval_selection(const AntisymPiecewise& s, const Rat& x) {
  if (x < -1 || x > 1) throw std::domain_error("selection argument outside [-1, +1]");
  if (x < 0) return Rat(1) - eval_selection(s, Rat(-x));
  if (x <= s.thresholds[0]) return Rat(1, 2);
  // Smallest i with x <= t_i; then x > t_{i-1}, so x is in I_{+i}. Empty
  // intervals (t_{i-1} = t_i) are skipped automatically.
  for (int i = 1; i < static_cast<int>(s.thresholds.size()); ++i)
    if (x <= s.thresholds[i]) return s.values[i - 1];
  throw std::logic_error("unreachable: t_ell = 1 covers the domain");
}

Rat eval_selection(const Selection& s, const Rat& x) {
  return std::visit([&](const auto& f) { return eval_selection(f, x); }, s);
}

AntisymPiecewise discretize_plsigmoid(const Rat& b, int ell) {
  if (ell < 2) throw std::invalid_argument("discretization needs ell >= 2");
  PLSigmoid sig = make_plsigmoid(b);
  std::vector<Rat> t(ell + 1), p(ell);
  for (int i = 0; i <= ell - 1; ++i) t[i] = rat_frac(i, ell - 1) * b;
  t[ell] = 1;
  for (int i = 1; i <= ell - 1; ++i)
    p[i - 1] = (eval_selection(sig, t[i - 1]) + eval_selection(sig, t[i])) / 2;
  p[ell - 1] = 1;
  return make_antisym_piecewise(std::move(t), std::move(p));
}

Rat class_value(const AntisymPiecewise& s, int i) {
  int ell = s.ell();
  if (i < -ell || i > ell) throw std::out_of_range("class index");
  if (i == 0) return Rat(1, 2);
  if (i > 0) return s.values[i - 1];
  return Rat(1) - s.values[-i - 1];
}

Rat class_inf(const AntisymPiecewise& s, int i) {
  int ell = s.ell();
  if (i < -ell || i > ell) throw std::out_of_range("class index");
  if (i == 0) return -s.thresholds[0];
  if (i > 0) return s.thresholds[i - 1];
  return -s.thresholds[-i];
}

Rat class_sup(const AntisymPiecewise& s, int i) {
  int ell = s.ell();
  if (i < -ell || i > ell) throw std::out_of_range("class index");
  if (i == 0) return s.thresholds[0];
  if (i > 0) return s.thresholds[i];
  return -s.thresholds[-i - 1];
}

}  // namespace dicut
