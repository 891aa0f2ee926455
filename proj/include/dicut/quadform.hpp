#pragma once

#include <span>
#include <string>
#include <vector>

#include "dicut/rational.hpp"

namespace dicut {

// q(x) = x^T A x + b^T x + c with A symmetric, exact rational entries.
class QuadraticForm {
 public:
  explicit QuadraticForm(int n)
      : n_(n), quad_(static_cast<size_t>(n) * n, Rat(0)), lin_(n, Rat(0)), const_(0) {}

  int dim() const { return n_; }
  const Rat& quad(int i, int j) const { return quad_[static_cast<size_t>(i) * n_ + j]; }
  const Rat& lin(int i) const { return lin_[i]; }
  const Rat& constant() const { return const_; }

  void add_constant(const Rat& c) { const_ += c; }
  void add_linear(int i, const Rat& c) { lin_[i] += c; }
  // Adds c * x_i * x_j, splitting across the two symmetric entries.
  void add_quadratic(int i, int j, const Rat& c);

  // Adds w * u(x) * v(x) for affine forms u, v given as (constant, sparse
  // coefficient list).
  struct Affine {
    Rat constant;
    std::vector<std::pair<int, Rat>> coeffs;
  };
  void add_product(const Affine& u, const Affine& v, const Rat& w);

  Rat eval(std::span<const Rat> x) const;
  // gradient = 2 A x + b
  std::vector<Rat> gradient(std::span<const Rat> x) const;

  // Substitutes x_k = slope_k * t + intercept_k, yielding coefficients
  // (A2, A1, A0) of a univariate quadratic in t.
  struct Univariate {
    Rat a2, a1, a0;
    Rat eval(const Rat& t) const { return (a2 * t + a1) * t + a0; }
  };
  Univariate restrict_affine(std::span<const Rat> slope, std::span<const Rat> intercept) const;

  std::string to_string(std::span<const std::string> var_names = {}) const;

 private:
  int n_;
  std::vector<Rat> quad_;
  std::vector<Rat> lin_;
  Rat const_;
};

}  // namespace dicut
