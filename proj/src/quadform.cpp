#include "dicut/quadform.hpp"

#include <sstream>
#include <stdexcept>

namespace dicut {

void QuadraticForm::add_quadratic(int i, int j, const Rat& c) {
  if (i == j) {
    quad_[static_cast<size_t>(i) * n_ + i] += c;
  } else {
    Rat half = c / 2;
    quad_[static_cast<size_t>(i) * n_ + j] += half;
    quad_[static_cast<size_t>(j) * n_ + i] += half;
  }
}

void QuadraticForm::add_product(const Affine& u, const Affine& v, const Rat& w) {
  if (w == 0) return;
  add_constant(w * u.constant * v.constant);
  for (const auto& [i, cu] : u.coeffs) add_linear(i, w * cu * v.constant);
  for (const auto& [j, cv] : v.coeffs) add_linear(j, w * cv * u.constant);
  for (const auto& [i, cu] : u.coeffs)
    for (const auto& [j, cv] : v.coeffs) add_quadratic(i, j, w * cu * cv);
}

Rat QuadraticForm::eval(std::span<const Rat> x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("dimension mismatch");
  Rat acc = const_;
  for (int i = 0; i < n_; ++i) {
    acc += lin_[i] * x[i];
    for (int j = 0; j < n_; ++j) acc += quad(i, j) * x[i] * x[j];
  }
  return acc;
}

std::vector<Rat> QuadraticForm::gradient(std::span<const Rat> x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("dimension mismatch");
  std::vector<Rat> g(n_, Rat(0));
  for (int i = 0; i < n_; ++i) {
    g[i] = lin_[i];
    for (int j = 0; j < n_; ++j) g[i] += 2 * quad(i, j) * x[j];
  }
  return g;
}

QuadraticForm::Univariate QuadraticForm::restrict_affine(std::span<const Rat> slope,
                                                         std::span<const Rat> intercept) const {
  if (static_cast<int>(slope.size()) != n_ || static_cast<int>(intercept.size()) != n_)
    throw std::invalid_argument("dimension mismatch");
  Univariate u{Rat(0), Rat(0), const_};
  for (int i = 0; i < n_; ++i) {
    u.a1 += lin_[i] * slope[i];
    u.a0 += lin_[i] * intercept[i];
    for (int j = 0; j < n_; ++j) {
      const Rat& a = quad(i, j);
      if (a == 0) continue;
      u.a2 += a * slope[i] * slope[j];
      u.a1 += a * (slope[i] * intercept[j] + slope[j] * intercept[i]);
      u.a0 += a * intercept[i] * intercept[j];
    }
  }
  return u;
}

std::string QuadraticForm::to_string(std::span<const std::string> var_names) const {
  auto name = [&](int i) {
    if (i < static_cast<int>(var_names.size())) return var_names[i];
    return "x" + std::to_string(i);
  };
  std::ostringstream os;
  os << rat_to_string(const_);
  for (int i = 0; i < n_; ++i)
    if (lin_[i] != 0) os << " + " << rat_to_string(lin_[i]) << "*" << name(i);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) {
      Rat c = i == j ? quad(i, i) : Rat(2 * quad(i, j));
      if (c != 0) os << " + " << rat_to_string(c) << "*" << name(i) << "*" << name(j);
    }
  return os.str();
}

}  // namespace dicut
