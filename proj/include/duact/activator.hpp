#pragma once

#include <string>
#include <vector>

namespace duact {

enum class ActivatorKind {
  ReLU,
  Heaviside,
  GeLU,
  GeLUDerivative,
  ReSin,
  Monomial,             // u^m
  RectifiedMonomial,    // u^m Y(u)
  Polynomial,           // sum a_i u^i
  RectifiedPolynomial,  // (sum a_i u^i) Y(u)
};

// A holonomic activator distribution. Provides pointwise evaluation of
// sigma and its a.e. derivative (jump contributions are ignored), plus the
// weighted 1D moments int u^p sigma(u) exp(-u^2) du needed for HGM initial
// values. GeLU follows the convention sigma(u) = u (1 + erf(u)).
class ActivatorSpec {
 public:
  static ActivatorSpec relu() { return ActivatorSpec(ActivatorKind::ReLU); }
  static ActivatorSpec heaviside() {
    return ActivatorSpec(ActivatorKind::Heaviside);
  }
  static ActivatorSpec gelu() { return ActivatorSpec(ActivatorKind::GeLU); }
  static ActivatorSpec gelu_derivative() {
    return ActivatorSpec(ActivatorKind::GeLUDerivative);
  }
  static ActivatorSpec resin() { return ActivatorSpec(ActivatorKind::ReSin); }
  static ActivatorSpec monomial(int m);
  static ActivatorSpec rectified_monomial(int m);
  static ActivatorSpec polynomial(std::vector<double> coeffs);
  static ActivatorSpec rectified_polynomial(std::vector<double> coeffs);

  ActivatorKind kind() const { return kind_; }
  int degree() const { return degree_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  double operator()(double u) const;

  // Pointwise derivative, defined almost everywhere (Y(0) is taken as 1/2).
  double derivative(double u) const;

  // int_R u^p sigma(u) exp(-u^2) du. Closed form via gamma where the
  // activator is (rectified-)polynomial, 1D quadrature otherwise.
  double moment_e2(int p) const;

  // Whether sigma has a jump/kink only at the origin (Y-factor types).
  bool rectified() const;

  std::string name() const;

 private:
  explicit ActivatorSpec(ActivatorKind k) : kind_(k) {}

  ActivatorKind kind_;
  int degree_ = 0;
  std::vector<double> coeffs_;
};

}  // namespace duact
