#include "duact/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "duact/errors.hpp"

namespace duact::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// Lanczos approximation, g = 7, 9 coefficients. Good to ~1e-14 relative
// on the positive axis.
double gamma_lanczos(double x) {
  static const double g = 7.0;
  static const double coef[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,    12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
  if (x < 0.5) {
    // reflection formula
    return std::numbers::pi /
           (std::sin(std::numbers::pi * x) * gamma_lanczos(1.0 - x));
  }
  x -= 1.0;
  double a = coef[0];
  double t = x + g + 0.5;
  for (int i = 1; i < 9; ++i) a += coef[i] / (x + i);
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) *
         std::exp(-t) * a;
}

// 2F1 power series; assumes 0 <= z < 1 and c not a non-positive integer.
// Terminates naturally when a or b is a non-positive integer.
double hyp2f1_series(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  int small_streak = 0;
  for (int k = 0; k < 10000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    if (term == 0.0) return sum;
    sum += term;
    if (std::abs(term) <= 1e-15 * std::abs(sum)) {
      if (++small_streak >= 2) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw ConvergenceError("gauss_2f1: series did not converge in 10000 terms");
}

}  // namespace

double gamma(double x) {
  if (is_nonpositive_integer(x))
    throw std::domain_error("gamma: pole at non-positive integer");
  // Exact path for integers and half-integers (the formulas in this
  // library evaluate gamma almost exclusively there).
  double two_x = 2.0 * x;
  if (x > 0.0 && two_x <= 81.0 && two_x == std::floor(two_x)) {
    double v = 1.0;
    double y = x;
    while (y > 1.5) {
      y -= 1.0;
      v *= y;
    }
    // y is now 1 or 1/2
    if (y == 0.5) v *= std::sqrt(std::numbers::pi);
    return v;
  }
  return gamma_lanczos(x);
}

double gauss_2f1(double a, double b, double c, double z) {
  if (!(z >= 0.0 && z < 1.0))
    throw std::domain_error("gauss_2f1: z must lie in [0, 1)");
  if (is_nonpositive_integer(c))
    throw std::domain_error("gauss_2f1: c is a non-positive integer");
  if (z > 0.75)
    return std::pow(1.0 - z, c - a - b) * hyp2f1_series(c - a, c - b, c, z);
  return hyp2f1_series(a, b, c, z);
}

double gauss_2f1(const HypergeometricParams& p) {
  return gauss_2f1(p.a, p.b, p.c, p.z);
}

double gauss_2f1_dz(double a, double b, double c, double z) {
  return a * b / c * gauss_2f1(a + 1.0, b + 1.0, c + 1.0, z);
}

double contiguity_raise_a(double a, double b, double z, double f, double f_dz) {
  (void)b;
  return (z * f_dz + a * f) / a;
}

double contiguity_raise_b(double a, double b, double z, double f, double f_dz) {
  (void)a;
  return (z * f_dz + b * f) / b;
}

double erf(double x) { return std::erf(x); }

double dawson(double x) {
  double ax = std::abs(x);
  double sign = x < 0.0 ? -1.0 : 1.0;
  if (ax == 0.0) return 0.0;
  if (ax <= 6.0) {
    // F(x) = exp(-x^2) * sum_{n>=0} x^(2n+1) / (n! (2n+1)); all terms
    // positive, so no cancellation in the sum.
    double xx = ax * ax;
    double term = ax;
    double sum = ax;
    for (int n = 0; n < 200; ++n) {
      term *= xx * (2 * n + 1.0) / ((n + 1.0) * (2 * n + 3.0));
      sum += term;
      if (term <= kEps * sum) break;
    }
    return sign * std::exp(-xx) * sum;
  }
  // Asymptotic series 1/(2x) sum_n (2n-1)!!/(2x^2)^n, truncated at the
  // smallest term; for |x| > 6 that is below double precision.
  double inv2xx = 1.0 / (2.0 * ax * ax);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 60; ++n) {
    double next = term * (2 * n - 1.0) * inv2xx;
    if (next >= term) break;  // series started to diverge
    term = next;
    sum += term;
    if (term <= kEps * sum) break;
  }
  return sign * sum / (2.0 * ax);
}

double hermite_prob(int n, double x) {
  if (n < 0) throw std::domain_error("hermite_prob: n must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int k = 1; k < n; ++k) {
    double next = x * cur - k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace duact::specfun
