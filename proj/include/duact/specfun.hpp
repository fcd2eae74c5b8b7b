#pragma once

namespace duact::specfun {

// Parameters of the Gauss hypergeometric function 2F1(a, b, c; z).
// Only 0 <= z < 1 is supported; c must not be a non-positive integer.
struct HypergeometricParams {
  double a;
  double b;
  double c;
  double z;
};

// Euler gamma function. Exact recurrences are used for integer and
// half-integer arguments; Lanczos approximation otherwise.
// Throws std::domain_error at the poles (non-positive integers).
double gamma(double x);

// Gauss hypergeometric series for 0 <= z < 1, relative tolerance ~1e-13.
// For z > 0.75 the Euler transformation
//   2F1(a,b,c;z) = (1-z)^(c-a-b) 2F1(c-a, c-b, c; z)
// is applied to restore fast convergence (for the parameter families used
// here the transformed series terminates or decays superlinearly).
// Throws ConvergenceError past the 10000-term cap, std::domain_error for
// z outside [0, 1) or c a non-positive integer.
double gauss_2f1(double a, double b, double c, double z);
double gauss_2f1(const HypergeometricParams& p);

// d/dz 2F1(a,b,c;z) = (ab/c) 2F1(a+1,b+1,c+1;z)
double gauss_2f1_dz(double a, double b, double c, double z);

// Contiguity relations on the first/second upper parameter:
//   2F1(a+1,b,c;z) = (1/a)(z d/dz + a) 2F1(a,b,c;z)
// Inputs are the value and z-derivative of 2F1(a,b,c;z).
double contiguity_raise_a(double a, double b, double z, double f, double f_dz);
double contiguity_raise_b(double a, double b, double z, double f, double f_dz);

// Error function (2/sqrt(pi)) int_0^x exp(-t^2) dt.
double erf(double x);

// Dawson's function F(x) = exp(-x^2) int_0^x exp(t^2) dt.
// Power-series/exponential product for |x| <= 6, asymptotic series beyond.
double dawson(double x);

// Probabilist's Hermite polynomial He_n(x) by the three-term recurrence
// He_{n+1} = x He_n - n He_{n-1}.
double hermite_prob(int n, double x);

}  // namespace duact::specfun
