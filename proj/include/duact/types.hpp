#pragma once

namespace duact {

// The parameter point x = -(1/2) Sigma^{-1} at which unnormalized
// expectations are evaluated. Valid points satisfy x11 < 0, x22 < 0 and
// det = x11*x22 - x12^2 > 0 (-x positive definite), which puts
// z = x12^2/(x11*x22) in [0, 1).
struct XPoint {
  double x11 = -1.0;
  double x12 = 0.0;
  double x22 = -1.0;

  double det() const { return x11 * x22 - x12 * x12; }
  double z() const { return x12 * x12 / (x11 * x22); }
  bool valid() const { return x11 < 0.0 && x22 < 0.0 && det() > 0.0; }
};

// 2x2 covariance Sigma = [[c1^2, c1*c2*r], [c1*c2*r, c2^2]].
// |r| = 1 is the degenerate rank-1 case.
struct Covariance2 {
  double c1 = 1.0;
  double c2 = 1.0;
  double r = 0.0;

  double det() const { return c1 * c1 * c2 * c2 * (1.0 - r * r); }
  bool valid() const { return c1 > 0.0 && c2 > 0.0 && r >= -1.0 && r <= 1.0; }
  bool degenerate(double tol = 0.0) const {
    return r >= 1.0 - tol || r <= -1.0 + tol;
  }
};

}  // namespace duact
