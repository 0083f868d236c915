#pragma once

#include <cmath>
#include <stdexcept>

namespace qsppf::bounds {

// Perturbation bound on the Jacobian: ||DF(Phi) - 2I||_1 <= h(||Phi||_1).
inline double h(double x) { return 2.0 * std::cosh(2.0 * x) - 2.0; }

// Inverse-norm bound: ||F^{-1}(c)||_1 <= H^{-1}(||c||_1), H(x) = int_0^x (2 - h).
inline double H(double x) { return 4.0 * x - std::sinh(2.0 * x); }

// Lipschitz constants of F and DF on the ball of radius delta.
inline double C1(double delta) { return 2.0 * std::cosh(2.0 * delta); }
inline double C2(double delta) { return 4.0 * std::sinh(2.0 * delta); }

// Invertibility radius for phase factors: h(r_phi) = 2.
inline double r_phi() { return 0.5 * std::acosh(2.0); }

// Invertibility radius for coefficients.
inline double r_c() { return H(r_phi()); }

// Certified fixed-point region: sinh(2 r~_phi) = acosh(2), i.e. the first
// iterate's norm bound (1/2) sinh(2||Phi*||_1) stays within r_phi.
inline double r_phi_tilde() { return 0.5 * std::asinh(std::acosh(2.0)); }

inline double r_c_tilde() { return H(r_phi_tilde()); }

// H^{-1} on [0, r_c), by bisection over [0, r_phi] where H is increasing.
inline double H_inverse(double y) {
  if (!(y >= 0.0) || y >= r_c()) throw std::domain_error("H_inverse: argument must lie in [0, r_c)");
  double lo = 0.0, hi = r_phi();
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    (H(mid) < y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Lower quasi-isometry constant on { ||c||_1 <= theta }.
inline double C_tilde(double theta) { return 2.0 - h(H_inverse(theta)); }

// Per-step contraction bound of the fixed-point iteration at solution norm r:
//   gamma(r) = (1/2) int_0^1 h(r + s((1/2) sinh(2r) - r)) ds,
// integrated in closed form (the integrand is a shifted cosh).
inline double gamma(double r) {
  const double a = r;
  const double b = 0.5 * std::sinh(2.0 * r) - r;
  if (b < 1e-8) {
    // (sinh(2(a+b)) - sinh(2a))/b -> 2 cosh(2a) + 2 b sinh(2a) as b -> 0
    return 0.5 * (h(a) + 2.0 * b * std::sinh(2.0 * a));
  }
  return 0.5 * ((std::sinh(2.0 * (a + b)) - std::sinh(2.0 * a)) / b - 2.0);
}

inline double gamma_tilde() { return gamma(r_phi_tilde()); }

// The five region/rate constants bundled for reporting.
struct Constants {
  double r_phi;
  double r_c;
  double r_phi_tilde;
  double r_c_tilde;
  double gamma_tilde;
};

inline Constants constants() {
  return {r_phi(), r_c(), r_phi_tilde(), r_c_tilde(), gamma_tilde()};
}

}  // namespace qsppf::bounds
