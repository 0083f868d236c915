#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qsppf/bessel.hpp"
#include "qsppf/types.hpp"

namespace qsppf {

// Chebyshev targets for e^{-i tau x}: the even part
//   J_0(tau) + 2 sum_{k even < d} (-1)^{k/2} J_k(tau) T_k
// and the odd part
//   2 sum_{k odd < d} (-1)^{(k-1)/2} J_k(tau) T_k,
// both multiplied by `scale`, truncated at d = ceil(1.4|tau| + ln(1/eps0)).
struct JacobiAngerTarget {
  ChebyshevCoefficients even;
  ChebyshevCoefficients odd;
  int degree = 0;  // truncation threshold d; retained indices are < d
};

inline JacobiAngerTarget jacobi_anger(double tau, double eps0, double scale) {
  if (!(eps0 > 0.0 && eps0 < 1.0)) throw std::invalid_argument("jacobi_anger: eps0 must be in (0,1)");
  if (!(scale > 0.0 && scale <= 1.0)) throw std::invalid_argument("jacobi_anger: scale must be in (0,1]");
  if (!std::isfinite(tau)) throw std::invalid_argument("jacobi_anger: tau must be finite");

  const double at = std::abs(tau);
  const int d = static_cast<int>(std::ceil(1.4 * at + std::log(1.0 / eps0)));
  const auto j = bessel_j_sequence(d - 1, at);

  JacobiAngerTarget out;
  out.degree = d;
  out.even.parity = Parity::Even;
  out.odd.parity = Parity::Odd;
  for (int k = 0; k < d; k += 2) {
    const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
    const double factor = k == 0 ? 1.0 : 2.0;
    out.even.coeffs.push_back(scale * factor * sign * j[static_cast<std::size_t>(k)]);
  }
  for (int k = 1; k < d; k += 2) {
    const double sign = ((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    out.odd.coeffs.push_back(scale * 2.0 * sign * j[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace qsppf
