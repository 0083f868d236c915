#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "qsppf/dft.hpp"
#include "qsppf/kernel.hpp"
#include "qsppf/types.hpp"

namespace qsppf {

// Quadrature nodes x_j = cos(2 pi j / (2d+1)), j = 0..2d. x_0 is exactly 1.
struct NodeGrid {
  int degree = 0;
  std::vector<double> nodes;

  explicit NodeGrid(int d) : degree(d) {
    if (d < 0) throw std::invalid_argument("NodeGrid: degree must be >= 0");
    const std::size_t n = 2 * static_cast<std::size_t>(d) + 1;
    nodes.resize(n);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) nodes[j] = std::cos(step * static_cast<double>(j));
  }
};

namespace detail {

// Extract the definite-parity Chebyshev coefficients from the DFT of samples
// on NodeGrid(d): c uses v_0/2, v_2, ..., v_d (even) or v_1, v_3, ..., v_d
// (odd), scaled by 2/(2d+1).
inline ChebyshevCoefficients extract_parity_coeffs(const std::vector<std::complex<double>>& v,
                                                   int d, Parity parity) {
  const double scale = 2.0 / static_cast<double>(2 * d + 1);
  std::vector<double> c;
  if (parity == Parity::Even) {
    c.reserve(static_cast<std::size_t>(d / 2) + 1);
    c.push_back(0.5 * scale * v[0].real());
    for (int l = 2; l <= d; l += 2) c.push_back(scale * v[l].real());
  } else {
    c.reserve(static_cast<std::size_t>((d + 1) / 2));
    for (int l = 1; l <= d; l += 2) c.push_back(scale * v[l].real());
  }
  return ChebyshevCoefficients(std::move(c), parity);
}

}  // namespace detail

// Coefficients of a definite-parity polynomial from its samples on
// NodeGrid(d); the sample count 2d+1 must be odd. Exact (up to roundoff) for
// polynomials of degree <= d by the discrete orthogonality of the grid.
inline ChebyshevCoefficients coeffs_of_samples(std::span<const double> samples, Parity parity) {
  if (samples.empty() || samples.size() % 2 == 0)
    throw std::invalid_argument("coeffs_of_samples: sample count must be odd (2d+1)");
  const int d = static_cast<int>((samples.size() - 1) / 2);
  return detail::extract_parity_coeffs(dft_real(samples), d, parity);
}

// All Chebyshev coefficients 0..d of a (not necessarily definite-parity)
// polynomial sampled on NodeGrid(d).
inline std::vector<double> full_coeffs_of_samples(std::span<const double> samples) {
  if (samples.empty() || samples.size() % 2 == 0)
    throw std::invalid_argument("full_coeffs_of_samples: sample count must be odd (2d+1)");
  const int d = static_cast<int>((samples.size() - 1) / 2);
  const auto v = dft_real(samples);
  const double scale = 2.0 / static_cast<double>(2 * d + 1);
  std::vector<double> c(static_cast<std::size_t>(d) + 1);
  c[0] = 0.5 * scale * v[0].real();
  for (int l = 1; l <= d; ++l) c[static_cast<std::size_t>(l)] = scale * v[l].real();
  return c;
}

// The forward map F: reduced phase factors -> Chebyshev coefficients of
// g(., Phi), sampled on NodeGrid at the degree induced by the stored length
// (d = 2n-2 even, 2n-1 odd) and transformed by DFT. Output length equals the
// stored length of Phi.
inline ChebyshevCoefficients forward_map(const ReducedPhaseFactors& phi) {
  if (phi.values.empty()) return ChebyshevCoefficients({}, phi.parity);
  const NodeGrid grid(phi.degree());
  const std::vector<double> samples = g_samples(phi, grid.nodes);
  return detail::extract_parity_coeffs(dft_real(samples), grid.degree, phi.parity);
}

// Clenshaw evaluation of sum_k b_k T_k(x) for a full coefficient vector.
inline double clenshaw(std::span<const double> full_coeffs, double x) {
  if (full_coeffs.empty()) return 0.0;
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = full_coeffs.size(); k-- > 1;) {
    const double t = 2.0 * x * b1 - b2 + full_coeffs[k];
    b2 = b1;
    b1 = t;
  }
  return x * b1 - b2 + full_coeffs[0];
}

// Embed definite-parity coefficients into a full coefficient vector.
inline std::vector<double> embed_full(const ChebyshevCoefficients& c) {
  if (c.coeffs.empty()) return {};
  std::vector<double> full(static_cast<std::size_t>(c.degree()) + 1, 0.0);
  const std::size_t offset = c.parity == Parity::Even ? 0 : 1;
  for (std::size_t j = 0; j < c.coeffs.size(); ++j) full[2 * j + offset] = c.coeffs[j];
  return full;
}

// Evaluate the definite-parity series at x.
inline double evaluate(const ChebyshevCoefficients& c, double x) {
  const auto full = embed_full(c);
  return clenshaw(full, x);
}

}  // namespace qsppf
