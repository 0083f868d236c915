#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "qsppf/types.hpp"

namespace qsppf {

using complexd = std::complex<double>;

// 2x2 complex matrix, the value of the QSP unitary chain.
struct Su2Matrix {
  complexd m00{1.0, 0.0}, m01{0.0, 0.0}, m10{0.0, 0.0}, m11{1.0, 0.0};

  static Su2Matrix identity() { return {}; }

  // max entrywise deviation of M * M^dagger from the identity
  double unitarity_defect() const {
    const complexd a = m00 * std::conj(m00) + m01 * std::conj(m01) - 1.0;
    const complexd b = m00 * std::conj(m10) + m01 * std::conj(m11);
    const complexd c = m10 * std::conj(m00) + m11 * std::conj(m01);
    const complexd d = m10 * std::conj(m10) + m11 * std::conj(m11) - 1.0;
    double m = std::abs(a);
    m = std::max(m, std::abs(b));
    m = std::max(m, std::abs(c));
    return std::max(m, std::abs(d));
  }
};

namespace detail {

// sqrt(1-x^2) loses accuracy to cancellation near the endpoints; the
// trigonometric form is exact at x = +-1 and stable nearby.
inline double stable_sqrt_1mx2(double x) {
  if (std::abs(x) > 0.99) return std::sin(std::acos(x));
  return std::sqrt(1.0 - x * x);
}

inline void check_domain(double x) {
  if (!(std::abs(x) <= 1.0)) throw std::domain_error("qsp kernel: |x| must be <= 1");
}

// right-multiply M by W(x) = [[x, i s],[i s, x]] in place
inline void apply_w(Su2Matrix& m, double x, double s) {
  const complexd isc(0.0, s);
  const complexd n00 = m.m00 * x + m.m01 * isc;
  const complexd n01 = m.m00 * isc + m.m01 * x;
  const complexd n10 = m.m10 * x + m.m11 * isc;
  const complexd n11 = m.m10 * isc + m.m11 * x;
  m.m00 = n00;
  m.m01 = n01;
  m.m10 = n10;
  m.m11 = n11;
}

// right-multiply M by e^{i psi Z} = diag(e^{i psi}, e^{-i psi}) in place
inline void apply_phase(Su2Matrix& m, complexd e) {
  m.m00 *= e;
  m.m10 *= e;
  const complexd ec = std::conj(e);
  m.m01 *= ec;
  m.m11 *= ec;
}

}  // namespace detail

// U(x, Psi) = e^{i psi_0 Z} prod_{j=1..d} [ W(x) e^{i psi_j Z} ], accumulated
// left to right in index order so results are reproducible bit for bit.
inline Su2Matrix qsp_unitary(double x, const FullPhaseFactors& psi) {
  detail::check_domain(x);
  if (psi.values.empty()) throw std::invalid_argument("qsp_unitary: empty phase-factor set");
  const double s = detail::stable_sqrt_1mx2(x);
  Su2Matrix m;
  detail::apply_phase(m, std::polar(1.0, psi.values[0]));
  for (std::size_t j = 1; j < psi.values.size(); ++j) {
    detail::apply_w(m, x, s);
    detail::apply_phase(m, std::polar(1.0, psi.values[j]));
  }
  return m;
}

// g(x, Psi) = Im <0| U(x, Psi) |0>
inline double g_full(double x, const FullPhaseFactors& psi) {
  return qsp_unitary(x, psi).m00.imag();
}

namespace detail {

// Top-row propagation of the same left-to-right chain: performs exactly the
// floating-point operations of row 0 of qsp_unitary, at half the cost.
// Phases are passed precomputed so grid sweeps don't re-evaluate them.
inline double g_row(double x, double s, std::span<const complexd> phases) {
  complexd r0 = phases[0];
  complexd r1 = 0.0;
  for (std::size_t j = 1; j < phases.size(); ++j) {
    const complexd isc(0.0, s);
    const complexd n0 = r0 * x + r1 * isc;
    const complexd n1 = r0 * isc + r1 * x;
    r0 = n0 * phases[j];
    r1 = n1 * std::conj(phases[j]);
  }
  return r0.imag();
}

inline std::vector<complexd> phases_of(const FullPhaseFactors& psi) {
  std::vector<complexd> p(psi.values.size());
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = std::polar(1.0, psi.values[j]);
  return p;
}

}  // namespace detail

// g(x, Phi) for reduced phase factors; invariant under zero padding of Phi.
inline double g(double x, const ReducedPhaseFactors& phi) {
  detail::check_domain(x);
  if (phi.values.empty()) return 0.0;
  const FullPhaseFactors psi = expand_symmetric(phi);
  const double s = detail::stable_sqrt_1mx2(x);
  const auto phases = detail::phases_of(psi);
  return detail::g_row(x, s, phases);
}

// g evaluated over a node set with the expansion and phases hoisted out of
// the per-node loop. Nodes must lie in [-1, 1].
inline std::vector<double> g_samples(const ReducedPhaseFactors& phi, std::span<const double> nodes) {
  std::vector<double> out(nodes.size(), 0.0);
  if (phi.values.empty()) return out;
  const FullPhaseFactors psi = expand_symmetric(phi);
  const auto phases = detail::phases_of(psi);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    detail::check_domain(nodes[j]);
    out[j] = detail::g_row(nodes[j], detail::stable_sqrt_1mx2(nodes[j]), phases);
  }
  return out;
}

inline std::vector<double> g_samples(const FullPhaseFactors& psi, std::span<const double> nodes) {
  std::vector<double> out(nodes.size(), 0.0);
  const auto phases = detail::phases_of(psi);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    detail::check_domain(nodes[j]);
    out[j] = detail::g_row(nodes[j], detail::stable_sqrt_1mx2(nodes[j]), phases);
  }
  return out;
}

}  // namespace qsppf
