// Shared test utilities: deterministic random inputs and the independent
// oracles the checks compare against. Everything here stays off the library's
// implementation paths on purpose: the symbolic expansion multiplies
// polynomials term by term, the reference DFT is the literal O(n^2) sum, and
// the Bessel oracle is the ascending power series.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "qsppf/types.hpp"

namespace testsupport {

// ---------------------------------------------------------------- randomness

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// signed vector with prescribed l1 norm
inline std::vector<double> random_l1_vector(std::mt19937_64& rng, std::size_t n, double norm) {
  std::uniform_real_distribution<double> unif(0.05, 1.0);
  std::bernoulli_distribution coin(0.5);
  std::vector<double> v(n);
  double total = 0.0;
  for (auto& x : v) {
    x = unif(rng);
    total += x;
  }
  for (auto& x : v) {
    x *= norm / total;
    if (coin(rng)) x = -x;
  }
  return v;
}

inline qsppf::ReducedPhaseFactors random_phi(std::mt19937_64& rng, std::size_t n,
                                             qsppf::Parity parity, double norm) {
  return qsppf::ReducedPhaseFactors(random_l1_vector(rng, n, norm), parity);
}

inline qsppf::FullPhaseFactors random_psi(std::mt19937_64& rng, std::size_t len, double norm) {
  return qsppf::FullPhaseFactors(random_l1_vector(rng, len, norm));
}

inline qsppf::Parity random_parity(std::mt19937_64& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? qsppf::Parity::Even : qsppf::Parity::Odd;
}

// ------------------------------------------------------------ direct DFT sum

// O(n^2) reference transform in extended precision, exponents reduced mod n.
inline std::vector<std::complex<double>> dft_direct(std::span<const double> input) {
  const std::size_t n = input.size();
  std::vector<std::complex<double>> out(n);
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (std::size_t l = 0; l < n; ++l) {
    long double re = 0.0L, im = 0.0L;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t t = (l * j) % n;
      const long double angle = -two_pi * static_cast<long double>(t) / static_cast<long double>(n);
      re += static_cast<long double>(input[j]) * std::cos(angle);
      im += static_cast<long double>(input[j]) * std::sin(angle);
    }
    out[l] = {static_cast<double>(re), static_cast<double>(im)};
  }
  return out;
}

// ------------------------------------------------- symbolic matrix expansion

// Complex polynomial in the Chebyshev T basis.
struct ChebPoly {
  std::vector<std::complex<double>> c;

  static ChebPoly zero() { return {}; }
  static ChebPoly constant(std::complex<double> v) { return {{v}}; }

  std::complex<double> coeff(std::size_t k) const {
    return k < c.size() ? c[k] : std::complex<double>(0.0);
  }
};

inline ChebPoly add(const ChebPoly& a, const ChebPoly& b) {
  ChebPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), 0.0);
  for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] = a.coeff(k) + b.coeff(k);
  return out;
}

// T_i T_j = (T_{i+j} + T_{|i-j|}) / 2
inline ChebPoly mul(const ChebPoly& a, const ChebPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  ChebPoly out;
  out.c.resize(a.c.size() + b.c.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      const std::complex<double> half = 0.5 * a.c[i] * b.c[j];
      out.c[i + j] += half;
      out.c[i >= j ? i - j : j - i] += half;
    }
  }
  return out;
}

// Entry of the matrix product, split as p(x) + sqrt(1-x^2) q(x).
struct RootEntry {
  ChebPoly plain;
  ChebPoly root;
};

inline RootEntry add(const RootEntry& a, const RootEntry& b) {
  return {add(a.plain, b.plain), add(a.root, b.root)};
}

inline RootEntry mul(const RootEntry& a, const RootEntry& b) {
  // (1-x^2) in the T basis
  ChebPoly one_minus_x2;
  one_minus_x2.c = {0.5, 0.0, -0.5};
  RootEntry out;
  out.plain = add(mul(a.plain, b.plain), mul(one_minus_x2, mul(a.root, b.root)));
  out.root = add(mul(a.plain, b.root), mul(a.root, b.plain));
  return out;
}

struct SymbolicMatrix {
  RootEntry e[2][2];

  static SymbolicMatrix phase_z(double psi) {
    SymbolicMatrix m;
    m.e[0][0].plain = ChebPoly::constant(std::polar(1.0, psi));
    m.e[1][1].plain = ChebPoly::constant(std::polar(1.0, -psi));
    return m;
  }

  static SymbolicMatrix w() {
    SymbolicMatrix m;
    m.e[0][0].plain.c = {0.0, 1.0};  // T_1
    m.e[1][1].plain.c = {0.0, 1.0};
    m.e[0][1].root = ChebPoly::constant({0.0, 1.0});  // i sqrt(1-x^2)
    m.e[1][0].root = ChebPoly::constant({0.0, 1.0});
    return m;
  }
};

inline SymbolicMatrix mul(const SymbolicMatrix& a, const SymbolicMatrix& b) {
  SymbolicMatrix out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.e[i][j] = add(mul(a.e[i][0], b.e[0][j]), mul(a.e[i][1], b.e[1][j]));
  return out;
}

// Full Chebyshev coefficients of g(., Psi) = Im <0|U|0> by expanding the
// whole unitary product symbolically.
inline std::vector<double> oracle_g_coeffs(const qsppf::FullPhaseFactors& psi) {
  SymbolicMatrix m = SymbolicMatrix::phase_z(psi.values.at(0));
  for (std::size_t j = 1; j < psi.values.size(); ++j)
    m = mul(m, mul(SymbolicMatrix::w(), SymbolicMatrix::phase_z(psi.values[j])));
  // the top-left entry of the product is a plain polynomial
  for (const auto& v : m.e[0][0].root.c)
    if (std::abs(v) > 1e-12) throw std::logic_error("oracle: unexpected sqrt(1-x^2) part");
  std::vector<double> out(m.e[0][0].plain.c.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = m.e[0][0].plain.c[k].imag();
  return out;
}

// Parity-extracted oracle counterpart of forward_map.
inline std::vector<double> oracle_forward_map(const qsppf::ReducedPhaseFactors& phi) {
  const auto full = oracle_g_coeffs(qsppf::expand_symmetric(phi));
  const std::size_t offset = phi.parity == qsppf::Parity::Even ? 0 : 1;
  std::vector<double> out(phi.values.size(), 0.0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    const std::size_t k = 2 * j + offset;
    if (k < full.size()) out[j] = full[k];
  }
  return out;
}

// ----------------------------------------------------------- bessel / simpson

// ascending series, adequate for small arguments
inline double bessel_series(int k, double tau) {
  const long double u = static_cast<long double>(tau) / 2.0L;
  long double term = 1.0L;
  for (int i = 1; i <= k; ++i) term *= u / static_cast<long double>(i);
  long double sum = term;
  for (int m = 1; m <= 60; ++m) {
    term *= -(u * u) / (static_cast<long double>(m) * static_cast<long double>(m + k));
    sum += term;
    if (std::abs(term) < 1e-25L * std::abs(sum)) break;
  }
  return static_cast<double>(sum);
}

inline double simpson_recurse(const std::function<double(double)>& f, double a, double b,
                              double fa, double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_recurse(f, a, b, fa, fm, fb, whole, tol, 40);
}

}  // namespace testsupport
