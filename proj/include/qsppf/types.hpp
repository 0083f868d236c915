#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsppf {

// Parity of the target function: Even expands in T_{2j}, Odd in T_{2j+1}.
enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

// Degree of the full polynomial realized by n reduced phase factors
// (or n Chebyshev coefficients) of the given parity.
inline int full_degree(std::size_t n, Parity parity) {
  if (n == 0) return parity == Parity::Even ? 0 : -1;
  return parity == Parity::Even ? static_cast<int>(2 * n - 2) : static_cast<int>(2 * n - 1);
}

namespace detail {
inline double one_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);  // index order, deterministic
  return s;
}
inline std::size_t effective_length(const std::vector<double>& v) {
  std::size_t n = v.size();
  while (n > 0 && v[n - 1] == 0.0) --n;
  return n;
}
}  // namespace detail

// The independent half of a symmetric phase-factor set, center angle halved
// in the even case. Entries are angles in radians and are not range-reduced.
struct ReducedPhaseFactors {
  std::vector<double> values;
  Parity parity = Parity::Even;

  ReducedPhaseFactors() = default;
  ReducedPhaseFactors(std::vector<double> v, Parity p) : values(std::move(v)), parity(p) {}

  std::size_t size() const { return values.size(); }
  // 1 + largest index of a nonzero entry; 0 for the all-zero vector.
  std::size_t effective_length() const { return detail::effective_length(values); }
  int degree() const { return full_degree(values.size(), parity); }
  double one_norm() const { return detail::one_norm(values); }

  static ReducedPhaseFactors zeros(std::size_t n, Parity p) {
    return ReducedPhaseFactors(std::vector<double>(n, 0.0), p);
  }
};

// Full set of d+1 phase factors psi_0..psi_d.
struct FullPhaseFactors {
  std::vector<double> values;

  FullPhaseFactors() = default;
  explicit FullPhaseFactors(std::vector<double> v) : values(std::move(v)) {}

  std::size_t size() const { return values.size(); }
  int degree() const { return static_cast<int>(values.size()) - 1; }
  double one_norm() const { return detail::one_norm(values); }
};

// Chebyshev coefficients of a definite-parity target: coeffs[j] multiplies
// T_{2j} (Even) or T_{2j+1} (Odd).
struct ChebyshevCoefficients {
  std::vector<double> coeffs;
  Parity parity = Parity::Even;

  ChebyshevCoefficients() = default;
  ChebyshevCoefficients(std::vector<double> c, Parity p) : coeffs(std::move(c)), parity(p) {}

  std::size_t size() const { return coeffs.size(); }
  std::size_t effective_length() const { return detail::effective_length(coeffs); }
  int degree() const { return full_degree(coeffs.size(), parity); }
  double one_norm() const { return detail::one_norm(coeffs); }

  static ChebyshevCoefficients zeros(std::size_t n, Parity p) {
    return ChebyshevCoefficients(std::vector<double>(n, 0.0), p);
  }
};

// Symmetric expansion of reduced phase factors:
//   Even: (phi_{n-1},...,phi_1, 2*phi_0, phi_1,...,phi_{n-1}), length 2n-1
//   Odd:  (phi_{n-1},...,phi_0, phi_0,...,phi_{n-1}),          length 2n
// The empty even set maps to the length-1 set (0); the empty odd set has no
// degrees of freedom and is rejected.
inline FullPhaseFactors expand_symmetric(const ReducedPhaseFactors& phi) {
  const std::size_t n = phi.values.size();
  if (phi.parity == Parity::Even) {
    if (n == 0) return FullPhaseFactors({0.0});
    std::vector<double> full(2 * n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) full[i] = phi.values[n - 1 - i];
    full[n - 1] = 2.0 * phi.values[0];
    for (std::size_t i = 1; i < n; ++i) full[n - 1 + i] = phi.values[i];
    return FullPhaseFactors(std::move(full));
  }
  if (n == 0) throw std::invalid_argument("expand_symmetric: empty odd set has no degrees of freedom");
  std::vector<double> full(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    full[i] = phi.values[n - 1 - i];
    full[n + i] = phi.values[i];
  }
  return FullPhaseFactors(std::move(full));
}

}  // namespace qsppf
