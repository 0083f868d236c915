#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsppf/chebyshev.hpp"
#include "qsppf/constants.hpp"
#include "qsppf/types.hpp"

namespace qsppf {

struct SolverConfig {
  double tol = 1e-12;            // l1 residual threshold
  int max_iter = 100;
  double divergence_factor = 10.0;
  bool record_iterates = false;  // keep Phi^t history in the report
};

enum class Guarantee { Certified, Uncertified };

struct SolverReport {
  ReducedPhaseFactors phi;
  std::vector<double> residual_history;  // ||F(Phi^t) - c||_1, t = 0..iterations
  int iterations = 0;
  bool converged = false;
  Guarantee guarantee = Guarantee::Uncertified;
  std::optional<double> apriori_phi_bound;      // H^{-1}(||c||_1) when ||c||_1 < r_c
  std::vector<std::vector<double>> iterates;    // filled when record_iterates is set
};

class SolveDivergedError : public std::runtime_error {
 public:
  SolveDivergedError(int iteration, double residual)
      : std::runtime_error("fixed-point iteration diverged at iteration " +
                           std::to_string(iteration) + " (residual " +
                           std::to_string(residual) + ")"),
        iteration(iteration),
        residual(residual) {}
  int iteration;
  double residual;
};

namespace detail {
inline double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}
}  // namespace detail

// Fixed-point iteration Phi^{t+1} = Phi^t - (1/2)(F(Phi^t) - c) from Phi^0 = 0,
// at the working length of c. Stops when the l1 residual reaches tol;
// exhausting max_iter reports converged = false, while a residual exceeding
// divergence_factor * max(||c||_1, tol) throws.
inline SolverReport fpi_solve(const ChebyshevCoefficients& c, const SolverConfig& config = {}) {
  if (!(config.tol > 0.0)) throw std::invalid_argument("fpi_solve: tol must be positive");
  if (config.max_iter < 0) throw std::invalid_argument("fpi_solve: max_iter must be >= 0");
  if (!(config.divergence_factor > 1.0))
    throw std::invalid_argument("fpi_solve: divergence_factor must exceed 1");

  const std::size_t n = c.coeffs.size();
  const double c_norm = c.one_norm();

  SolverReport report;
  report.guarantee = c_norm <= bounds::r_c_tilde() ? Guarantee::Certified : Guarantee::Uncertified;
  if (c_norm < bounds::r_c()) report.apriori_phi_bound = bounds::H_inverse(c_norm);
  report.phi = ReducedPhaseFactors::zeros(n, c.parity);

  const double divergence_threshold = config.divergence_factor * std::max(c_norm, config.tol);
  for (int t = 0;; ++t) {
    const ChebyshevCoefficients f = forward_map(report.phi);
    const double residual = detail::l1_distance(f.coeffs, c.coeffs);
    report.residual_history.push_back(residual);
    if (config.record_iterates) report.iterates.push_back(report.phi.values);
    if (residual <= config.tol) {
      report.converged = true;
      report.iterations = t;
      break;
    }
    if (residual > divergence_threshold) throw SolveDivergedError(t, residual);
    if (t == config.max_iter) {
      report.converged = false;
      report.iterations = t;
      break;
    }
    for (std::size_t i = 0; i < n; ++i)
      report.phi.values[i] -= 0.5 * (f.coeffs[i] - c.coeffs[i]);
  }
  return report;
}

// k-th column of the Jacobian DF(Phi), exactly (no finite differencing):
//   dF/dphi_k = F(Phi + (pi/4) e_k) - F(Phi - (pi/4) e_k),
// both maps evaluated at the common working length max(|Phi|, k+1).
inline ChebyshevCoefficients jacobian_column(const ReducedPhaseFactors& phi, std::size_t k) {
  const std::size_t m = std::max(phi.values.size(), k + 1);
  ReducedPhaseFactors plus(phi.values, phi.parity), minus(phi.values, phi.parity);
  plus.values.resize(m, 0.0);
  minus.values.resize(m, 0.0);
  plus.values[k] += std::numbers::pi / 4.0;
  minus.values[k] -= std::numbers::pi / 4.0;
  const ChebyshevCoefficients fp = forward_map(plus);
  const ChebyshevCoefficients fm = forward_map(minus);
  std::vector<double> col(m);
  for (std::size_t i = 0; i < m; ++i) col[i] = fp.coeffs[i] - fm.coeffs[i];
  return ChebyshevCoefficients(std::move(col), phi.parity);
}

// l1 norm of the Chebyshev coefficients of d^2 g / (d psi_r d psi_s), using
// d_r d_s U(x, Psi) = U(x, Psi + (pi/2) e_r + (pi/2) e_s) for r != s and
// d_r^2 U = -U for r = s. Bound-checking probe for the sinh(||Psi||_1) estimate.
inline double hessian_entry_norm(const FullPhaseFactors& psi, std::size_t r, std::size_t s) {
  if (r >= psi.values.size() || s >= psi.values.size())
    throw std::out_of_range("hessian_entry_norm: index past end of Psi");
  FullPhaseFactors shifted = psi;
  if (r != s) {
    shifted.values[r] += std::numbers::pi / 2.0;
    shifted.values[s] += std::numbers::pi / 2.0;
  }
  const NodeGrid grid(shifted.degree());
  const auto samples = g_samples(shifted, grid.nodes);
  const auto coeffs = full_coeffs_of_samples(samples);
  double norm = 0.0;
  for (double x : coeffs) norm += std::abs(x);
  return norm;
}

}  // namespace qsppf
