#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsppf/chebyshev.hpp"
#include "qsppf/constants.hpp"
#include "qsppf/kernel.hpp"
#include "qsppf/types.hpp"

namespace qsppf {

// Tail-decay summary of a coefficient/phase-factor pair. tail_sums_*[n] is
// sum_{k>n} |.|; fitted rates are log-log slopes of the entry magnitudes over
// the middle two quartiles of the index range (NaN when the window is empty).
struct DecayProfile {
  std::vector<double> tail_sums_c;
  std::vector<double> tail_sums_phi;
  double fitted_rate_c = std::numeric_limits<double>::quiet_NaN();
  double fitted_rate_phi = std::numeric_limits<double>::quiet_NaN();
  // 1 / (2 - h(H^{-1}(||c||_1))) when ||c||_1 < r_c, otherwise absent
  std::optional<double> decay_constant;
};

namespace detail {

inline std::vector<double> tail_sums(const std::vector<double>& v) {
  std::vector<double> tails(v.size(), 0.0);
  for (std::size_t n = v.size(); n-- > 1;) tails[n - 1] = tails[n] + std::abs(v[n]);
  return tails;
}

// Least-squares slope of log|v_n| against log n over the middle two
// quartiles, keeping clear of the first and last 10 indices where
// preasymptotics and truncation pollute the fit.
inline double loglog_slope(const std::vector<double>& v) {
  const std::size_t n = v.size();
  const std::size_t lo = std::max<std::size_t>({1, 10, n / 4});
  const std::size_t hi = std::min<std::size_t>(n >= 11 ? n - 11 : 0, (3 * n) / 4);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t count = 0;
  for (std::size_t k = lo; k <= hi && k < n; ++k) {
    const double mag = std::abs(v[k]);
    if (mag <= 0.0) continue;
    const double x = std::log(static_cast<double>(k));
    const double y = std::log(mag);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) return std::numeric_limits<double>::quiet_NaN();
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (count * sxy - sx * sy) / denom;
}

}  // namespace detail

inline DecayProfile decay_profile(const ChebyshevCoefficients& c, const ReducedPhaseFactors& phi) {
  if (c.coeffs.size() != phi.values.size())
    throw std::invalid_argument("decay_profile: c and Phi must have equal lengths");
  DecayProfile profile;
  profile.tail_sums_c = detail::tail_sums(c.coeffs);
  profile.tail_sums_phi = detail::tail_sums(phi.values);
  profile.fitted_rate_c = detail::loglog_slope(c.coeffs);
  profile.fitted_rate_phi = detail::loglog_slope(phi.values);
  const double c_norm = c.one_norm();
  if (c_norm < bounds::r_c())
    profile.decay_constant = 1.0 / (2.0 - bounds::h(bounds::H_inverse(c_norm)));
  return profile;
}

// Check sum_{k>n} |phi_k| <= C sum_{k>n} |c_k| + 1e-10 for every n. Only
// meaningful inside the norm region where the constant exists.
inline bool check_decay_bound(const DecayProfile& profile) {
  if (!profile.decay_constant)
    throw std::logic_error("check_decay_bound: bound not applicable (||c||_1 >= r_c)");
  const double C = *profile.decay_constant;
  for (std::size_t n = 0; n < profile.tail_sums_phi.size(); ++n)
    if (profile.tail_sums_phi[n] > C * profile.tail_sums_c[n] + 1e-10) return false;
  return true;
}

// L(Phi) = max_j |g(x_j, Phi) - f_target(x_j)| over the positive roots
// x_j = cos((2j-1) pi / (4 dt)) of T_{2 dt}, with the target synthesized from
// c by Clenshaw evaluation.
inline double max_pointwise_error(const ReducedPhaseFactors& phi, const ChebyshevCoefficients& c) {
  if (phi.parity != c.parity)
    throw std::invalid_argument("max_pointwise_error: parity mismatch");
  const std::size_t dt = std::max(phi.values.size(), c.coeffs.size());
  if (dt == 0) return 0.0;
  std::vector<double> nodes(dt);
  for (std::size_t j = 1; j <= dt; ++j)
    nodes[j - 1] = std::cos((2.0 * static_cast<double>(j) - 1.0) * std::numbers::pi /
                            (4.0 * static_cast<double>(dt)));
  const auto samples = g_samples(phi, nodes);
  const auto full = embed_full(c);
  double worst = 0.0;
  for (std::size_t j = 0; j < dt; ++j)
    worst = std::max(worst, std::abs(samples[j] - clenshaw(full, nodes[j])));
  return worst;
}

// Even Chebyshev coefficients of scale * |x|^3 for T_0, T_2, ..., T_{2 trunc},
// ingested through the sampling path on a grid fine enough (4x the target
// degree) that aliasing sits far below the smallest retained coefficient.
inline ChebyshevCoefficients abs_x_cubed_coefficients(double scale = 0.8, int truncation_index = 1000) {
  if (truncation_index < 0) throw std::invalid_argument("abs_x_cubed_coefficients: negative truncation");
  const int target_degree = 2 * truncation_index;
  const NodeGrid grid(2 * target_degree > 0 ? 2 * target_degree : 0);
  std::vector<double> samples(grid.nodes.size());
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const double x = grid.nodes[j];
    samples[j] = scale * std::abs(x) * x * x;
  }
  ChebyshevCoefficients all = coeffs_of_samples(samples, Parity::Even);
  all.coeffs.resize(static_cast<std::size_t>(truncation_index) + 1);
  return all;
}

}  // namespace qsppf
