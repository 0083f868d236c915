#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qsppf {

namespace detail {

// J_k(tau) for tiny tau from the leading terms of the ascending series;
// three terms leave a relative error below (tau/2)^6 / 6.
inline std::vector<double> bessel_small_arg(int kmax, double tau) {
  std::vector<double> out(static_cast<std::size_t>(kmax) + 1, 0.0);
  const double u = 0.5 * tau;
  const double u2 = u * u;
  double lead = 1.0;  // (tau/2)^k / k!
  for (int k = 0; k <= kmax; ++k) {
    const double kp1 = static_cast<double>(k) + 1.0;
    out[static_cast<std::size_t>(k)] =
        lead * (1.0 - u2 / kp1 + 0.5 * u2 * u2 / (kp1 * (kp1 + 1.0)));
    lead *= u / kp1;  // underflows to 0 for large k, which is the right answer
  }
  return out;
}

}  // namespace detail

// J_0(tau)..J_kmax(tau) by Miller's backward recurrence, normalized with
// J_0 + 2 sum_{k>=1} J_{2k} = 1. The downward pass starts 60 indices above
// both kmax and the turning point k ~ tau, where the recurrence is dominated
// by the decaying solution; intermediate growth is handled by exact binary
// rescaling.
inline std::vector<double> bessel_j_sequence(int kmax, double tau) {
  if (kmax < 0) throw std::invalid_argument("bessel_j_sequence: kmax must be >= 0");
  if (!(tau >= 0.0)) throw std::domain_error("bessel_j_sequence: tau must be >= 0");
  if (tau < 1e-6) return detail::bessel_small_arg(kmax, tau);

  const int turning = static_cast<int>(std::ceil(1.4 * tau));
  const int kstart = std::max(kmax, turning) + 60;

  std::vector<double> trial(static_cast<std::size_t>(kstart) + 1, 0.0);
  std::vector<int> epoch(static_cast<std::size_t>(kstart) + 1, 0);
  constexpr double kRescaleThreshold = 1e250;
  constexpr int kRescaleExp = -900;  // 2^-900, exact in binary

  double above = 0.0;            // J_{k+1} trial value
  double here = 1e-30;           // J_k trial value
  int rescales = 0;
  trial[static_cast<std::size_t>(kstart)] = here;
  for (int k = kstart; k >= 1; --k) {
    double below = (2.0 * static_cast<double>(k) / tau) * here - above;
    if (std::abs(below) > kRescaleThreshold) {
      below = std::ldexp(below, kRescaleExp);
      here = std::ldexp(here, kRescaleExp);
      ++rescales;
    }
    above = here;
    here = below;
    trial[static_cast<std::size_t>(k - 1)] = here;
    epoch[static_cast<std::size_t>(k - 1)] = rescales;
  }

  // bring every stored value to the final scale, then normalize
  double norm = 0.0;
  for (int k = 0; k <= kstart; ++k) {
    const int lag = rescales - epoch[static_cast<std::size_t>(k)];
    const double v = lag == 0 ? trial[static_cast<std::size_t>(k)]
                              : std::ldexp(trial[static_cast<std::size_t>(k)], kRescaleExp * lag);
    trial[static_cast<std::size_t>(k)] = v;
    if (k == 0)
      norm += v;
    else if (k % 2 == 0)
      norm += 2.0 * v;
  }
  std::vector<double> out(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) out[static_cast<std::size_t>(k)] = trial[static_cast<std::size_t>(k)] / norm;
  return out;
}

// Bessel function of the first kind J_k(tau), tau >= 0.
inline double bessel_j(int k, double tau) {
  return bessel_j_sequence(k, tau)[static_cast<std::size_t>(k)];
}

}  // namespace qsppf
