#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace qsppf {

namespace detail {

// in-place radix-2 Cooley-Tukey, n a power of two; sign = -1 forward
inline void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  if (n < 2) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {  // bit reversal
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // twiddles from direct trig per index, no recurrences to accumulate drift
  std::vector<std::complex<double>> w(n / 2);
  const double base = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n / 2; ++k) w[k] = std::polar(1.0, base * static_cast<double>(k));
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w[k * stride];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

// Bluestein's chirp-z: DFT of arbitrary length via one power-of-two
// convolution. Chirp exponents are reduced mod 2n before the trig call.
inline std::vector<std::complex<double>> dft_bluestein(std::span<const double> input) {
  const std::size_t n = input.size();
  const double pi_over_n = std::numbers::pi / static_cast<double>(n);
  std::vector<std::complex<double>> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t t = (j * j) % (2 * n);
    chirp[j] = std::polar(1.0, -pi_over_n * static_cast<double>(t));
  }
  std::size_t m = std::bit_ceil(2 * n - 1);
  std::vector<std::complex<double>> a(m, 0.0), b(m, 0.0);
  for (std::size_t j = 0; j < n; ++j) a[j] = input[j] * chirp[j];
  b[0] = 1.0;
  for (std::size_t j = 1; j < n; ++j) b[j] = b[m - j] = std::conj(chirp[j]);
  fft_pow2(a, -1);
  fft_pow2(b, -1);
  for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
  fft_pow2(a, +1);
  const double inv_m = 1.0 / static_cast<double>(m);
  std::vector<std::complex<double>> out(n);
  for (std::size_t l = 0; l < n; ++l) out[l] = a[l] * inv_m * chirp[l];
  return out;
}

}  // namespace detail

// Forward DFT of a real vector: v_l = sum_j input_j e^{-2 pi i l j / n},
// l = 0..n-1. O(n log n) for any n; callers here always pass odd n.
inline std::vector<std::complex<double>> dft_real(std::span<const double> input) {
  const std::size_t n = input.size();
  if (n == 0) throw std::invalid_argument("dft_real: empty input");
  if (n == 1) return {std::complex<double>(input[0], 0.0)};
  if (std::has_single_bit(n)) {
    std::vector<std::complex<double>> a(input.begin(), input.end());
    detail::fft_pow2(a, -1);
    return a;
  }
  return detail::dft_bluestein(input);
}

}  // namespace qsppf
