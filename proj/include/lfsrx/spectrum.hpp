#pragma once
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "lfsrx/errors.hpp"
#include "lfsrx/series.hpp"

namespace lfsrx {

namespace detail {

inline void fft_pow2(std::vector<std::complex<double>>& a, bool invert) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (invert ? 1.0 : -1.0);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> w = std::polar(1.0, ang * static_cast<double>(j));
        const std::complex<double> u = a[i + j];
        const std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
  if (invert)
    for (auto& x : a) x /= static_cast<double>(n);
}

// Forward DFT of arbitrary length: radix-2 when possible, otherwise Bluestein
// with the chirp exponent reduced mod 2n so large indices stay exact.
inline std::vector<std::complex<double>> dft(std::vector<std::complex<double>> x) {
  const std::size_t n = x.size();
  if (n == 0) return x;
  if ((n & (n - 1)) == 0) {
    fft_pow2(x, false);
    return x;
  }
  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;
  std::vector<std::complex<double>> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t sq = (static_cast<std::uint64_t>(j) * j) % (2 * n);
    chirp[j] = std::polar(1.0, -std::numbers::pi * static_cast<double>(sq) / static_cast<double>(n));
  }
  std::vector<std::complex<double>> a(m), b(m);
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * chirp[j];
  b[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) b[j] = b[m - j] = std::conj(chirp[j]);
  fft_pow2(a, false);
  fft_pow2(b, false);
  for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
  fft_pow2(a, true);
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * chirp[k];
  return out;
}

}  // namespace detail

struct SpectrumSummary {
  double p0 = 0.0;
  double mean_nondc = 0.0;      // mean of one-sided bins 1..N/2
  double parseval_lhs = 0.0;    // sum of the two-sided spectrum
  double parseval_rhs = 0.0;    // mean of the squared raw sequence
  std::size_t bins = 0;         // one-sided bin count including DC
};

// One-sided power spectrum of the raw 0/1 sequence: P_k = |X_k|^2 / N^2 over
// bins 0..N/2, plus summary statistics from the two-sided spectrum.
inline std::pair<SeriesTable, SpectrumSummary> power_spectrum_with_summary(std::span<const std::uint8_t> bits) {
  const std::size_t n = bits.size();
  if (n < 2) throw LengthError("power spectrum needs at least two bits");
  std::vector<std::complex<double>> x(n);
  std::uint64_t ones = 0;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<double>(bits[i] & 1);
    ones += bits[i] & 1;
  }
  const std::vector<std::complex<double>> spec = detail::dft(std::move(x));
  const double n2 = static_cast<double>(n) * static_cast<double>(n);

  SpectrumSummary sum;
  sum.parseval_rhs = static_cast<double>(ones) / static_cast<double>(n);
  SeriesTable table;
  table.label = "power spectrum";
  table.rows.reserve(n / 2 + 1);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = std::norm(spec[k]) / n2;
    sum.parseval_lhs += p;
    if (k <= n / 2) {
      SeriesRow row;
      row.x = static_cast<double>(k);
      row.y = p;
      table.rows.push_back(row);
      if (k == 0) sum.p0 = p;
      else sum.mean_nondc += p;
    }
  }
  sum.bins = table.rows.size();
  if (sum.bins > 1) sum.mean_nondc /= static_cast<double>(sum.bins - 1);
  return {std::move(table), sum};
}

inline SeriesTable power_spectrum(std::span<const std::uint8_t> bits) {
  return power_spectrum_with_summary(bits).first;
}

inline SpectrumSummary spectrum_summary(std::span<const std::uint8_t> bits) {
  return power_spectrum_with_summary(bits).second;
}

}  // namespace lfsrx
