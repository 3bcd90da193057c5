#pragma once
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "lfsrx/bitpack.hpp"
#include "lfsrx/errors.hpp"
#include "lfsrx/series.hpp"

namespace lfsrx {

// One-sided circular autocorrelation of the +-1 mapped stream over lags
// 0..N/2. Requires an exactly balanced stream (a full output period), so the
// mean is zero without detrending: r(tau) = (N - 2*mismatches(tau)) / N.
inline SeriesTable autocorrelation(std::span<const std::uint8_t> bits) {
  const std::size_t n = bits.size();
  if (n < 2) throw LengthError("autocorrelation needs at least two bits");
  std::uint64_t ones = 0;
  for (std::uint8_t b : bits) ones += b & 1;
  if (2 * ones != n)
    throw LengthError("autocorrelation requires a balanced full-period stream (zeros == ones)");

  // doubled packed copy so every lag is a contiguous window
  std::vector<std::uint8_t> doubled(bits.begin(), bits.end());
  doubled.insert(doubled.end(), bits.begin(), bits.end());
  const std::vector<std::uint64_t> packed = pack_bits(doubled);
  const std::size_t words = (n + 63) / 64;
  const std::uint64_t tail_mask = (n & 63) ? ((std::uint64_t(1) << (n & 63)) - 1) : ~std::uint64_t(0);

  SeriesTable table;
  table.label = "autocorrelation";
  table.rows.reserve(n / 2 + 1);
  for (std::size_t tau = 0; tau <= n / 2; ++tau) {
    std::uint64_t mismatches = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t x = fetch64(packed, w * 64) ^ fetch64(packed, w * 64 + tau);
      if (w + 1 == words) x &= tail_mask;
      mismatches += static_cast<std::uint64_t>(std::popcount(x));
    }
    SeriesRow row;
    row.x = static_cast<double>(tau);
    row.y = (static_cast<double>(n) - 2.0 * static_cast<double>(mismatches)) / static_cast<double>(n);
    table.rows.push_back(row);
  }
  return table;
}

// Population standard deviation of r(tau) over lags >= 1.
inline double correlation_sigma(const SeriesTable& table) {
  if (table.rows.size() < 2) throw LengthError("correlation series has no non-zero lags");
  double mean = 0.0;
  const std::size_t m = table.rows.size() - 1;
  for (std::size_t i = 1; i < table.rows.size(); ++i) mean += table.rows[i].y;
  mean /= static_cast<double>(m);
  double var = 0.0;
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    const double d = table.rows[i].y - mean;
    var += d * d;
  }
  return std::sqrt(var / static_cast<double>(m));
}

}  // namespace lfsrx
