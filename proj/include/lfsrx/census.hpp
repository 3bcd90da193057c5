#pragma once
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lfsrx/bitpack.hpp"
#include "lfsrx/errors.hpp"
#include "lfsrx/generator.hpp"
#include "lfsrx/series.hpp"
#include "lfsrx/special_functions.hpp"

namespace lfsrx {

// Counts of overlapping width-bit windows over the circularly closed stream;
// the first bit of a window is the most significant pattern bit. Total
// windows = stream length.
inline std::vector<std::uint32_t> pattern_counts(std::span<const std::uint8_t> bits, unsigned width = 16) {
  if (width == 0 || width > 24) throw RangeError("pattern width must be in 1..24");
  const std::size_t n = bits.size();
  if (n < width) throw LengthError("stream shorter than the pattern width");
  const std::uint32_t mask = (std::uint32_t(1) << width) - 1;
  std::vector<std::uint32_t> counts(std::size_t(1) << width, 0);
  std::uint32_t value = 0;
  for (unsigned i = 0; i < width; ++i) value = (value << 1) | bits[i];
  ++counts[value];
  for (std::size_t i = 1; i < n; ++i) {
    value = ((value << 1) & mask) | bits[(i + width - 1) % n];
    ++counts[value];
  }
  return counts;
}

// Repetition histogram: y(k) = number of patterns occurring exactly k times,
// with the binomial reference (all patterns) x (pmf of Binomial(N, 2^-width)).
inline SeriesTable pattern_histogram(const std::vector<std::uint32_t>& counts, std::uint64_t period_length) {
  std::uint32_t kmax = 0;
  for (std::uint32_t c : counts) kmax = std::max(kmax, c);
  std::vector<std::uint64_t> y(kmax + 1, 0);
  for (std::uint32_t c : counts) ++y[c];
  const double p = 1.0 / static_cast<double>(counts.size());
  SeriesTable table;
  table.label = "pattern repetitions";
  for (std::uint32_t k = 0; k <= kmax; ++k) {
    SeriesRow row;
    row.x = k;
    row.y = static_cast<double>(y[k]);
    row.ref = static_cast<double>(counts.size()) * binom_pmf(k, period_length, p);
    table.rows.push_back(row);
  }
  return table;
}

struct RunLengthHistogram {
  SeriesTable zeros;
  SeriesTable ones;
};

// Maximal-run-length counts per bit value over the circularly closed stream,
// with reference total_runs * 0.5^l (random termination).
inline RunLengthHistogram run_length_histogram(std::span<const std::uint8_t> bits) {
  if (bits.empty()) throw LengthError("empty stream");
  std::map<std::uint64_t, std::uint64_t> hist[2];
  std::uint64_t totals[2] = {0, 0};
  for (const auto& [value, length] : circular_runs(bits)) {
    ++hist[value][length];
    ++totals[value];
  }
  RunLengthHistogram out;
  for (int v = 0; v < 2; ++v) {
    SeriesTable& t = v ? out.ones : out.zeros;
    t.label = v ? "run lengths (ones)" : "run lengths (zeros)";
    for (const auto& [length, count] : hist[v]) {
      SeriesRow row;
      row.x = static_cast<double>(length);
      row.y = static_cast<double>(count);
      row.ref = static_cast<double>(totals[v]) * std::pow(0.5, static_cast<double>(length));
      t.rows.push_back(row);
    }
  }
  return out;
}

// Histogram of primary_cost over valid symbols. Reference: geometric decay at
// rate ln 2 per cost unit, normalized over the exported support so its mass
// equals the observed valid-symbol total.
inline SeriesTable input_cost_histogram(std::span<const AnnotatedSymbol> symbols) {
  std::map<std::uint32_t, std::uint64_t> hist;
  std::uint64_t total = 0;
  for (const auto& s : symbols) {
    if (!is_valid(s.symbol)) continue;
    ++hist[s.primary_cost];
    ++total;
  }
  double ref_mass = 0.0;
  for (const auto& [cost, count] : hist) ref_mass += std::pow(0.5, static_cast<double>(cost));
  SeriesTable table;
  table.label = "input cost";
  for (const auto& [cost, count] : hist) {
    SeriesRow row;
    row.x = static_cast<double>(cost);
    row.y = static_cast<double>(count);
    row.ref = ref_mass > 0.0
                  ? static_cast<double>(total) * std::pow(0.5, static_cast<double>(cost)) / ref_mass
                  : 0.0;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace lfsrx
