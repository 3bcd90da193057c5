#pragma once
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lfsrx {

// One bit per element, values 0/1.
using BitVec = std::vector<std::uint8_t>;

inline std::vector<std::uint64_t> pack_bits(std::span<const std::uint8_t> bits) {
  std::vector<std::uint64_t> words((bits.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    words[i >> 6] |= std::uint64_t(bits[i] & 1) << (i & 63);
  return words;
}

// 64 bits starting at an arbitrary bit offset; reads past the end yield zeros.
inline std::uint64_t fetch64(std::span<const std::uint64_t> words, std::size_t bit_offset) {
  const std::size_t w = bit_offset >> 6;
  const unsigned s = static_cast<unsigned>(bit_offset & 63);
  const std::uint64_t lo = w < words.size() ? words[w] : 0;
  if (s == 0) return lo;
  const std::uint64_t hi = w + 1 < words.size() ? words[w + 1] : 0;
  return (lo >> s) | (hi << (64 - s));
}

inline int parity64(std::uint64_t x) { return std::popcount(x) & 1; }

// Circular run decomposition: maximal runs of equal bits ordered by starting
// boundary, so the run that wraps across the end comes last. A constant
// sequence is a single run covering the whole circle.
inline std::vector<std::pair<int, std::uint64_t>> circular_runs(std::span<const std::uint8_t> bits) {
  const std::size_t n = bits.size();
  std::vector<std::pair<int, std::uint64_t>> runs;
  if (n == 0) return runs;
  std::vector<std::size_t> bounds;
  for (std::size_t j = 0; j < n; ++j)
    if (bits[j] != bits[(j + 1) % n]) bounds.push_back(j);
  if (bounds.empty()) {
    runs.emplace_back(bits[0], n);
    return runs;
  }
  const std::size_t m = bounds.size();
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t start = (bounds[k] + 1) % n;
    const std::size_t next = bounds[(k + 1) % m];
    std::uint64_t len = (next + n - bounds[k]) % n;
    if (len == 0) len = n;
    runs.emplace_back(bits[start], len);
  }
  return runs;
}

}  // namespace lfsrx
