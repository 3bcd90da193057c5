#pragma once
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lfsrx/bitpack.hpp"
#include "lfsrx/errors.hpp"

namespace lfsrx {

namespace detail {

// Incremental Berlekamp-Massey over GF(2) with word-packed polynomials. The
// stream is packed in reverse so the discrepancy window s[n-L..n] is a
// contiguous bit range. on_prefix(l, L) is called after each consumed bit.
template <class F>
void bm_scan(std::span<const std::uint8_t> bits, F&& on_prefix) {
  const std::size_t n_total = bits.size();
  const std::size_t words = (n_total >> 6) + 2;
  std::vector<std::uint64_t> rev(words, 0);
  for (std::size_t i = 0; i < n_total; ++i) {
    const std::size_t j = n_total - 1 - i;
    rev[j >> 6] |= std::uint64_t(bits[i] & 1) << (j & 63);
  }
  std::vector<std::uint64_t> c(words, 0), b(words, 0);
  c[0] = b[0] = 1;
  std::uint32_t L = 0;
  std::uint64_t m = 1;
  for (std::size_t n = 0; n < n_total; ++n) {
    const std::size_t q = n_total - 1 - n;  // window start bit in rev
    const std::size_t wmax = L >> 6;
    int d = 0;
    for (std::size_t w = 0; w <= wmax; ++w) {
      std::uint64_t x = c[w] & fetch64(rev, q + 64 * w);
      if (w == wmax) {
        const unsigned used = (L & 63) + 1;
        if (used < 64) x &= (std::uint64_t(1) << used) - 1;
      }
      d ^= parity64(x);
    }
    if (d) {
      const std::size_t ws = m >> 6;
      const unsigned bs = static_cast<unsigned>(m & 63);
      if (2 * static_cast<std::uint64_t>(L) <= n) {
        std::vector<std::uint64_t> t = c;
        for (std::size_t w = 0; w + ws < words; ++w) {
          std::uint64_t v = b[w] << bs;
          if (bs && w > 0) v |= b[w - 1] >> (64 - bs);
          c[w + ws] ^= v;
        }
        L = static_cast<std::uint32_t>(n + 1 - L);
        b = std::move(t);
        m = 1;
      } else {
        for (std::size_t w = 0; w + ws < words; ++w) {
          std::uint64_t v = b[w] << bs;
          if (bs && w > 0) v |= b[w - 1] >> (64 - bs);
          c[w + ws] ^= v;
        }
        ++m;
      }
    } else {
      ++m;
    }
    on_prefix(n + 1, L);
  }
}

}  // namespace detail

// Length of the shortest LFSR over GF(2) generating the sequence.
inline std::uint32_t berlekamp_massey(std::span<const std::uint8_t> bits) {
  std::uint32_t final_l = 0;
  detail::bm_scan(bits, [&final_l](std::size_t, std::uint32_t l) { final_l = l; });
  return final_l;
}

// Linear complexity sampled at prefix lengths stride, 2*stride, ...
struct ComplexityProfile {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> rows;  // (prefix length, L)
};

inline ComplexityProfile complexity_profile(std::span<const std::uint8_t> bits, std::uint64_t stride = 64) {
  if (stride == 0) throw RangeError("profile stride must be at least 1");
  ComplexityProfile profile;
  detail::bm_scan(bits, [&profile, stride](std::size_t l, std::uint32_t lc) {
    if (l % stride == 0) profile.rows.emplace_back(l, lc);
  });
  return profile;
}

}  // namespace lfsrx
