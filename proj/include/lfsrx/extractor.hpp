#pragma once
#include <array>
#include <cstdint>
#include <utility>

#include "lfsrx/errors.hpp"

namespace lfsrx {

// Output alphabet of every extractor: a bit or the discarded symbol (invalid).
enum class TriState : std::uint8_t { Zero = 0, One = 1, Invalid = 2 };

inline constexpr TriState make_tri(int bit) { return bit ? TriState::One : TriState::Zero; }
inline constexpr bool is_valid(TriState t) { return t != TriState::Invalid; }
inline constexpr int tri_bit(TriState t) { return t == TriState::One ? 1 : 0; }

// Pairwise von Neumann translation: 00 and 11 are discarded, otherwise the
// second bit of the pair is emitted (01 -> 1, 10 -> 0).
inline constexpr TriState von_neumann_step(int a0, int a1) {
  if (a0 == a1) return TriState::Invalid;
  return make_tri(a1);
}

// Three-bit block translation. Each block of three primary bits yields two
// output slots (b0 emitted first).
inline constexpr std::pair<TriState, TriState> three_bit_step(int a0, int a1, int a2) {
  constexpr TriState Z = TriState::Zero, O = TriState::One, X = TriState::Invalid;
  constexpr std::array<std::pair<TriState, TriState>, 8> table = {{
      {X, X},  // 000
      {Z, X},  // 001
      {O, O},  // 010
      {Z, O},  // 011
      {O, Z},  // 100
      {O, X},  // 101
      {Z, Z},  // 110
      {X, X},  // 111
  }};
  return table[static_cast<std::size_t>((a0 << 2) | (a1 << 1) | a2)];
}

// Run extractor, triplet view: sliding window over the primary stream; the
// third bit is emitted when the first two differ.
inline constexpr TriState run_triplet_step(int a0, int a1, int a2) {
  if (a0 != a1) return make_tri(a2);
  return TriState::Invalid;
}

// Run extractor, run-length view: one output bit per completed run of
// identical bits. Length-1 runs emit the complement of the run value, longer
// runs emit the value itself.
inline constexpr int run_length_step(int run_value, std::uint64_t run_length) {
  return run_length == 1 ? (run_value ^ 1) : run_value;
}

}  // namespace lfsrx
