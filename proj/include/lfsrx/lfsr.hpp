#pragma once
#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lfsrx/bitpack.hpp"
#include "lfsrx/errors.hpp"

namespace lfsrx {

enum class LfsrMode { Standard, Extended };

// Fibonacci LFSR over GF(2). Flip-flop 1 is the feedback input side, flip-flop
// n the output side; the output bit is read before the clock pulse. In
// Extended mode the feedback is additionally inverted when flip-flops 1..n-1
// are all zero, which splices the all-zero state into the cycle (period 2^n).
struct LfsrConfig {
  unsigned length = 16;
  std::vector<unsigned> taps = {11, 13, 14, 16};  // 1-based flip-flop positions
  LfsrMode mode = LfsrMode::Standard;

  void validate() const {
    if (length == 0) throw ConfigError("register length must be positive");
    if (taps.empty()) throw ConfigError("tap set must not be empty");
    for (unsigned p : taps)
      if (p < 1 || p > length)
        throw ConfigError("tap position " + std::to_string(p) + " outside 1.." + std::to_string(length));
    auto sorted = taps;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ConfigError("duplicate tap position");
    if (sorted.back() != length)
      throw ConfigError("tap set must include the last flip-flop " + std::to_string(length));
  }
};

class LfsrState {
 public:
  LfsrState(const LfsrConfig& config, std::span<const std::uint8_t> seed) : cfg_(config) {
    cfg_.validate();
    if (seed.size() != cfg_.length)
      throw ConfigError("seed length " + std::to_string(seed.size()) + " does not match register length " +
                        std::to_string(cfg_.length));
    words_ = (cfg_.length + 63) / 64;
    regs_.assign(words_, 0);
    bool any = false;
    for (unsigned k = 0; k < cfg_.length; ++k) {
      if (seed[k] & 1) {
        regs_[k >> 6] |= std::uint64_t(1) << (k & 63);
        any = true;
      }
    }
    if (cfg_.mode == LfsrMode::Standard && !any)
      throw SeedError("all-zero seed locks a standard LFSR");
    tap_mask_.assign(words_, 0);
    for (unsigned p : cfg_.taps) tap_mask_[(p - 1) >> 6] |= std::uint64_t(1) << ((p - 1) & 63);
    low_mask_.assign(words_, 0);
    for (unsigned k = 0; k + 1 < cfg_.length; ++k) low_mask_[k >> 6] |= std::uint64_t(1) << (k & 63);
    top_word_mask_ = (cfg_.length & 63) ? ((std::uint64_t(1) << (cfg_.length & 63)) - 1) : ~std::uint64_t(0);
  }

  const LfsrConfig& config() const { return cfg_; }
  std::uint64_t clock() const { return clock_; }

  int bit(unsigned pos) const {  // pos in 1..n
    return static_cast<int>((regs_[(pos - 1) >> 6] >> ((pos - 1) & 63)) & 1);
  }

  BitVec registers() const {
    BitVec out(cfg_.length);
    for (unsigned k = 0; k < cfg_.length; ++k) out[k] = static_cast<std::uint8_t>((regs_[k >> 6] >> (k & 63)) & 1);
    return out;
  }

  int feedback() const {
    int fb = 0;
    for (unsigned w = 0; w < words_; ++w) fb ^= parity64(regs_[w] & tap_mask_[w]);
    if (cfg_.mode == LfsrMode::Extended) {
      bool low_zero = true;
      for (unsigned w = 0; w < words_; ++w)
        if (regs_[w] & low_mask_[w]) { low_zero = false; break; }
      if (low_zero) fb ^= 1;
    }
    return fb;
  }

  // Returns the output bit (flip-flop n before the pulse), then shifts.
  int step() {
    const int out = bit(cfg_.length);
    const std::uint64_t fb = static_cast<std::uint64_t>(feedback());
    std::uint64_t carry = fb;
    for (unsigned w = 0; w < words_; ++w) {
      const std::uint64_t next_carry = regs_[w] >> 63;
      regs_[w] = (regs_[w] << 1) | carry;
      carry = next_carry;
    }
    regs_[words_ - 1] &= top_word_mask_;
    ++clock_;
    return out;
  }

  bool registers_equal(const LfsrState& other) const { return regs_ == other.regs_; }

 private:
  LfsrConfig cfg_;
  std::vector<std::uint64_t> regs_, tap_mask_, low_mask_;
  std::uint64_t top_word_mask_ = 0;
  std::uint64_t clock_ = 0;
  unsigned words_ = 0;
};

inline LfsrState new_lfsr(const LfsrConfig& config, std::span<const std::uint8_t> seed) {
  return LfsrState(config, seed);
}

inline int feedback_bit(const LfsrState& state) { return state.feedback(); }

inline int step(LfsrState& state) { return state.step(); }

// Exhaustive-enumeration guard shared by every full-period routine.
inline constexpr unsigned kMaxEnumLength = 24;

inline void check_enumerable(unsigned length) {
  if (length > kMaxEnumLength)
    throw RangeError("register length " + std::to_string(length) + " exceeds the full-period enumeration guard of " +
                     std::to_string(kMaxEnumLength));
}

// Smallest s >= 1 with state(seed) stepped s times back at seed. Brute force.
inline std::uint64_t measure_period(const LfsrConfig& config, std::span<const std::uint8_t> seed) {
  check_enumerable(config.length);
  LfsrState state(config, seed);
  const LfsrState start = state;
  std::uint64_t s = 0;
  do {
    state.step();
    ++s;
  } while (!state.registers_equal(start));
  return s;
}

// Hex string (optional 0x prefix) to a seed vector; flip-flop 1 = least
// significant bit of the value.
inline BitVec seed_from_hex(std::string_view hex, unsigned length) {
  std::string_view digits = hex;
  if (digits.size() >= 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) digits.remove_prefix(2);
  if (digits.empty()) throw SeedError("empty seed string");
  BitVec bits(length, 0);
  unsigned bitpos = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    const char c = digits[i];
    unsigned v;
    if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f') v = static_cast<unsigned>(c - 'a') + 10;
    else if (c >= 'A' && c <= 'F') v = static_cast<unsigned>(c - 'A') + 10;
    else throw SeedError(std::string("invalid hex digit '") + c + "' in seed");
    for (unsigned b = 0; b < 4; ++b, ++bitpos) {
      if ((v >> b) & 1) {
        if (bitpos >= length) throw SeedError("seed value exceeds register width");
        bits[bitpos] = 1;
      }
    }
  }
  return bits;
}

inline std::string seed_to_hex(std::span<const std::uint8_t> seed) {
  const std::size_t nibbles = (seed.size() + 3) / 4;
  std::string out = "0x";
  for (std::size_t i = nibbles; i-- > 0;) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const std::size_t k = i * 4 + b;
      if (k < seed.size() && seed[k]) v |= 1u << b;
    }
    out += "0123456789abcdef"[v];
  }
  return out;
}

}  // namespace lfsrx
