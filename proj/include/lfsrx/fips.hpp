#pragma once
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include "lfsrx/errors.hpp"

namespace lfsrx {

// FIPS 140-1 statistical tests, evaluated on exactly 20000 bits.
inline constexpr std::size_t kFipsBits = 20000;

inline constexpr std::uint32_t kMonobitLo = 9654, kMonobitHi = 10346;
inline constexpr double kPokerLo = 1.03, kPokerHi = 57.4;
// run-length buckets 1..5 and 6+, identical bounds for zeros and ones
inline constexpr std::array<std::pair<std::uint32_t, std::uint32_t>, 6> kRunBounds = {{
    {2267, 2733}, {1079, 1421}, {502, 748}, {223, 402}, {90, 223}, {90, 223},
}};
inline constexpr std::uint32_t kLongRunThreshold = 34;

namespace detail {

inline void check_fips_length(std::size_t n) {
  if (n != kFipsBits)
    throw LengthError("FIPS tests need exactly " + std::to_string(kFipsBits) + " bits, got " + std::to_string(n));
}

}  // namespace detail

struct FipsReport {
  std::uint32_t monobit_count = 0;
  bool monobit_pass = false;
  double poker_statistic = 0.0;
  bool poker_pass = false;
  std::array<std::array<std::uint32_t, 6>, 2> run_counts{};  // [bit value][bucket], bucket 5 = length 6+
  std::array<std::array<bool, 6>, 2> run_bucket_pass{};
  bool runs_pass = false;
  std::uint32_t longest_run = 0;
  std::uint32_t long_run_count = 0;  // runs of length >= 34
  bool long_run_pass = false;

  bool pass() const { return monobit_pass && poker_pass && runs_pass && long_run_pass; }
};

inline std::pair<std::uint32_t, bool> fips_monobit(std::span<const std::uint8_t> bits) {
  detail::check_fips_length(bits.size());
  std::uint32_t ones = 0;
  for (std::uint8_t b : bits) ones += b & 1;
  return {ones, ones > kMonobitLo && ones < kMonobitHi};
}

inline std::pair<double, bool> fips_poker(std::span<const std::uint8_t> bits) {
  detail::check_fips_length(bits.size());
  std::array<std::uint32_t, 16> f{};
  for (std::size_t i = 0; i < kFipsBits; i += 4) {
    const unsigned nib = static_cast<unsigned>((bits[i] << 3) | (bits[i + 1] << 2) | (bits[i + 2] << 1) | bits[i + 3]);
    ++f[nib];
  }
  std::uint64_t sum_sq = 0;
  for (std::uint32_t c : f) sum_sq += static_cast<std::uint64_t>(c) * c;
  const double x = (16.0 / 5000.0) * static_cast<double>(sum_sq) - 5000.0;
  return {x, x > kPokerLo && x < kPokerHi};
}

struct FipsRuns {
  std::array<std::array<std::uint32_t, 6>, 2> counts{};
  std::array<std::array<bool, 6>, 2> bucket_pass{};
  std::uint32_t longest = 0;
  bool pass = false;
};

inline FipsRuns fips_runs(std::span<const std::uint8_t> bits) {
  detail::check_fips_length(bits.size());
  FipsRuns r;
  std::uint8_t cur = bits[0] & 1;
  std::uint32_t len = 1;
  auto close_run = [&r](std::uint8_t value, std::uint32_t length) {
    const std::size_t bucket = length >= 6 ? 5 : length - 1;
    ++r.counts[value][bucket];
    if (length > r.longest) r.longest = length;
  };
  for (std::size_t i = 1; i < bits.size(); ++i) {
    const std::uint8_t b = bits[i] & 1;
    if (b == cur) {
      ++len;
    } else {
      close_run(cur, len);
      cur = b;
      len = 1;
    }
  }
  close_run(cur, len);
  r.pass = true;
  for (int v = 0; v < 2; ++v) {
    for (std::size_t bucket = 0; bucket < 6; ++bucket) {
      const auto [lo, hi] = kRunBounds[bucket];
      r.bucket_pass[v][bucket] = r.counts[v][bucket] > lo && r.counts[v][bucket] < hi;
      r.pass = r.pass && r.bucket_pass[v][bucket];
    }
  }
  return r;
}

struct FipsLongRun {
  std::uint32_t longest = 0;
  std::uint32_t count = 0;  // runs reaching the threshold
  bool pass = false;
};

inline FipsLongRun fips_long_run(std::span<const std::uint8_t> bits) {
  detail::check_fips_length(bits.size());
  FipsLongRun res;
  std::uint8_t cur = bits[0] & 1;
  std::uint32_t len = 1;
  auto close_run = [&res](std::uint32_t length) {
    if (length > res.longest) res.longest = length;
    if (length >= kLongRunThreshold) ++res.count;
  };
  for (std::size_t i = 1; i < bits.size(); ++i) {
    const std::uint8_t b = bits[i] & 1;
    if (b == cur) {
      ++len;
    } else {
      close_run(len);
      cur = b;
      len = 1;
    }
  }
  close_run(len);
  res.pass = res.count == 0;
  return res;
}

inline FipsReport run_fips(std::span<const std::uint8_t> bits) {
  FipsReport rep;
  const auto [ones, mono_ok] = fips_monobit(bits);
  rep.monobit_count = ones;
  rep.monobit_pass = mono_ok;
  const auto [poker, poker_ok] = fips_poker(bits);
  rep.poker_statistic = poker;
  rep.poker_pass = poker_ok;
  const FipsRuns runs = fips_runs(bits);
  rep.run_counts = runs.counts;
  rep.run_bucket_pass = runs.bucket_pass;
  rep.runs_pass = runs.pass;
  const FipsLongRun lr = fips_long_run(bits);
  rep.longest_run = lr.longest;
  rep.long_run_count = lr.count;
  rep.long_run_pass = lr.pass;
  return rep;
}

}  // namespace lfsrx
