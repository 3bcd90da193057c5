#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "expected.hpp"
#include "lfsrx/complexity.hpp"
#include "lfsrx/generator.hpp"
#include "lfsrx/lfsr.hpp"

using namespace lfsrx;

namespace {

// Textbook bit-at-a-time model kept deliberately separate from the
// word-packed implementation under test.
std::size_t reference_bm(const BitVec& s) {
  const std::size_t n = s.size();
  std::vector<std::uint8_t> c(n + 1, 0);
  std::vector<std::uint8_t> b(n + 1, 0);
  c[0] = b[0] = 1;
  std::size_t l = 0;
  std::size_t m = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t d = s[i];
    for (std::size_t j = 1; j <= l; ++j) d ^= static_cast<std::uint8_t>(c[j] & s[i - j]);
    if (d == 0) {
      ++m;
    } else if (2 * l <= i) {
      const std::vector<std::uint8_t> t = c;
      for (std::size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
      l = i + 1 - l;
      b = t;
      m = 1;
    } else {
      for (std::size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
      ++m;
    }
  }
  return l;
}

BitVec primary_bits(std::size_t count) {
  LfsrConfig cfg;
  LfsrState state(cfg, seed_from_hex("0x0001", 16));
  BitVec out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(state.step());
  return out;
}

BitVec preset_bits(const char* name) {
  return valid_bits_of(full_period_stream(find_preset(name).spec).first);
}

}  // namespace

TEST_CASE("edge cases") {
  CHECK(berlekamp_massey(BitVec{}) == 0);
  CHECK(berlekamp_massey(BitVec(50, 0)) == 0);
  CHECK(berlekamp_massey(BitVec{1}) == 1);
  // 0^(l-1) 1 needs a register of length l
  for (std::size_t l = 1; l <= 70; ++l) {
    BitVec s(l, 0);
    s.back() = 1;
    CHECK(berlekamp_massey(s) == l);
  }
  // alternating bits satisfy a length-2 recurrence
  BitVec alt(100);
  for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = i & 1;
  CHECK(berlekamp_massey(alt) == 2);
}

TEST_CASE("primary sequence needs exactly its register length") {
  for (const unsigned n : {4u, 8u, 16u}) {
    LfsrConfig cfg;
    cfg.length = n;
    cfg.taps = n == 4 ? std::vector<unsigned>{3, 4}
                      : n == 8 ? std::vector<unsigned>{4, 5, 6, 8} : std::vector<unsigned>{11, 13, 14, 16};
    BitVec seed(n, 0);
    seed[0] = 1;
    LfsrState state(cfg, seed);
    BitVec s;
    for (unsigned i = 0; i < 2 * n; ++i) s.push_back(static_cast<std::uint8_t>(state.step()));
    CHECK(berlekamp_massey(s) == n);
  }
  CHECK(berlekamp_massey(primary_bits(32)) == 16);
}

TEST_CASE("agreement with the bit-at-a-time model") {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = 1 + static_cast<std::size_t>(rng() % 48);
    BitVec s(len);
    for (auto& bit : s) bit = static_cast<std::uint8_t>(rng() & 1);
    INFO("trial " << trial << " len " << len);
    CHECK(berlekamp_massey(s) == reference_bm(s));
  }
}

TEST_CASE("profile shape") {
  CHECK_THROWS_AS(complexity_profile(BitVec(16, 1), 0), RangeError);

  std::mt19937 rng(99);
  BitVec s(320);
  for (auto& bit : s) bit = static_cast<std::uint8_t>(rng() & 1);
  const ComplexityProfile profile = complexity_profile(s, 16);
  REQUIRE(profile.rows.size() == 20);  // one sample per multiple of the stride
  std::uint32_t prev_l = 0;
  for (const auto& [len, l] : profile.rows) {
    CHECK(l >= prev_l);
    CHECK(l <= len);
    prev_l = l;
  }
  CHECK(profile.rows.back().first == 320);
  CHECK(profile.rows.back().second == reference_bm(s));
}

TEST_CASE("preset profiles match the reference run") {
  struct Row {
    const char* preset;
    std::size_t samples;
    double final_l;
    double max_dev;
  };
  const Row rows[] = {
      {"slfsr16-vne", expected::kProfileSamplesVne, expected::kProfileFinalLVne,
       expected::kProfileMaxDevVne},
      {"elfsr16-3be", expected::kProfileSamplesTbe, expected::kProfileFinalLTbe,
       expected::kProfileMaxDevTbe},
      {"slfsr16-re", expected::kProfileSamplesRe, expected::kProfileFinalLRe,
       expected::kProfileMaxDevRe},
  };
  for (const auto& row : rows) {
    INFO(row.preset);
    const ComplexityProfile profile = complexity_profile(preset_bits(row.preset), 64);
    CHECK(profile.rows.size() == row.samples);
    CHECK(profile.rows.back().second == row.final_l);
    double max_dev = 0;
    for (const auto& [len, l] : profile.rows)
      max_dev = std::max(max_dev, std::abs(l - len / 2.0));
    CHECK(max_dev == row.max_dev);
  }
}

TEST_CASE("primary profile saturates at the register length") {
  const ComplexityProfile profile = complexity_profile(primary_bits(1024), 64);
  for (const auto& [len, l] : profile.rows) CHECK(l == 16.0);
}
