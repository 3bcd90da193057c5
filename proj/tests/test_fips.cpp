#include <catch2/catch_amalgamated.hpp>

#include "expected.hpp"
#include "lfsrx/fips.hpp"
#include "lfsrx/generator.hpp"

using namespace lfsrx;

namespace {

BitVec alternating(std::size_t n) {
  BitVec bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = i & 1;
  return bits;
}

void check_preset(const char* name, const expected::FipsExpect& exp) {
  Generator gen(find_preset(name).spec);
  const BitVec bits = gen.valid_bits(kFipsBits);
  const FipsReport rep = run_fips(bits);
  CHECK(rep.monobit_count == exp.monobit);
  CHECK(rep.monobit_pass);
  CHECK(rep.poker_statistic == Catch::Approx(exp.poker).epsilon(1e-12));
  CHECK(rep.poker_pass);
  for (int v = 0; v < 2; ++v)
    for (std::size_t bucket = 0; bucket < 6; ++bucket)
      CHECK(rep.run_counts[v][bucket] == (v ? exp.ones[bucket] : exp.zeros[bucket]));
  CHECK(rep.runs_pass);
  CHECK(rep.longest_run == exp.longest);
  CHECK(rep.long_run_count == 0);
  CHECK(rep.long_run_pass);
  CHECK(rep.pass());
}

}  // namespace

TEST_CASE("length guard") {
  CHECK_THROWS_AS(fips_monobit(BitVec(19999, 0)), LengthError);
  CHECK_THROWS_AS(fips_poker(BitVec(20001, 0)), LengthError);
  CHECK_THROWS_AS(fips_runs(BitVec(100, 0)), LengthError);
  CHECK_THROWS_AS(fips_long_run(BitVec(0)), LengthError);
}

TEST_CASE("monobit") {
  const auto [count, pass] = fips_monobit(alternating(kFipsBits));
  CHECK(count == 10000);
  CHECK(pass);
  const auto [zeros_count, zeros_pass] = fips_monobit(BitVec(kFipsBits, 0));
  CHECK(zeros_count == 0);
  CHECK_FALSE(zeros_pass);
}

TEST_CASE("poker") {
  const auto [x_zeros, pass_zeros] = fips_poker(BitVec(kFipsBits, 0));
  CHECK(x_zeros == Catch::Approx(75000.0).epsilon(1e-12));
  CHECK_FALSE(pass_zeros);

  // eight nibble values used 313 times, eight used 312 times
  BitVec balanced;
  balanced.reserve(kFipsBits);
  for (int nib = 0; nib < 16; ++nib) {
    const int reps = nib < 8 ? 313 : 312;
    for (int r = 0; r < reps; ++r)
      for (int b = 3; b >= 0; --b) balanced.push_back(static_cast<std::uint8_t>((nib >> b) & 1));
  }
  REQUIRE(balanced.size() == kFipsBits);
  const auto [x_bal, pass_bal] = fips_poker(balanced);
  CHECK(x_bal == Catch::Approx(0.0128).margin(1e-9));
  CHECK_FALSE(pass_bal);  // too uniform for the lower bound
}

TEST_CASE("runs buckets") {
  const FipsRuns alt = fips_runs(alternating(kFipsBits));
  CHECK(alt.counts[0][0] == 10000);
  CHECK(alt.counts[1][0] == 10000);
  CHECK_FALSE(alt.pass);
  CHECK(alt.longest == 1);

  const FipsRuns ones = fips_runs(BitVec(kFipsBits, 1));
  CHECK(ones.counts[1][5] == 1);
  CHECK(ones.longest == kFipsBits);
  CHECK_FALSE(ones.pass);
}

TEST_CASE("long run") {
  BitVec bits = alternating(kFipsBits);
  CHECK(fips_long_run(bits).pass);

  // exactly 33 ones in a row stays legal
  bits[999] = 0;
  for (std::size_t i = 1000; i < 1033; ++i) bits[i] = 1;
  bits[1033] = 0;
  const FipsLongRun ok = fips_long_run(bits);
  CHECK(ok.longest == 33);
  CHECK(ok.pass);

  // 34 in a row fails
  bits[1999] = 0;
  for (std::size_t i = 2000; i < 2034; ++i) bits[i] = 1;
  bits[2034] = 0;
  const FipsLongRun bad = fips_long_run(bits);
  CHECK(bad.count == 1);
  CHECK_FALSE(bad.pass);
}

TEST_CASE("default-seed presets pass all tests with the reference numbers") {
  check_preset("slfsr16-vne", expected::kFipsVne);
  check_preset("elfsr16-3be", expected::kFipsTbe);
  check_preset("slfsr16-re", expected::kFipsRe);
}
