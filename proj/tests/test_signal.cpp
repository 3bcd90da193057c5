#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>
#include <vector>

#include "expected.hpp"
#include "lfsrx/correlation.hpp"
#include "lfsrx/generator.hpp"
#include "lfsrx/spectrum.hpp"

using namespace lfsrx;

namespace {

BitVec preset_bits(const char* name) {
  return valid_bits_of(full_period_stream(find_preset(name).spec).first);
}

// O(N^2) model of the circular autocorrelation
std::vector<double> naive_autocorrelation(const BitVec& bits) {
  const std::size_t n = bits.size();
  std::vector<double> r(n / 2 + 1);
  for (std::size_t tau = 0; tau <= n / 2; ++tau) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i)
      sum += bits[i] == bits[(i + tau) % n] ? 1 : -1;
    r[tau] = static_cast<double>(sum) / static_cast<double>(n);
  }
  return r;
}

std::vector<std::complex<double>> naive_dft(const std::vector<std::complex<double>>& in) {
  const std::size_t n = in.size();
  std::vector<std::complex<double>> out(n);
  const double w = -2.0 * 3.14159265358979323846 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc = 0;
    for (std::size_t j = 0; j < n; ++j)
      acc += in[j] * std::polar(1.0, w * static_cast<double>(k * j));
    out[k] = acc;
  }
  return out;
}

BitVec random_balanced(std::mt19937& rng, std::size_t half) {
  BitVec bits(2 * half, 0);
  std::fill(bits.begin() + static_cast<std::ptrdiff_t>(half), bits.end(), 1);
  std::shuffle(bits.begin(), bits.end(), rng);
  return bits;
}

}  // namespace

TEST_CASE("autocorrelation guards") {
  CHECK_THROWS_AS(autocorrelation(BitVec{1}), LengthError);
  CHECK_THROWS_AS(autocorrelation(BitVec{1, 1, 1, 0}), LengthError);  // unbalanced
  CHECK_THROWS_AS(autocorrelation(BitVec(64, 0)), LengthError);
}

TEST_CASE("autocorrelation against the quadratic model") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t half = 8 + static_cast<std::size_t>(rng() % 120);
    const BitVec bits = random_balanced(rng, half);
    const SeriesTable table = autocorrelation(bits);
    const auto naive = naive_autocorrelation(bits);
    REQUIRE(table.rows.size() == naive.size());
    for (std::size_t tau = 0; tau < naive.size(); ++tau) {
      CHECK(table.rows[tau].x == static_cast<double>(tau));
      CHECK(table.rows[tau].y == naive[tau]);  // both are exact rationals over n
    }
  }
}

TEST_CASE("autocorrelation at lag zero is exactly one") {
  std::mt19937 rng(31);
  const BitVec bits = random_balanced(rng, 500);
  CHECK(autocorrelation(bits).rows[0].y == 1.0);
}

TEST_CASE("preset autocorrelation sigmas match the reference run") {
  struct Row {
    const char* preset;
    double sigma;
  };
  const Row rows[] = {
      {"slfsr16-vne", expected::kCorrSigmaVne},
      {"elfsr16-3be", expected::kCorrSigmaTbe},
      {"slfsr16-re", expected::kCorrSigmaRe},
  };
  for (const auto& row : rows) {
    INFO(row.preset);
    const SeriesTable table = autocorrelation(preset_bits(row.preset));
    CHECK(table.rows[0].y == 1.0);
    CHECK(correlation_sigma(table) == Catch::Approx(row.sigma).epsilon(1e-9));
  }
}

TEST_CASE("dft agrees with the quadratic model at awkward sizes") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (const std::size_t n : {4u, 12u, 15u, 16u, 40u, 63u, 100u}) {
    std::vector<std::complex<double>> in(n);
    for (auto& v : in) v = {dist(rng), dist(rng)};
    const auto fast = detail::dft(in);
    const auto slow = naive_dft(in);
    REQUIRE(fast.size() == n);
    for (std::size_t k = 0; k < n; ++k)
      CHECK(std::abs(fast[k] - slow[k]) < 1e-9);
  }
}

TEST_CASE("power spectrum of simple signals") {
  // a single one: flat spectrum 1/n^2 over the one-sided bins 0..n/2
  const auto impulse = power_spectrum(BitVec{1, 0, 0, 0});
  REQUIRE(impulse.rows.size() == 3);
  for (const auto& row : impulse.rows) CHECK(row.y == Catch::Approx(1.0 / 16.0).epsilon(1e-12));

  // all ones: everything in the DC bin
  const auto flat = power_spectrum(BitVec{1, 1, 1, 1});
  REQUIRE(flat.rows.size() == 3);
  CHECK(flat.rows[0].y == Catch::Approx(1.0).epsilon(1e-12));
  for (std::size_t k = 1; k < flat.rows.size(); ++k) CHECK(flat.rows[k].y < 1e-24);
}

TEST_CASE("preset spectra match the reference run") {
  struct Row {
    const char* preset;
    double mean_nondc;
  };
  const Row rows[] = {
      {"slfsr16-vne", expected::kMeanNonDcVne},
      {"elfsr16-3be", expected::kMeanNonDcTbe},
      {"slfsr16-re", expected::kMeanNonDcRe},
  };
  for (const auto& row : rows) {
    INFO(row.preset);
    const auto [table, summary] = power_spectrum_with_summary(preset_bits(row.preset));
    CHECK(summary.p0 == Catch::Approx(0.25).margin(1e-12));
    CHECK(summary.mean_nondc == Catch::Approx(row.mean_nondc).epsilon(1e-6));
    CHECK(summary.parseval_lhs == Catch::Approx(summary.parseval_rhs).epsilon(1e-9));
    CHECK(table.rows.size() == summary.bins);
  }
}
