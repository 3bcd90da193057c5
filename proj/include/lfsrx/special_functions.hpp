#pragma once
#include <cmath>
#include <cstdint>
#include <limits>

#include "lfsrx/errors.hpp"
#include "lfsrx/series.hpp"

namespace lfsrx {

// Regularized incomplete gamma functions, series/continued-fraction split as
// in the classic special-function literature. Accurate to ~1e-14 relative for
// the chi-square arguments used here.
namespace detail {

inline constexpr double kGammaEps = 1e-16;
inline constexpr int kGammaMaxIter = 500;

inline double igam_series(double a, double x) {
  // lower regularized P(a,x), power series around x = 0
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kGammaMaxIter; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kGammaEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double igamc_cfrac(double a, double x) {
  // upper regularized Q(a,x), Lentz continued fraction
  const double tiny = std::numeric_limits<double>::min() / kGammaEps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kGammaMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kGammaEps) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace detail

inline double igam(double a, double x) {
  if (a <= 0.0) throw RangeError("igam requires a > 0");
  if (x < 0.0) throw RangeError("igam requires x >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return detail::igam_series(a, x);
  return 1.0 - detail::igamc_cfrac(a, x);
}

inline double igamc(double a, double x) {
  if (a <= 0.0) throw RangeError("igamc requires a > 0");
  if (x < 0.0) throw RangeError("igamc requires x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - detail::igam_series(a, x);
  return detail::igamc_cfrac(a, x);
}

// Survival function of the chi-square distribution.
inline double chi_square_sf(double statistic, unsigned df) {
  if (df == 0) throw RangeError("chi-square needs at least one degree of freedom");
  return igamc(df / 2.0, statistic / 2.0);
}

inline double log_choose(std::uint64_t n, std::uint64_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

inline double binom_pmf(std::uint64_t k, std::uint64_t n, double p) {
  if (k > n) return 0.0;
  if (p <= 0.0) return k == 0 ? 1.0 : 0.0;
  if (p >= 1.0) return k == n ? 1.0 : 0.0;
  const double logp = log_choose(n, k) + static_cast<double>(k) * std::log(p) +
                      static_cast<double>(n - k) * std::log1p(-p);
  return std::exp(logp);
}

struct GofResult {
  double statistic = 0.0;
  unsigned df = 0;
  double p_value = 0.0;
  std::size_t bins = 0;
};

// Pearson goodness-of-fit of y against ref over rows whose reference
// expectation is at least min_expectation.
inline GofResult chi_square_gof(const SeriesTable& table, double min_expectation = 5.0) {
  GofResult res;
  for (const auto& row : table.rows) {
    if (!row.ref || *row.ref < min_expectation) continue;
    const double d = row.y - *row.ref;
    res.statistic += d * d / *row.ref;
    ++res.bins;
  }
  if (res.bins < 2) throw LengthError("chi-square needs at least two bins above the expectation threshold");
  res.df = static_cast<unsigned>(res.bins - 1);
  res.p_value = chi_square_sf(res.statistic, res.df);
  return res;
}

}  // namespace lfsrx
