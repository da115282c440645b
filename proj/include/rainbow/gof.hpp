#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "rainbow/distributions.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

namespace detail {

// Regularized upper incomplete gamma Q(a, x): series for x < a+1,
// continued fraction otherwise.
inline double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw DomainError("gamma_q: need x >= 0, a > 0");
  if (x == 0.0) return 1.0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    double p = sum * std::exp(-x + a * std::log(x) - lg);
    return 1.0 - p;
  }
  double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::fabs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - lg) * h;
}

}  // namespace detail

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
};

// Pearson chi-square of observed counts against cell probabilities. probs
// must sum to 1 over the same cells.
inline ChiSquareResult chi_square_gof(std::span<const std::uint64_t> counts,
                                      std::span<const double> probs) {
  if (counts.size() != probs.size() || counts.size() < 2)
    throw DomainError("chi_square_gof: need >= 2 matching cells");
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  if (total == 0) throw DomainError("chi_square_gof: empty sample");
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    double expected = probs[i] * static_cast<double>(total);
    if (expected <= 0.0) throw DomainError("chi_square_gof: zero expected cell");
    double diff = static_cast<double>(counts[i]) - expected;
    stat += diff * diff / expected;
  }
  std::size_t dof = counts.size() - 1;
  double p = detail::gamma_q(static_cast<double>(dof) / 2.0, stat / 2.0);
  return ChiSquareResult{stat, dof, p};
}

// Chi-square of positive integer samples against Borel(mu). Cells are
// 1,2,...,B plus one tail cell, with B chosen so every cell expects at least
// min_expected observations.
inline ChiSquareResult borel_goodness_of_fit(std::span<const std::uint64_t> samples, double mu,
                                             double min_expected = 5.0) {
  if (samples.empty()) throw DomainError("borel_goodness_of_fit: empty sample");
  const double total = static_cast<double>(samples.size());
  std::vector<double> probs;
  double cdf = 0.0;
  std::int64_t k = 1;
  while (true) {
    double p = borel_pmf(mu, k);
    if (p * total < min_expected) break;
    double tail_after = 1.0 - cdf - p;
    if (tail_after * total < min_expected) break;  // keep the tail cell viable
    probs.push_back(p);
    cdf += p;
    k += 1;
  }
  if (probs.empty()) throw DomainError("borel_goodness_of_fit: sample too small");
  const std::size_t bins = probs.size();
  probs.push_back(1.0 - cdf);  // tail cell: values > bins

  std::vector<std::uint64_t> counts(bins + 1, 0);
  for (std::uint64_t s : samples) {
    if (s == 0) throw DomainError("borel_goodness_of_fit: Borel support starts at 1");
    if (s <= bins)
      counts[s - 1] += 1;
    else
      counts[bins] += 1;
  }
  return chi_square_gof(counts, probs);
}

}  // namespace rainbow
