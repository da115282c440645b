#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

// Solution of mu * e^{-mu} = (1+eps) * e^{-(1+eps)} on (0,1).
struct MuSolution {
  double epsilon;
  double mu;
  double residual;  // |mu e^{-mu} - (1+eps) e^{-(1+eps)}|
};

// Bisection; mu e^{-mu} is strictly increasing on (0,1), so the root is
// unique and bracketed by (0, 1).
inline MuSolution solve_mu(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw DomainError("solve_mu: epsilon must lie in (0,1)");
  const double target = (1.0 + epsilon) * std::exp(-(1.0 + epsilon));
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid * std::exp(-mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  double mu = 0.5 * (lo + hi);
  double residual = std::fabs(mu * std::exp(-mu) - target);
  if (!(residual < 1e-12))
    throw std::logic_error("solve_mu: bisection failed to reach residual < 1e-12");
  return MuSolution{epsilon, mu, residual};
}

// log of the Borel(mu) pmf at k: -mu k + (k-1) log(mu k) - log(k!).
inline double borel_log_pmf(double mu, std::int64_t k) {
  if (k < 1) throw DomainError("borel_log_pmf: k must be >= 1");
  if (!(mu > 0.0 && mu < 1.0))
    throw DomainError("borel_log_pmf: mu must lie in (0,1)");
  double kd = static_cast<double>(k);
  return -mu * kd + (kd - 1.0) * (std::log(mu) + std::log(kd)) - std::lgamma(kd + 1.0);
}

inline double borel_pmf(double mu, std::int64_t k) { return std::exp(borel_log_pmf(mu, k)); }

// P(X > j) for X ~ Borel(mu), as 1 - sum_{k<=j} pmf(k).
inline double borel_tail(double mu, std::int64_t j) {
  if (j < 1) throw DomainError("borel_tail: j must be >= 1");
  double cdf = 0.0;
  for (std::int64_t k = 1; k <= j; ++k) cdf += borel_pmf(mu, k);
  return 1.0 - cdf;
}

// The tail bound 1/(sqrt(j) mu); vacuous when >= 1.
inline double borel_tail_bound(double mu, std::int64_t j) {
  return 1.0 / (std::sqrt(static_cast<double>(j)) * mu);
}

// Cumulative table cdf[j] = P(X <= j) for j in [0, j_max].
inline std::vector<double> borel_cdf_table(double mu, std::int64_t j_max) {
  std::vector<double> cdf(static_cast<std::size_t>(j_max) + 1, 0.0);
  double acc = 0.0;
  for (std::int64_t k = 1; k <= j_max; ++k) {
    acc += borel_pmf(mu, k);
    cdf[static_cast<std::size_t>(k)] = acc;
  }
  return cdf;
}

// Exact Poisson sampler. Knuth's product method below lambda = 30; larger
// rates are split additively, which preserves the exact law.
inline std::uint64_t sample_poisson(double lambda, RngStream& rng) {
  if (lambda < 0.0 || !std::isfinite(lambda))
    throw DomainError("sample_poisson: lambda must be >= 0");
  std::uint64_t total = 0;
  while (lambda > 30.0) {
    double chunk = 30.0;
    double limit = std::exp(-chunk);
    double p = 1.0;
    std::uint64_t k = 0;
    do {
      k += 1;
      p *= rng.uniform01();
    } while (p > limit);
    total += k - 1;
    lambda -= chunk;
  }
  if (lambda == 0.0) return total;
  double limit = std::exp(-lambda);
  double p = 1.0;
  std::uint64_t k = 0;
  do {
    k += 1;
    p *= rng.uniform01();
  } while (p > limit);
  return total + k - 1;
}

// Geometric on {1,2,...}: number of Bernoulli(p) trials up to and including
// the first success. Mean 1/p.
inline std::uint64_t sample_geometric(double p_success, RngStream& rng) {
  if (!(p_success > 0.0) || p_success > 1.0)
    throw DomainError("sample_geometric: p must lie in (0,1]");
  if (p_success == 1.0) return 1;
  double u = rng.uniform01();
  double v = std::floor(std::log(u) / std::log1p(-p_success));
  return 1 + static_cast<std::uint64_t>(v);
}

// Box-Muller; consumes exactly two uniforms per call.
inline double sample_normal(double mean, double stddev, RngStream& rng) {
  double u1 = rng.uniform01();
  double u2 = rng.uniform01();
  double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  return mean + stddev * z;
}

// A Poisson(mu)-Galton-Watson tree. Vertex 0 is the root; vertices are in
// breadth-first (level) order, so parent[v] < v for v > 0.
struct PgwTree {
  std::vector<std::uint32_t> parent;  // parent[0] is unused
  std::vector<std::uint32_t> level;

  std::uint32_t size() const { return static_cast<std::uint32_t>(parent.size()); }
};

inline constexpr std::uint64_t kPgwAbortVertices = 100'000'000ull;

// Level-by-level generation: while the current level is nonempty, each of its
// vertices independently spawns Poisson(mu) children on the next level.
// Terminates with probability 1 for mu < 1; the abort threshold flags misuse.
inline PgwTree sample_pgw_tree(double mu, RngStream& rng,
                               std::uint64_t abort_vertices = kPgwAbortVertices) {
  if (!(mu >= 0.0) || !(mu < 1.0))
    throw DomainError("sample_pgw_tree: mu must lie in [0,1)");
  PgwTree tree;
  tree.parent.push_back(0);
  tree.level.push_back(0);
  std::uint32_t level_begin = 0, level_end = 1, depth = 0;
  while (level_begin < level_end) {
    depth += 1;
    for (std::uint32_t v = level_begin; v < level_end; ++v) {
      std::uint64_t children = sample_poisson(mu, rng);
      for (std::uint64_t c = 0; c < children; ++c) {
        tree.parent.push_back(v);
        tree.level.push_back(depth);
        if (tree.parent.size() > abort_vertices)
          throw InvalidMuError("sample_pgw_tree: tree exceeded the abort threshold");
      }
    }
    level_begin = level_end;
    level_end = static_cast<std::uint32_t>(tree.parent.size());
  }
  return tree;
}

}  // namespace rainbow
