#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "rainbow/distributions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

namespace detail {

inline std::uint64_t pair_count(std::uint64_t n) { return n * (n - 1) / 2; }

// Pairs (u,v), u < v, in lexicographic order. base(u) counts pairs whose
// first coordinate is below u.
inline std::uint64_t pair_base(std::uint64_t u, std::uint64_t n) {
  return u * (n - 1) - u * (u - 1) / 2;
}

inline Edge decode_pair(std::uint64_t k, std::uint64_t n) {
  long double a = static_cast<long double>(2 * n - 1);
  long double disc = a * a - 8.0L * static_cast<long double>(k);
  if (disc < 0.0L) disc = 0.0L;
  auto u = static_cast<std::uint64_t>((a - std::sqrt(disc)) / 2.0L);
  if (u >= n - 1) u = n - 2;
  while (pair_base(u + 1, n) <= k) ++u;
  while (pair_base(u, n) > k) --u;
  std::uint64_t v = u + 1 + (k - pair_base(u, n));
  return Edge{static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

}  // namespace detail

// Erdos-Renyi G(n,p) by geometric skipping over pair indices; O(m) expected.
inline Graph gnp(std::uint32_t n, double p, RngStream& rng) {
  if (n < 1) throw DomainError("gnp: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("gnp: p must lie in [0,1]");
  Graph g(n);
  const std::uint64_t total = detail::pair_count(n);
  if (p == 0.0 || total == 0) return g;
  if (p == 1.0) {
    g.edges.reserve(total);
    for (std::uint64_t k = 0; k < total; ++k) g.edges.push_back(detail::decode_pair(k, n));
    return g;
  }
  const double log_q = std::log1p(-p);
  std::uint64_t index = 0;
  while (true) {
    double u = rng.uniform01();
    double skip = std::floor(std::log(u) / log_q);
    if (skip >= static_cast<double>(total)) break;  // guards inf/overflow
    index += static_cast<std::uint64_t>(skip);
    if (index >= total) break;
    g.edges.push_back(detail::decode_pair(index, n));
    index += 1;
  }
  return g;
}

// Uniform m-subset of vertex pairs via partial Fisher-Yates over pair
// indices, with a hash map holding the displaced entries.
inline Graph gnm(std::uint32_t n, std::uint64_t m, RngStream& rng) {
  if (n < 1) throw DomainError("gnm: n must be >= 1");
  const std::uint64_t total = detail::pair_count(n);
  if (m > total) throw DomainError("gnm: m exceeds the number of vertex pairs");
  Graph g(n);
  g.edges.reserve(m);
  std::unordered_map<std::uint64_t, std::uint64_t> moved;
  moved.reserve(2 * m);
  auto lookup = [&](std::uint64_t i) {
    auto it = moved.find(i);
    return it == moved.end() ? i : it->second;
  };
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t j = i + rng.below(total - i);
    std::uint64_t picked = lookup(j);
    moved[j] = lookup(i);
    g.edges.push_back(detail::decode_pair(picked, n));
  }
  return g;
}

enum class VertexRole : std::uint8_t { kKernel = 0, kCore = 1, kMantle = 2 };

inline const char* to_string(VertexRole role) {
  switch (role) {
    case VertexRole::kKernel: return "kernel";
    case VertexRole::kCore: return "core";
    default: return "mantle";
  }
}

// Giant-component surrogate built core-out, with ground-truth labels.
// Vertex ids are allocated so that kernel vertices are [0, kernel_vertex_count),
// core vertices are [0, core_vertex_count), and mantle vertices follow; edge
// ids place all core edges before all mantle edges.
struct DlpGraph {
  Graph graph;
  double mu = 0.0;
  double lambda_drawn = 0.0;
  std::uint32_t kernel_vertex_count = 0;
  std::uint32_t core_vertex_count = 0;
  std::uint32_t core_edge_count = 0;
  std::vector<std::uint32_t> kernel_degrees;       // per kernel vertex
  std::vector<Edge> kernel_edges;                  // endpoints are kernel vertex ids
  std::vector<std::uint32_t> kernel_path_lengths;  // per kernel edge, drawn Geom(1-mu)
  std::vector<VertexId> pgw_root;                  // per vertex: the core vertex it hangs from

  VertexRole role(VertexId v) const {
    if (v < kernel_vertex_count) return VertexRole::kKernel;
    if (v < core_vertex_count) return VertexRole::kCore;
    return VertexRole::kMantle;
  }
};

// Three stages: (1) kernel degrees D_u ~ iid Poisson(Lambda) with
// Lambda ~ Normal(1+eps-mu, 1/n), the whole vector redrawn until
// sum D_u [D_u >= 3] is even, kernel paired uniformly on half-edges;
// (2) each kernel edge replaced by a path of iid Geom(1-mu) length;
// (3) an independent Poisson(mu)-Galton-Watson tree rooted at every core
// vertex. Only the surrogate itself is produced, not an ambient n-vertex
// graph.
inline DlpGraph dlp_generate(std::uint32_t n, double epsilon, RngStream& rng) {
  if (n < 1000) throw DomainError("dlp_generate: n must be >= 1000");
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw DomainError("dlp_generate: epsilon must lie in (0, 0.5)");

  DlpGraph out;
  out.mu = solve_mu(epsilon).mu;
  const double lambda_mean = 1.0 + epsilon - out.mu;
  const double lambda_sd = 1.0 / std::sqrt(static_cast<double>(n));
  double lambda = 0.0;
  do {
    lambda = sample_normal(lambda_mean, lambda_sd, rng);
  } while (lambda <= 0.0);
  out.lambda_drawn = lambda;

  // Stage 1: degree vector conditioned on even kernel half-edge count.
  std::vector<std::uint32_t> kernel_deg;
  while (true) {
    kernel_deg.clear();
    std::uint64_t half_edges = 0;
    for (std::uint32_t u = 0; u < n; ++u) {
      std::uint64_t d = sample_poisson(lambda, rng);
      if (d >= 3) {
        kernel_deg.push_back(static_cast<std::uint32_t>(d));
        half_edges += d;
      }
    }
    if (half_edges % 2 == 0) break;
  }
  if (kernel_deg.empty())
    throw KernelEmptyError("dlp_generate: no vertex drew degree >= 3");

  out.kernel_degrees = kernel_deg;
  out.kernel_vertex_count = static_cast<std::uint32_t>(kernel_deg.size());

  // Uniform configuration-model pairing of half-edges; self-loops and
  // parallel edges are kept.
  std::vector<VertexId> half;
  for (VertexId v = 0; v < out.kernel_vertex_count; ++v)
    for (std::uint32_t d = 0; d < kernel_deg[v]; ++d) half.push_back(v);
  rng.shuffle(half);
  for (std::size_t i = 0; i + 1 < half.size(); i += 2)
    out.kernel_edges.push_back(Edge{half[i], half[i + 1]});

  // Stage 2: subdivide each kernel edge into a path of Geom(1-mu) edges.
  Graph& g = out.graph;
  g.n = out.kernel_vertex_count;
  for (const Edge& ke : out.kernel_edges) {
    auto length = static_cast<std::uint32_t>(sample_geometric(1.0 - out.mu, rng));
    out.kernel_path_lengths.push_back(length);
    VertexId prev = ke.u;
    for (std::uint32_t step = 1; step < length; ++step) {
      VertexId mid = g.n++;
      g.edges.push_back(Edge{prev, mid});
      prev = mid;
    }
    g.edges.push_back(Edge{prev, ke.v});
  }
  out.core_vertex_count = g.n;
  out.core_edge_count = g.edge_count();

  // Stage 3: hang an independent PGW tree off every core vertex.
  out.pgw_root.resize(g.n);
  for (VertexId root = 0; root < out.core_vertex_count; ++root) {
    out.pgw_root[root] = root;
    PgwTree tree = sample_pgw_tree(out.mu, rng);
    if (tree.size() == 1) continue;
    std::vector<VertexId> ids(tree.size());
    ids[0] = root;
    for (std::uint32_t t = 1; t < tree.size(); ++t) {
      VertexId fresh = g.n++;
      ids[t] = fresh;
      out.pgw_root.push_back(root);
      g.edges.push_back(Edge{ids[tree.parent[t]], fresh});
    }
  }
  return out;
}

// Labels sidecar: one "vertex role" line per vertex.
inline void write_labels(std::ostream& out, const DlpGraph& dlp) {
  for (VertexId v = 0; v < dlp.graph.n; ++v)
    out << v << " " << to_string(dlp.role(v)) << "\n";
}

}  // namespace rainbow
