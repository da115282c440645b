#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// Partition of [0,n) into connected components. Component ids are assigned in
// order of each component's smallest vertex, so ties for the largest
// component resolve to the one containing the smallest vertex id.
struct ComponentPartition {
  std::vector<std::uint32_t> component;  // per vertex
  std::vector<std::uint32_t> sizes;      // per component id
  std::uint32_t largest = 0;

  std::uint32_t count() const { return static_cast<std::uint32_t>(sizes.size()); }
  std::uint32_t largest_size() const { return sizes.empty() ? 0 : sizes[largest]; }
};

namespace detail {

// Union-find with path halving.
struct Dsu {
  std::vector<std::uint32_t> parent;

  explicit Dsu(std::uint32_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns false if x and y were already connected.
  bool unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    parent[y] = x;
    return true;
  }
};

}  // namespace detail

inline ComponentPartition connected_components(const Graph& g) {
  detail::Dsu dsu(g.n);
  for (const Edge& e : g.edges) dsu.unite(e.u, e.v);

  ComponentPartition part;
  part.component.assign(g.n, 0);
  std::vector<std::uint32_t> label(g.n, 0xFFFFFFFFu);
  for (VertexId v = 0; v < g.n; ++v) {
    std::uint32_t root = dsu.find(v);
    if (label[root] == 0xFFFFFFFFu) {
      label[root] = static_cast<std::uint32_t>(part.sizes.size());
      part.sizes.push_back(0);
    }
    part.component[v] = label[root];
    part.sizes[label[root]] += 1;
  }
  for (std::uint32_t cid = 0; cid < part.count(); ++cid)
    if (part.sizes[cid] > part.sizes[part.largest]) part.largest = cid;
  return part;
}

inline std::vector<VertexId> component_vertices(const ComponentPartition& part,
                                                std::uint32_t cid) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < part.component.size(); ++v)
    if (part.component[v] == cid) out.push_back(v);
  return out;
}

inline std::vector<EdgeId> component_edges(const Graph& g, const ComponentPartition& part,
                                           std::uint32_t cid) {
  std::vector<EdgeId> out;
  for (EdgeId id = 0; id < g.edge_count(); ++id)
    if (part.component[g.edges[id].u] == cid) out.push_back(id);
  return out;
}

}  // namespace rainbow
