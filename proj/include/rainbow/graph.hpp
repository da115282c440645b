#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = 0xFFFFFFFFu;

struct Edge {
  VertexId u;
  VertexId v;
};

// Undirected multigraph. Self-loops and parallel edges are allowed; the edge
// id is the index into `edges` and is never reindexed by any operation.
struct Graph {
  std::uint32_t n = 0;
  std::vector<Edge> edges;

  Graph() = default;
  explicit Graph(std::uint32_t vertex_count) : n(vertex_count) {}

  void add_edge(VertexId u, VertexId v) {
    if (u >= n || v >= n) throw DomainError("Graph::add_edge: vertex id out of range");
    edges.push_back(Edge{u, v});
  }

  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges.size()); }
};

// Per-vertex degree with multiplicity; a self-loop contributes 2.
inline std::vector<std::uint32_t> degrees(const Graph& g) {
  std::vector<std::uint32_t> deg(g.n, 0);
  for (const Edge& e : g.edges) {
    deg[e.u] += 1;
    deg[e.v] += 1;
  }
  return deg;
}

// CSR incidence: for each vertex, (neighbor, edge id) pairs. A self-loop at u
// appears twice in u's list, matching the degree convention above.
struct Adjacency {
  struct Item {
    VertexId to;
    EdgeId edge;
  };
  std::vector<std::uint32_t> offset;  // size n + 1
  std::vector<Item> items;

  const Item* begin(VertexId v) const { return items.data() + offset[v]; }
  const Item* end(VertexId v) const { return items.data() + offset[v + 1]; }
};

inline Adjacency build_adjacency(const Graph& g) {
  Adjacency adj;
  adj.offset.assign(g.n + 1, 0);
  for (const Edge& e : g.edges) {
    adj.offset[e.u + 1] += 1;
    adj.offset[e.v + 1] += 1;
  }
  for (std::uint32_t v = 0; v < g.n; ++v) adj.offset[v + 1] += adj.offset[v];
  adj.items.resize(adj.offset[g.n]);
  std::vector<std::uint32_t> cursor(adj.offset.begin(), adj.offset.end() - 1);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges[id];
    adj.items[cursor[e.u]++] = Adjacency::Item{e.v, id};
    adj.items[cursor[e.v]++] = Adjacency::Item{e.u, id};
  }
  return adj;
}

// Edge-list text format: header line "n <count>", then one "u v" pair per
// line; the edge id is the line order.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.n << "\n";
  for (const Edge& e : g.edges) out << e.u << " " << e.v << "\n";
}

inline Graph read_edge_list(std::istream& in) {
  std::string tag;
  std::uint32_t n = 0;
  if (!(in >> tag >> n) || tag != "n")
    throw FormatError("edge list: expected header line 'n <count>'");
  Graph g(n);
  VertexId u, v;
  while (in >> u >> v) {
    if (u >= n || v >= n) throw FormatError("edge list: vertex id out of range");
    g.edges.push_back(Edge{u, v});
  }
  return g;
}

}  // namespace rainbow
