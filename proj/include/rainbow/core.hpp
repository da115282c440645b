#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "rainbow/components.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct TwoCore {
  std::vector<VertexId> vertices;  // ascending
  std::vector<EdgeId> edges;       // ascending

  bool empty() const { return vertices.empty(); }
};

namespace detail {

// Queue-based peeling of degree-<=1 vertices over the whole graph. A
// self-loop counts 2 toward its vertex, so a vertex whose only edge is a
// self-loop is never peeled.
inline void peel_to_core(const Graph& g, const Adjacency& adj,
                         std::vector<std::uint8_t>& vertex_alive,
                         std::vector<std::uint8_t>& edge_alive) {
  std::vector<std::uint32_t> deg = degrees(g);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < g.n; ++v)
    if (deg[v] <= 1) queue.push_back(v);

  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (!vertex_alive[v]) continue;
    vertex_alive[v] = 0;
    for (const auto* it = adj.begin(v); it != adj.end(v); ++it) {
      if (!edge_alive[it->edge]) continue;
      edge_alive[it->edge] = 0;
      deg[v] -= 1;
      deg[it->to] -= 1;
      if (vertex_alive[it->to] && deg[it->to] <= 1) queue.push_back(it->to);
    }
  }
}

}  // namespace detail

// Maximal subgraph of the whole graph in which every vertex has degree >= 2.
inline TwoCore two_core_all(const Graph& g) {
  Adjacency adj = build_adjacency(g);
  std::vector<std::uint8_t> vertex_alive(g.n, 1), edge_alive(g.edge_count(), 1);
  detail::peel_to_core(g, adj, vertex_alive, edge_alive);
  TwoCore core;
  for (VertexId v = 0; v < g.n; ++v)
    if (vertex_alive[v]) core.vertices.push_back(v);
  for (EdgeId id = 0; id < g.edge_count(); ++id)
    if (edge_alive[id]) core.edges.push_back(id);
  return core;
}

// 2-core of one component; empty sets if the component is a tree.
inline TwoCore two_core(const Graph& g, const ComponentPartition& part, std::uint32_t cid) {
  if (cid >= part.count()) throw DomainError("two_core: invalid component id");
  TwoCore all = two_core_all(g);
  TwoCore core;
  for (VertexId v : all.vertices)
    if (part.component[v] == cid) core.vertices.push_back(v);
  for (EdgeId id : all.edges)
    if (part.component[g.edges[id].u] == cid) core.edges.push_back(id);
  return core;
}

// Core/mantle decomposition of one component. The mantle edges form a forest
// in which each tree contains exactly one core vertex; desc(e) counts the
// vertices strictly below e, i.e. the vertices cut from the core if e were
// removed.
struct CoreMantle {
  std::uint32_t component_id = 0;
  std::vector<VertexId> core_vertices;  // ascending
  std::vector<EdgeId> core_edges;       // ascending
  std::vector<EdgeId> mantle_edges;     // ascending
  std::vector<EdgeId> parent_edge;      // per vertex; kNoEdge unless a mantle vertex here
  std::vector<std::uint32_t> desc;      // per edge; 0 unless a mantle edge here

  bool is_mantle_vertex(VertexId v) const { return parent_edge[v] != kNoEdge; }
};

inline CoreMantle core_mantle_decompose(const Graph& g, const ComponentPartition& part,
                                        std::uint32_t cid) {
  TwoCore core = two_core(g, part, cid);
  if (core.empty())
    throw EmptyCoreError("core_mantle_decompose: component has an empty 2-core");

  CoreMantle cm;
  cm.component_id = cid;
  cm.core_vertices = std::move(core.vertices);
  cm.core_edges = std::move(core.edges);
  cm.parent_edge.assign(g.n, kNoEdge);
  cm.desc.assign(g.edge_count(), 0);

  std::vector<std::uint8_t> is_core_edge(g.edge_count(), 0);
  for (EdgeId id : cm.core_edges) is_core_edge[id] = 1;
  for (EdgeId id = 0; id < g.edge_count(); ++id)
    if (!is_core_edge[id] && part.component[g.edges[id].u] == cid)
      cm.mantle_edges.push_back(id);

  // Root every mantle tree at its core vertex: BFS outward over mantle edges.
  Adjacency adj = build_adjacency(g);
  std::vector<std::uint8_t> seen(g.n, 0);
  std::vector<VertexId> order;  // mantle vertices in BFS order
  order.reserve(g.n);
  std::deque<VertexId> queue;
  for (VertexId v : cm.core_vertices) {
    seen[v] = 1;
    queue.push_back(v);
  }
  std::vector<std::uint8_t> edge_used(g.edge_count(), 0);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto* it = adj.begin(v); it != adj.end(v); ++it) {
      if (is_core_edge[it->edge] || edge_used[it->edge]) continue;
      edge_used[it->edge] = 1;
      if (seen[it->to])
        throw std::logic_error("core_mantle_decompose: mantle edges contain a cycle");
      seen[it->to] = 1;
      cm.parent_edge[it->to] = it->edge;
      order.push_back(it->to);
      queue.push_back(it->to);
    }
  }

  // Subtree sizes by reverse BFS order; desc(e) = 1 + sum of child descs.
  std::vector<std::uint32_t> subtree(g.n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    EdgeId pe = cm.parent_edge[v];
    cm.desc[pe] = subtree[v];
    const Edge& e = g.edges[pe];
    VertexId parent = (e.u == v) ? e.v : e.u;
    subtree[parent] += subtree[v];
  }
  return cm;
}

}  // namespace rainbow
