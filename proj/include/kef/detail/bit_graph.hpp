#pragma once

#include <array>
#include <cstdint>

#include "kef/graph.hpp"

namespace kef::detail {

/// Fixed-size adjacency matrix of one word per vertex. Solvers work on this
/// together with an "alive" mask, so vertex deletion is a mask update and
/// edge deletion is a cheap copy.
struct BitGraph {
  int n = 0;
  std::array<std::uint64_t, kMaxVertices> adj{};

  BitGraph() = default;
  explicit BitGraph(const Graph& g) : n(g.order()) {
    for (int v = 0; v < n; ++v) adj[v] = g.adjacent(v).bits();
  }

  VertexSet all() const { return VertexSet::range(n); }
  VertexSet nbrs(Vertex v) const { return VertexSet(adj[v]); }

  BitGraph without_edge(const Edge& e) const {
    BitGraph h = *this;
    h.adj[e.u] &= ~(std::uint64_t{1} << e.v);
    h.adj[e.v] &= ~(std::uint64_t{1} << e.u);
    return h;
  }

  /// N(A) restricted to `alive`.
  VertexSet neighborhood(VertexSet a, VertexSet alive) const {
    std::uint64_t out = 0;
    for (Vertex v : a) out |= adj[v];
    return VertexSet(out) & alive;
  }
};

}  // namespace kef::detail
