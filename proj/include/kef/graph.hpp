#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kef/errors.hpp"
#include "kef/vertex_set.hpp"

namespace kef {

class Graph;

/// A graph derived from a parent by deletion, with vertices re-indexed
/// 0..n'-1. `to_parent[i]` is the parent id of vertex i.
struct Subgraph;

/// Immutable simple undirected graph on vertices 0..n-1 (n <= 64).
///
/// Adjacency is held twice: one bitset word per vertex, and sorted
/// neighbor lists in a flat array. All "mutations" return new values.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on self-loops, duplicate edges, or out-of-range ids,
  /// and CapacityError when n exceeds kMaxVertices.
  Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    if (n > kMaxVertices) {
      throw CapacityError("graph order " + std::to_string(n) + " exceeds the limit of " +
                          std::to_string(kMaxVertices));
    }
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
      if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v >= n) {
        throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} out of range for n=" + std::to_string(n));
      }
      if (adj_[e.u].contains(e.v)) {
        throw InputError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      }
      adj_[e.u].insert(e.v);
      adj_[e.v].insert(e.u);
      edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    build_lists();
  }

  /// Builds from adjacency words; the words must be symmetric and loop-free.
  static Graph from_adjacency(int n, std::span<const std::uint64_t> rows) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (Vertex v : VertexSet(rows[u]) - VertexSet::range(u + 1)) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  VertexSet vertices() const { return VertexSet::range(n_); }
  const std::vector<Edge>& edges() const { return edges_; }

  VertexSet adjacent(Vertex v) const { return adj_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {flat_.data() + offsets_[v], flat_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const {
    return u >= 0 && u < n_ && v >= 0 && v < n_ && adj_[u].contains(v);
  }
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  /// Raw adjacency words, one per vertex.
  std::vector<std::uint64_t> adjacency_words() const {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) rows[v] = adj_[v].bits();
    return rows;
  }

  void require_valid(VertexSet a) const {
    if (!a.fits(n_)) {
      throw InputError("vertex set " + to_string(a) + " is not valid for a graph of order " +
                       std::to_string(n_));
    }
  }
  void require_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw InputError("vertex " + std::to_string(v) + " not in graph");
  }

  /// N(A): vertices with at least one neighbor in A.
  VertexSet neighborhood(VertexSet a) const {
    require_valid(a);
    return open_neighborhood_unchecked(a);
  }
  /// N[A] = A ∪ N(A).
  VertexSet closed_neighborhood(VertexSet a) const { return a | neighborhood(a); }

  /// d(X) = |X| - |N(X)|, defined for any X (independence not required).
  int difference(VertexSet x) const { return x.size() - neighborhood(x).size(); }

  bool is_independent(VertexSet a) const {
    require_valid(a);
    for (Vertex v : a) {
      if (adj_[v].intersects(a)) return false;
    }
    return true;
  }

  /// (A,B): edges with one end in A and the other in B. A and B must be disjoint.
  EdgeSet edges_between(VertexSet a, VertexSet b) const {
    require_valid(a);
    require_valid(b);
    if (a.intersects(b)) throw InputError("edges_between requires disjoint sets");
    std::vector<Edge> out;
    for (Vertex u : a) {
      for (Vertex v : adj_[u] & b) out.emplace_back(u, v);
    }
    return EdgeSet(std::move(out));
  }

  /// Edges with both ends in A.
  EdgeSet edges_within(VertexSet a) const {
    require_valid(a);
    std::vector<Edge> out;
    for (const Edge& e : edges_) {
      if (a.contains(e.u) && a.contains(e.v)) out.push_back(e);
    }
    return EdgeSet(std::move(out));
  }

  Subgraph induced(VertexSet keep) const;
  Subgraph delete_vertex(Vertex v) const;

  /// G - e on the same vertex set; no re-indexing needed.
  Graph delete_edge(const Edge& e) const {
    if (!has_edge(e)) {
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not in graph");
    }
    std::vector<Edge> rest;
    rest.reserve(edges_.size() - 1);
    for (const Edge& f : edges_) {
      if (f != e) rest.push_back(f);
    }
    return Graph(n_, rest);
  }

  /// Same graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw InputError("permutation size mismatch");
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(perm[e.u], perm[e.v]);
    return Graph(n_, out);
  }

  bool is_connected() const {
    if (n_ == 0) return true;
    VertexSet seen = VertexSet::single(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= adj_[v];
      frontier = next - seen;
      seen |= next;
    }
    return seen.size() == n_;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  VertexSet open_neighborhood_unchecked(VertexSet a) const {
    VertexSet out;
    for (Vertex v : a) out |= adj_[v];
    return out;
  }

  void build_lists() {
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    flat_.clear();
    flat_.reserve(2 * edges_.size());
    for (int v = 0; v < n_; ++v) {
      offsets_[v] = static_cast<std::uint32_t>(flat_.size());
      for (Vertex w : adj_[v]) flat_.push_back(w);
    }
    offsets_[n_] = static_cast<std::uint32_t>(flat_.size());
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Vertex> flat_;
};

struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  /// Maps a vertex set of the subgraph back to parent ids.
  VertexSet lift(VertexSet local) const {
    VertexSet out;
    for (Vertex v : local) out.insert(to_parent[v]);
    return out;
  }
  Edge lift(const Edge& e) const { return {to_parent[e.u], to_parent[e.v]}; }
};

inline Subgraph Graph::induced(VertexSet keep) const {
  require_valid(keep);
  std::vector<Vertex> local(static_cast<std::size_t>(n_), -1);
  Subgraph sub;
  for (Vertex v : keep) {
    local[v] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    if (keep.contains(e.u) && keep.contains(e.v)) out.emplace_back(local[e.u], local[e.v]);
  }
  sub.graph = Graph(keep.size(), out);
  return sub;
}

inline Subgraph Graph::delete_vertex(Vertex v) const {
  require_vertex(v);
  return induced(vertices() - VertexSet::single(v));
}

}  // namespace kef
