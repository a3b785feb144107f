#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kef/caps.hpp"
#include "kef/critical.hpp"
#include "kef/graph.hpp"
#include "kef/ke.hpp"

namespace kef {

/// A simple odd cycle, as a cyclically ordered vertex list.
struct OddCycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  VertexSet vertex_set() const { return VertexSet::from_members(vertices); }
  EdgeSet edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
    }
    return EdgeSet(std::move(out));
  }
  /// Throws InputError unless this is an odd simple cycle of g.
  void require_cycle_of(const Graph& g) const {
    if (length() < 3 || length() % 2 == 0) throw InputError("odd cycle must have odd length >= 3");
    VertexSet seen;
    for (Vertex v : vertices) {
      g.require_vertex(v);
      if (seen.contains(v)) throw InputError("odd cycle repeats vertex " + std::to_string(v));
      seen.insert(v);
    }
    for (const Edge& e : edges()) {
      if (!g.has_edge(e)) {
        throw InputError("odd cycle uses non-edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      }
    }
  }

  friend bool operator==(const OddCycle&, const OddCycle&) = default;
};

struct BipartiteResult {
  bool bipartite = true;
  std::vector<int> coloring;          ///< 0/1 per vertex when bipartite
  std::optional<OddCycle> odd_cycle;  ///< present when not bipartite
};

struct OddCycleCensus {
  int count = 0;           ///< odd simple cycles found, saturating at the limit
  bool saturated = false;  ///< true when the search stopped at the limit
  std::vector<OddCycle> witnesses;
};

enum class ParityClass { bipartite, almost_bipartite, multi_odd };

inline const char* to_string(ParityClass p) {
  switch (p) {
    case ParityClass::bipartite:
      return "bipartite";
    case ParityClass::almost_bipartite:
      return "almost_bipartite";
    case ParityClass::multi_odd:
      return "multi_odd";
  }
  return "?";
}

inline ParityClass parity_class_from_string(const std::string& s) {
  if (s == "bipartite") return ParityClass::bipartite;
  if (s == "almost_bipartite") return ParityClass::almost_bipartite;
  if (s == "multi_odd") return ParityClass::multi_odd;
  throw InputError("unknown parity class '" + s + "'");
}

struct Parity {
  ParityClass kind = ParityClass::bipartite;
  std::optional<OddCycle> cycle;  ///< the unique odd cycle when almost bipartite
};

/// D_y for one cycle vertex y: the component of G - E(C) containing y.
struct PendantComponent {
  Vertex root = 0;
  VertexSet vertices;
  EdgeSet edges;
};

struct PendantDecomposition {
  std::vector<PendantComponent> components;  ///< in cycle order
  VertexSet n1;                              ///< vertices off C with a neighbor on C
};

struct PartitionVerdict {
  bool applicable = false;
  VertexSet cycle_block;   ///< V(C)
  VertexSet diadem_block;  ///< N[diadem(G)]
  bool disjoint = false;
  bool covering = false;

  bool holds() const { return applicable && disjoint && covering; }
};

/// BFS 2-coloring. On failure, the odd cycle closes a same-color edge
/// through the two BFS tree paths to their lowest common ancestor.
inline BipartiteResult is_bipartite(const Graph& g) {
  const int n = g.order();
  BipartiteResult out;
  out.coloring.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    if (out.coloring[s] != -1) continue;
    out.coloring[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (out.coloring[w] == -1) {
          out.coloring[w] = 1 - out.coloring[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (out.coloring[w] == out.coloring[v]) {
          std::vector<Vertex> up;
          std::vector<Vertex> down;
          Vertex a = v;
          Vertex b = w;
          while (depth[a] > depth[b]) {
            up.push_back(a);
            a = parent[a];
          }
          while (depth[b] > depth[a]) {
            down.push_back(b);
            b = parent[b];
          }
          while (a != b) {
            up.push_back(a);
            down.push_back(b);
            a = parent[a];
            b = parent[b];
          }
          up.push_back(a);
          up.insert(up.end(), down.rbegin(), down.rend());
          out.bipartite = false;
          out.coloring.clear();
          out.odd_cycle = OddCycle{std::move(up)};
          return out;
        }
      }
    }
  }
  return out;
}

/// Counts odd simple cycles by DFS, stopping once `limit` are found. Each
/// cycle is rooted at its smallest vertex and taken in one direction only.
/// Throws CapacityError when the search exceeds `caps.cycle_work` steps.
inline OddCycleCensus odd_cycle_census(const Graph& g, int limit, const Caps& caps = {}) {
  if (limit < 2) throw InputError("odd_cycle_census limit must be >= 2");
  OddCycleCensus out;
  if (is_bipartite(g).bipartite) return out;

  std::int64_t work = 0;
  std::vector<Vertex> path;
  VertexSet on_path;
  Vertex start = 0;
  bool done = false;

  auto dfs = [&](auto&& self, Vertex v) -> void {
    for (Vertex w : g.neighbors(v)) {
      if (done) return;
      if (++work > caps.cycle_work) {
        throw CapacityError("odd_cycle_census: cycle enumeration exceeded cycle_work");
      }
      if (w == start) {
        if (path.size() >= 3 && path[1] < path.back() && path.size() % 2 == 1) {
          out.witnesses.push_back(OddCycle{path});
          if (++out.count >= limit) {
            out.saturated = true;
            done = true;
          }
        }
        continue;
      }
      if (w < start || on_path.contains(w)) continue;
      path.push_back(w);
      on_path.insert(w);
      self(self, w);
      on_path.erase(w);
      path.pop_back();
    }
  };

  for (start = 0; start < g.order() && !done; ++start) {
    path.assign(1, start);
    on_path = VertexSet::single(start);
    dfs(dfs, start);
  }
  return out;
}

inline Parity classify_parity(const Graph& g, const Caps& caps = {}) {
  const OddCycleCensus census = odd_cycle_census(g, 2, caps);
  Parity out;
  if (census.count == 0) {
    out.kind = ParityClass::bipartite;
  } else if (census.count == 1) {
    out.kind = ParityClass::almost_bipartite;
    out.cycle = census.witnesses.front();
  } else {
    out.kind = ParityClass::multi_odd;
  }
  return out;
}

/// Components of G - E(C) keyed by cycle vertex, plus N1(C).
inline PendantDecomposition pendant_decomposition(const Graph& g, const OddCycle& c) {
  c.require_cycle_of(g);
  const EdgeSet cycle_edges = c.edges();
  const VertexSet on_cycle = c.vertex_set();
  PendantDecomposition out;
  for (Vertex y : c.vertices) {
    PendantComponent comp;
    comp.root = y;
    comp.vertices = VertexSet::single(y);
    VertexSet frontier = comp.vertices;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) {
        for (Vertex w : g.neighbors(v)) {
          if (!cycle_edges.contains(Edge(v, w))) next.insert(w);
        }
      }
      frontier = next - comp.vertices;
      comp.vertices |= next;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      if (comp.vertices.contains(e.u) && comp.vertices.contains(e.v) && !cycle_edges.contains(e)) {
        edges.push_back(e);
      }
    }
    comp.edges = EdgeSet(std::move(edges));
    out.components.push_back(std::move(comp));
  }
  out.n1 = g.neighborhood(on_cycle) - on_cycle;
  return out;
}

/// Checks that V(C) and N[diadem(G)] partition V(G). Applicable only to
/// almost bipartite graphs that are not König-Egerváry.
inline PartitionVerdict partition_check(const Graph& g, const Parity& parity, const KeClassification& ke,
                                        const CriticalLandscape& landscape) {
  PartitionVerdict out;
  if (parity.kind != ParityClass::almost_bipartite || !parity.cycle || ke.is_ke) return out;
  out.applicable = true;
  out.cycle_block = parity.cycle->vertex_set();
  out.diadem_block = g.closed_neighborhood(landscape.diadem);
  out.disjoint = !out.cycle_block.intersects(out.diadem_block);
  out.covering = (out.cycle_block | out.diadem_block) == g.vertices();
  return out;
}

}  // namespace kef
