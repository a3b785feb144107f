#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "kef/caps.hpp"
#include "kef/detail/bit_graph.hpp"
#include "kef/graph.hpp"

namespace kef {

/// A family of independent sets of one host graph, sorted lexicographically.
struct IndependentFamily {
  std::vector<VertexSet> sets;
  int cardinality = 0;  ///< common size of the members

  VertexSet intersection() const {
    if (sets.empty()) return {};
    VertexSet out = sets.front();
    for (VertexSet s : sets) out &= s;
    return out;
  }
  VertexSet union_all() const {
    VertexSet out;
    for (VertexSet s : sets) out |= s;
    return out;
  }
  bool contains_superset_of(VertexSet a) const {
    return std::any_of(sets.begin(), sets.end(), [a](VertexSet s) { return a.is_subset_of(s); });
  }
};

struct AlphaResult {
  int alpha = 0;
  VertexSet witness;
};

namespace detail {

/// Greedy partition of `p` into cliques; the number of cliques bounds the
/// independence number of G[p] from above.
inline int clique_cover_bound(const BitGraph& g, VertexSet p) {
  int cliques = 0;
  std::uint64_t rest = p.bits();
  while (rest != 0) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint64_t cand = g.adj[v] & rest;
    while (cand != 0) {
      const int u = std::countr_zero(cand);
      rest &= ~(std::uint64_t{1} << u);
      cand &= g.adj[u] & ~(std::uint64_t{1} << u);
    }
    ++cliques;
  }
  return cliques;
}

/// Exact maximum independent set by branch and bound on max-degree vertices.
class MaxIndependentSearch {
 public:
  explicit MaxIndependentSearch(const BitGraph& g) : g_(g) {}

  AlphaResult run(VertexSet alive) {
    best_ = -1;
    best_set_ = {};
    search(alive, {});
    return {best_, best_set_};
  }

 private:
  void search(VertexSet p, VertexSet cur) {
    // Vertices of degree <= 1 inside p belong to some maximum independent set of G[p].
    for (;;) {
      bool changed = false;
      for (Vertex v : p) {
        if (!p.contains(v)) continue;
        const VertexSet nv = g_.nbrs(v) & p;
        if (nv.size() <= 1) {
          cur.insert(v);
          p -= nv | VertexSet::single(v);
          changed = true;
        }
      }
      if (!changed) break;
    }
    if (p.empty()) {
      if (cur.size() > best_) {
        best_ = cur.size();
        best_set_ = cur;
      }
      return;
    }
    if (cur.size() + clique_cover_bound(g_, p) <= best_) return;

    Vertex pivot = -1;
    int pivot_degree = -1;
    for (Vertex v : p) {
      const int deg = (g_.nbrs(v) & p).size();
      if (deg > pivot_degree) {
        pivot = v;
        pivot_degree = deg;
      }
    }
    const VertexSet with = VertexSet::single(pivot);
    search(p - (g_.nbrs(pivot) | with), cur | with);
    search(p - with, cur);
  }

  const BitGraph& g_;
  int best_ = -1;
  VertexSet best_set_;
};

inline AlphaResult alpha(const BitGraph& g, VertexSet alive) { return MaxIndependentSearch(g).run(alive); }

/// Enumerates every independent set of size `target` inside `alive`, in
/// lexicographic order. Returns false (and stops) once `limit` sets are seen.
template <typename Visit>
bool enumerate_maximum(const BitGraph& g, VertexSet alive, int target, std::int64_t limit, Visit&& visit) {
  std::int64_t seen = 0;
  bool ok = true;
  auto rec = [&](auto&& self, VertexSet p, VertexSet cur) -> void {
    if (!ok) return;
    if (cur.size() + clique_cover_bound(g, p) < target) return;
    if (p.empty()) {
      if (cur.size() == target) {
        if (++seen > limit) {
          ok = false;
          return;
        }
        visit(cur);
      }
      return;
    }
    const Vertex v = p.front();
    const VertexSet with = VertexSet::single(v);
    self(self, p - (g.nbrs(v) | with), cur | with);
    self(self, p - with, cur);
  };
  rec(rec, alive, {});
  return ok;
}

inline void require_order(const Graph& g, int cap, const char* what) {
  if (g.order() > cap) {
    throw CapacityError(std::string(what) + ": order " + std::to_string(g.order()) + " exceeds cap " +
                        std::to_string(cap));
  }
}

}  // namespace detail

/// Independence number with one maximum independent set.
inline AlphaResult alpha(const Graph& g, const Caps& caps = {}) {
  detail::require_order(g, caps.solver_n, "alpha");
  const detail::BitGraph bg(g);
  return detail::alpha(bg, bg.all());
}

/// Omega(G): all maximum independent sets, sorted lexicographically.
inline IndependentFamily omega_family(const Graph& g, const Caps& caps = {}) {
  detail::require_order(g, caps.enumeration_n, "omega_family");
  const detail::BitGraph bg(g);
  const int a = detail::alpha(bg, bg.all()).alpha;
  IndependentFamily family;
  family.cardinality = a;
  const bool complete = detail::enumerate_maximum(bg, bg.all(), a, caps.crit_count,
                                                  [&](VertexSet s) { family.sets.push_back(s); });
  if (!complete) throw CapacityError("omega_family: more than crit_count maximum independent sets");
  std::sort(family.sets.begin(), family.sets.end());
  return family;
}

inline VertexSet core(const Graph& g, const Caps& caps = {}) { return omega_family(g, caps).intersection(); }
inline VertexSet corona(const Graph& g, const Caps& caps = {}) { return omega_family(g, caps).union_all(); }

/// Vertices v with alpha(G - v) < alpha(G).
inline VertexSet alpha_critical_vertices(const Graph& g, const Caps& caps = {}) {
  detail::require_order(g, caps.solver_n, "alpha_critical_vertices");
  const detail::BitGraph bg(g);
  const int a = detail::alpha(bg, bg.all()).alpha;
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (detail::alpha(bg, bg.all() - VertexSet::single(v)).alpha < a) out.insert(v);
  }
  return out;
}

/// Edges e with alpha(G - e) > alpha(G).
inline EdgeSet alpha_critical_edges(const Graph& g, const Caps& caps = {}) {
  detail::require_order(g, caps.solver_n, "alpha_critical_edges");
  const detail::BitGraph bg(g);
  const int a = detail::alpha(bg, bg.all()).alpha;
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (detail::alpha(bg.without_edge(e), bg.all()).alpha > a) out.push_back(e);
  }
  return EdgeSet(std::move(out));
}

}  // namespace kef
