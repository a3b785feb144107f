#pragma once

#include <optional>
#include <vector>

#include "kef/caps.hpp"
#include "kef/detail/bit_graph.hpp"
#include "kef/graph.hpp"
#include "kef/independence.hpp"
#include "kef/matching.hpp"

namespace kef {

/// König-Egerváry status of a graph.
struct KeClassification {
  int alpha = 0;
  int mu = 0;
  int kappa = 0;  ///< n - alpha - mu
  bool is_ke = false;
  bool is_one_ke = false;
  /// When KE: S is the lexicographically smallest maximum independent set
  /// and the matching pairs every vertex of V - S with a vertex of S.
  std::optional<VertexSet> witness_s;
  std::optional<Matching> witness_matching;
};

/// rho_v / rho_e by literal deletion.
struct RhoReport {
  int rho_v = 0;
  VertexSet rho_v_witnesses;  ///< v such that G - v is KE
  int rho_e = 0;
  EdgeSet rho_e_witnesses;    ///< e such that G - e is KE
};

namespace detail {

/// Lexicographically smallest maximum independent set within `alive`.
inline VertexSet lex_first_maximum(const BitGraph& g, VertexSet alive, int target) {
  VertexSet chosen;
  VertexSet rest = alive;
  for (Vertex v : alive) {
    if (!rest.contains(v)) continue;
    const VertexSet after = rest - (g.nbrs(v) | VertexSet::single(v));
    if (chosen.size() + 1 + alpha(g, after).alpha == target) {
      chosen.insert(v);
      rest = after;
    } else {
      rest.erase(v);
    }
  }
  return chosen;
}

inline bool is_ke(const BitGraph& g, VertexSet alive) {
  return alpha(g, alive).alpha + mu(g, alive) == alive.size();
}

}  // namespace detail

inline KeClassification classify_ke(const Graph& g, const Caps& caps = {}) {
  detail::require_order(g, caps.solver_n, "classify_ke");
  const detail::BitGraph bg(g);
  KeClassification out;
  out.alpha = detail::alpha(bg, bg.all()).alpha;
  out.mu = detail::mu(bg, bg.all());
  out.kappa = g.order() - out.alpha - out.mu;
  out.is_ke = out.kappa == 0;
  out.is_one_ke = out.kappa == 1;
  if (out.is_ke) {
    const VertexSet s = detail::lex_first_maximum(bg, bg.all(), out.alpha);
    if (auto m = matching_from_into(g, g.vertices() - s, s)) {
      out.witness_s = s;
      out.witness_matching = std::move(*m);
    }
  }
  return out;
}

/// alpha(G) + mu(G) == n(G).
inline bool is_koenig_egervary(const Graph& g, const Caps& caps = {}) {
  detail::require_order(g, caps.solver_n, "is_koenig_egervary");
  const detail::BitGraph bg(g);
  return detail::is_ke(bg, bg.all());
}

inline RhoReport rho(const Graph& g, const Caps& caps = {}) {
  detail::require_order(g, caps.solver_n, "rho");
  const detail::BitGraph bg(g);
  RhoReport out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (detail::is_ke(bg, bg.all() - VertexSet::single(v))) out.rho_v_witnesses.insert(v);
  }
  out.rho_v = out.rho_v_witnesses.size();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (detail::is_ke(bg.without_edge(e), bg.all())) edges.push_back(e);
  }
  out.rho_e_witnesses = EdgeSet(std::move(edges));
  out.rho_e = static_cast<int>(out.rho_e_witnesses.size());
  return out;
}

/// Vertices that are neither alpha-critical nor mu-critical. Only defined
/// for 1-KE graphs (kappa = 1); throws DomainError otherwise.
inline VertexSet deletable_by_criticality(const Graph& g, const Caps& caps = {}) {
  const KeClassification ke = classify_ke(g, caps);
  if (!ke.is_one_ke) {
    throw DomainError("deletable_by_criticality requires a 1-KE graph (kappa = " + std::to_string(ke.kappa) +
                      ")");
  }
  return g.vertices() - alpha_critical_vertices(g, caps) - mu_critical_vertices(g);
}

}  // namespace kef
