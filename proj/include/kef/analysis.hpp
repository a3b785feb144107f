#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kef/caps.hpp"
#include "kef/critical.hpp"
#include "kef/detail/bit_graph.hpp"
#include "kef/graph.hpp"
#include "kef/independence.hpp"
#include "kef/ke.hpp"
#include "kef/matching.hpp"
#include "kef/odd_structure.hpp"

namespace kef {

/// alpha and mu of one single-element deletion.
struct DeletionData {
  int alpha = 0;
  int mu = 0;
  bool ke = false;
};

/// Critical-set facts about G - v, expressed against G.
struct VertexDeletionCritical {
  int d = 0;                                ///< d(G - v)
  bool has_critical_not_critical_in_g = false;
  bool has_common_critical = false;         ///< some set is critical in both G and G - v
};

/// Every invariant of one graph, computed once. Fields that could not be
/// computed within the caps are empty, and `skipped` says why.
struct GraphAnalysis {
  std::string graph_id;
  Graph graph;
  Caps caps;
  std::vector<std::string> skipped;

  MuResult mu;
  int double_cover_mu = 0;
  VertexSet mu_critical_vertices;
  EdgeSet mu_critical_edges;

  std::optional<Parity> parity;
  std::optional<AlphaResult> alpha;
  std::optional<KeClassification> ke;
  std::optional<std::vector<DeletionData>> vertex_deletions;  ///< indexed by vertex
  std::optional<std::vector<DeletionData>> edge_deletions;    ///< in graph.edges() order
  std::optional<RhoReport> rho;
  std::optional<VertexSet> alpha_critical_vertices;
  std::optional<EdgeSet> alpha_critical_edges;

  std::optional<IndependentFamily> omega;
  std::optional<CriticalLandscape> landscape;
  std::optional<std::vector<VertexDeletionCritical>> vertex_critical;

  std::optional<PendantDecomposition> pendants;
  std::optional<std::vector<Matching>> maximum_matchings;

  int n() const { return graph.order(); }
  int m() const { return graph.size(); }
  bool complete() const { return skipped.empty(); }

  VertexSet core() const { return omega ? omega->intersection() : VertexSet{}; }
  VertexSet corona() const { return omega ? omega->union_all() : VertexSet{}; }

  bool almost_bipartite() const { return parity && parity->kind == ParityClass::almost_bipartite; }
  bool bipartite() const { return parity && parity->kind == ParityClass::bipartite; }
};

namespace detail {

template <typename F>
void capacity_guard(GraphAnalysis& a, const char* what, F&& f) {
  try {
    f();
  } catch (const CapacityError& e) {
    a.skipped.push_back(std::string(what) + ": " + e.what());
  }
}

}  // namespace detail

inline GraphAnalysis analyze(std::string graph_id, Graph graph, const Caps& caps = {}) {
  GraphAnalysis a;
  a.graph_id = std::move(graph_id);
  a.graph = std::move(graph);
  a.caps = caps;
  const Graph& g = a.graph;
  const detail::BitGraph bg(g);
  const VertexSet all = bg.all();

  a.mu = kef::mu(g);
  a.double_cover_mu = detail::double_cover_mu(bg, all);
  {
    std::vector<Edge> mu_crit_edges;
    for (const Edge& e : g.edges()) {
      if (detail::mu(bg.without_edge(e), all) < a.mu.mu) mu_crit_edges.push_back(e);
    }
    a.mu_critical_edges = EdgeSet(std::move(mu_crit_edges));
  }

  detail::capacity_guard(a, "parity", [&] { a.parity = classify_parity(g, caps); });

  detail::capacity_guard(a, "alpha", [&] {
    a.alpha = alpha(g, caps);
    a.ke = classify_ke(g, caps);

    std::vector<DeletionData> vdel;
    vdel.reserve(static_cast<std::size_t>(g.order()));
    VertexSet alpha_crit;
    VertexSet mu_crit;
    VertexSet rho_v;
    for (Vertex v = 0; v < g.order(); ++v) {
      const VertexSet alive = all - VertexSet::single(v);
      DeletionData d{detail::alpha(bg, alive).alpha, detail::mu(bg, alive), false};
      d.ke = d.alpha + d.mu == g.order() - 1;
      if (d.alpha < a.alpha->alpha) alpha_crit.insert(v);
      if (d.mu < a.mu.mu) mu_crit.insert(v);
      if (d.ke) rho_v.insert(v);
      vdel.push_back(d);
    }
    std::vector<DeletionData> edel;
    edel.reserve(g.edges().size());
    std::vector<Edge> alpha_crit_edges;
    std::vector<Edge> rho_e;
    for (const Edge& e : g.edges()) {
      const detail::BitGraph h = bg.without_edge(e);
      DeletionData d{detail::alpha(h, all).alpha, detail::mu(h, all), false};
      d.ke = d.alpha + d.mu == g.order();
      if (d.alpha > a.alpha->alpha) alpha_crit_edges.push_back(e);
      if (d.ke) rho_e.push_back(e);
      edel.push_back(d);
    }
    a.vertex_deletions = std::move(vdel);
    a.edge_deletions = std::move(edel);
    a.alpha_critical_vertices = alpha_crit;
    a.alpha_critical_edges = EdgeSet(std::move(alpha_crit_edges));
    a.mu_critical_vertices = mu_crit;
    RhoReport r;
    r.rho_v_witnesses = rho_v;
    r.rho_v = rho_v.size();
    r.rho_e_witnesses = EdgeSet(std::move(rho_e));
    r.rho_e = static_cast<int>(r.rho_e_witnesses.size());
    a.rho = std::move(r);
  });
  if (!a.alpha) {
    VertexSet mu_crit;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (detail::mu(bg, all - VertexSet::single(v)) < a.mu.mu) mu_crit.insert(v);
    }
    a.mu_critical_vertices = mu_crit;
  }

  detail::capacity_guard(a, "omega", [&] { a.omega = omega_family(g, caps); });

  detail::capacity_guard(a, "critical", [&] {
    a.landscape = critical_landscape(g, caps);
    std::vector<VertexDeletionCritical> per_vertex;
    per_vertex.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
      const CriticalLandscape sub = detail::critical_landscape(bg, all - VertexSet::single(v), caps.crit_count);
      VertexDeletionCritical c;
      c.d = sub.d;
      for (VertexSet b : sub.critical_sets) {
        if (g.difference(b) == a.landscape->d) {
          c.has_common_critical = true;
        } else {
          c.has_critical_not_critical_in_g = true;
        }
      }
      per_vertex.push_back(c);
    }
    a.vertex_critical = std::move(per_vertex);
  });

  if (a.almost_bipartite()) {
    a.pendants = pendant_decomposition(g, *a.parity->cycle);
    if (a.ke && !a.ke->is_ke) {
      detail::capacity_guard(a, "maximum_matchings", [&] { a.maximum_matchings = all_maximum_matchings(g, caps); });
    }
  }
  return a;
}

}  // namespace kef
