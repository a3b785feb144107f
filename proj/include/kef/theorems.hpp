#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "kef/analysis.hpp"
#include "kef/report.hpp"

namespace kef {

enum class Status { pass, fail, not_applicable, capacity_skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::not_applicable:
      return "not_applicable";
    case Status::capacity_skipped:
      return "capacity_skipped";
  }
  return "?";
}

inline Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "not_applicable") return Status::not_applicable;
  if (s == "capacity_skipped") return Status::capacity_skipped;
  throw InputError("unknown verdict status '" + s + "'");
}

/// Result of evaluating one check on one graph.
struct TheoremVerdict {
  std::string graph_id;
  std::string theorem_id;
  Status status = Status::pass;
  Json detail = Json::object();
};

inline void to_json(Json& j, const TheoremVerdict& v) {
  j = Json{{"graph_id", v.graph_id}, {"theorem_id", v.theorem_id}, {"status", to_string(v.status)}, {"detail", v.detail}};
}

inline void from_json(const Json& j, TheoremVerdict& v) {
  v.graph_id = j.at("graph_id").get<std::string>();
  v.theorem_id = j.at("theorem_id").get<std::string>();
  v.status = status_from_string(j.at("status").get<std::string>());
  v.detail = j.at("detail");
}

/// Status plus payload, before the ids are attached.
struct Outcome {
  Status status = Status::pass;
  Json detail = Json::object();
};

/// One registry entry. Ids are frozen: stores and dashboards key on them.
struct TheoremCheck {
  std::string id;
  std::string statement;
  std::function<Outcome(const GraphAnalysis&)> evaluate;
};

namespace checks {

inline Json set_json(VertexSet s) { return s.members(); }

inline Json edges_json(const EdgeSet& es) {
  Json out = Json::array();
  for (const Edge& e : es) out.push_back({e.u, e.v});
  return out;
}

inline Outcome verdict(bool ok, Json detail) { return {ok ? Status::pass : Status::fail, std::move(detail)}; }

inline Outcome not_applicable(const char* why) { return {Status::not_applicable, Json{{"reason", why}}}; }

inline Outcome skipped(const char* what) { return {Status::capacity_skipped, Json{{"missing", what}}}; }

// Hypothesis gates. Each returns an outcome when the check must stop early.

inline std::optional<Outcome> gate_alpha(const GraphAnalysis& a) {
  if (!a.ke || !a.rho || !a.alpha) return skipped("alpha");
  return std::nullopt;
}

inline std::optional<Outcome> gate_parity(const GraphAnalysis& a) {
  if (!a.parity) return skipped("parity");
  return std::nullopt;
}

inline std::optional<Outcome> gate_enumeration(const GraphAnalysis& a) {
  if (!a.omega) return skipped("omega");
  if (!a.landscape) return skipped("critical");
  return std::nullopt;
}

/// Almost bipartite and not König-Egerváry, with every enumerated quantity present.
inline std::optional<Outcome> gate_ab_non_ke(const GraphAnalysis& a) {
  if (auto g = gate_parity(a)) return *g;
  if (!a.almost_bipartite()) return not_applicable("not almost bipartite");
  if (auto g = gate_alpha(a)) return *g;
  if (a.ke->is_ke) return not_applicable("König-Egerváry");
  return gate_enumeration(a);
}

inline std::optional<Outcome> gate_ke(const GraphAnalysis& a, int kappa) {
  if (auto g = gate_alpha(a)) return *g;
  if (a.ke->kappa != kappa) return not_applicable(kappa == 0 ? "not König-Egerváry" : "not 1-König-Egerváry");
  return gate_enumeration(a);
}

inline VertexSet cycle_set(const GraphAnalysis& a) { return a.parity->cycle->vertex_set(); }

/// Deterministic sample of vertex-set pairs for the double-counting checks.
inline std::vector<std::pair<VertexSet, VertexSet>> sample_pairs(const GraphAnalysis& a) {
  const VertexSet all = a.graph.vertices();
  std::vector<VertexSet> named{VertexSet{}, all};
  if (a.omega) {
    named.push_back(a.core());
    named.push_back(a.corona());
  }
  if (a.landscape) {
    named.push_back(a.landscape->diadem);
    named.push_back(a.landscape->ker);
    named.push_back(a.graph.neighborhood(a.landscape->diadem));
  }
  if (a.parity && a.parity->cycle) named.push_back(cycle_set(a));
  std::vector<std::pair<VertexSet, VertexSet>> out;
  for (VertexSet x : named) {
    for (VertexSet y : named) out.emplace_back(x, y);
  }
  std::uint64_t seed = 1469598103934665603ULL ^ static_cast<std::uint64_t>(a.n());
  for (const Edge& e : a.graph.edges()) {
    seed = (seed ^ static_cast<std::uint64_t>(e.u * 64 + e.v + 1)) * 1099511628211ULL;
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 16; ++i) {
    const VertexSet x(rng() & all.bits());
    const VertexSet y(rng() & all.bits());
    out.emplace_back(x, y);
  }
  return out;
}

inline Outcome sandwich(const GraphAnalysis& a) {
  if (auto g = gate_alpha(a)) return *g;
  if (a.n() == 0) return not_applicable("empty graph");
  const int al = a.alpha->alpha;
  const int mu = a.mu.mu;
  const int n = a.n();
  const bool ok = n / 2 + 1 <= al + mu && al + mu <= n && n <= al + 2 * mu;
  return verdict(ok, {{"n", n}, {"alpha", al}, {"mu", mu}});
}

inline Outcome lem17(const GraphAnalysis& a) {
  const Graph& g = a.graph;
  for (const auto& [x, y] : sample_pairs(a)) {
    int lhs = 0;
    int rhs = 0;
    for (Vertex v : x) lhs += (g.adjacent(v) & y).size();
    for (Vertex v : y) rhs += (g.adjacent(v) & x).size();
    if (lhs != rhs) return verdict(false, {{"A", set_json(x)}, {"B", set_json(y)}, {"lhs", lhs}, {"rhs", rhs}});
  }
  return verdict(true, {{"pairs", sample_pairs(a).size()}});
}

inline Outcome cor11(const GraphAnalysis& a) {
  const Graph& g = a.graph;
  for (const auto& [x, y] : sample_pairs(a)) {
    const bool left = !g.neighborhood(x).intersects(y);
    const bool right = !g.neighborhood(y).intersects(x);
    if (left != right) return verdict(false, {{"A", set_json(x)}, {"B", set_json(y)}});
  }
  return verdict(true, Json::object());
}

inline Outcome lem84(const GraphAnalysis& a) {
  if (auto g = gate_parity(a)) return *g;
  if (!a.almost_bipartite()) return not_applicable("not almost bipartite");
  if (auto g = gate_alpha(a)) return *g;
  const int sum = a.alpha->alpha + a.mu.mu;
  return verdict(a.n() - 1 <= sum && sum <= a.n(), {{"alpha_plus_mu", sum}, {"n", a.n()}});
}

/// Shared body of th43 / th44: corona ∪ N(core) = V, d = alpha - mu = d(core),
/// |core| + |corona| = 2 alpha + extra.
inline Outcome core_corona_identities(const GraphAnalysis& a, int extra) {
  const Graph& g = a.graph;
  const VertexSet core = a.core();
  const VertexSet corona = a.corona();
  const int d = a.landscape->d;
  const int al = a.alpha->alpha;
  const bool cover = (corona | g.neighborhood(core)) == g.vertices();
  const bool diff = d == al - a.mu.mu && d == g.difference(core);
  const bool sum = core.size() + corona.size() == 2 * al + extra;
  return verdict(cover && diff && sum, {{"cover", cover},
                                        {"d", d},
                                        {"alpha_minus_mu", al - a.mu.mu},
                                        {"d_core", g.difference(core)},
                                        {"core_plus_corona", core.size() + corona.size()},
                                        {"expected_sum", 2 * al + extra},
                                        {"core", set_json(core)},
                                        {"corona", set_json(corona)}});
}

inline Outcome th43(const GraphAnalysis& a) {
  if (auto g = gate_ke(a, 0)) return *g;
  return core_corona_identities(a, 0);
}

inline Outcome th44(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  return core_corona_identities(a, 1);
}

inline Outcome cor8(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const int n = a.n();
  const int d = a.landscape->d;
  const int al = a.alpha->alpha;
  const int mu = a.mu.mu;
  const bool ok = n + d == 2 * al + 1 && 2 * al == n + d - 1 && 2 * mu == n - d - 1 && 2 * mu < n;
  return verdict(ok, {{"n", n}, {"d", d}, {"alpha", al}, {"mu", mu}});
}

inline Outcome th2222(const GraphAnalysis& a) {
  if (auto g = gate_parity(a)) return *g;
  if (a.bipartite()) {
    if (auto g = gate_enumeration(a)) return *g;
  } else if (auto g = gate_ab_non_ke(a)) {
    return *g;
  }
  return verdict(a.landscape->ker == a.core(), {{"ker", set_json(a.landscape->ker)}, {"core", set_json(a.core())}});
}

inline Outcome th444(const GraphAnalysis& a) {
  if (auto g = gate_enumeration(a)) return *g;
  const Graph& g = a.graph;
  const CriticalLandscape& L = a.landscape.value();
  if (!L.ker.is_subset_of(a.core())) {
    return verdict(false, {{"part", "i"}, {"ker", set_json(L.ker)}, {"core", set_json(a.core())}});
  }
  constexpr std::size_t kPairLimit = 64;
  const std::size_t count = std::min(L.critical_sets.size(), kPairLimit);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const VertexSet x = L.critical_sets[i];
      const VertexSet y = L.critical_sets[j];
      const bool meet = g.difference(x & y) == L.d;
      const bool join = !g.is_independent(x | y) || g.difference(x | y) == L.d;
      if (!meet || !join) {
        return verdict(false, {{"part", "ii"}, {"A", set_json(x)}, {"B", set_json(y)}, {"d", L.d}});
      }
    }
  }
  if (g.difference(L.diadem) != L.d) {
    return verdict(false, {{"part", "diadem"}, {"diadem", set_json(L.diadem)}, {"d", L.d}});
  }
  const bool minimal = g.is_independent(L.ker) && g.difference(L.ker) == L.d;
  return verdict(minimal, {{"part", "iii"}, {"ker", set_json(L.ker)}, {"pairs_from", count}});
}

inline Outcome th333(const GraphAnalysis& a) {
  if (auto g = gate_enumeration(a)) return *g;
  const Graph& g = a.graph;
  const CriticalLandscape& L = a.landscape.value();
  for (VertexSet s : L.critical_sets) {
    if (!a.omega->contains_superset_of(s)) return verdict(false, {{"part", "i"}, {"A", set_json(s)}});
    if (!L.max_crit_family.contains_superset_of(s)) return verdict(false, {{"part", "ii"}, {"A", set_json(s)}});
    if (!matching_from_into(g, g.neighborhood(s), s)) return verdict(false, {{"part", "iii"}, {"A", set_json(s)}});
  }
  return verdict(true, {{"critical_sets", L.critical_sets.size()}});
}

inline Outcome th100(const GraphAnalysis& a) {
  if (auto g = gate_enumeration(a)) return *g;
  const Graph& g = a.graph;
  const CriticalLandscape& L = a.landscape.value();
  const VertexSet x = g.closed_neighborhood(L.max_crit_family.sets.front());
  for (VertexSet s : L.max_crit_family.sets) {
    if (g.closed_neighborhood(s) != x) {
      return verdict(false, {{"part", "i"}, {"X", set_json(x)}, {"A", set_json(s)}});
    }
  }
  const detail::BitGraph bg(g);
  const bool ke = detail::is_ke(bg, x);
  return verdict(ke, {{"X", set_json(x)}, {"induced_ke", ke}});
}

inline Outcome th11(const GraphAnalysis& a) {
  if (auto g = gate_enumeration(a)) return *g;
  const Graph& g = a.graph;
  for (VertexSet s : a.landscape->critical_sets) {
    const VertexSet ns = g.neighborhood(s);
    if (!matching_from_into(g, ns, s)) continue;
    if (!ns.is_subset_of(a.mu_critical_vertices)) {
      return verdict(false, {{"A", set_json(s)}, {"N_A", set_json(ns)}, {"mu_critical", set_json(a.mu_critical_vertices)}});
    }
  }
  return verdict(true, {{"mu_critical", set_json(a.mu_critical_vertices)}});
}

inline Outcome prop14(const GraphAnalysis& a) {
  if (auto g = gate_enumeration(a)) return *g;
  const CriticalLandscape& L = a.landscape.value();
  const int lhs = a.graph.closed_neighborhood(L.diadem).size();
  const int rhs = L.beta() + L.nucleus.size() - L.d;
  return verdict(lhs == rhs, {{"lhs", lhs}, {"rhs", rhs}});
}

inline Outcome prop13(const GraphAnalysis& a) {
  if (auto g = gate_enumeration(a)) return *g;
  const CriticalLandscape& L = a.landscape.value();
  const int lhs = L.beta() + L.nucleus.size();
  return verdict(lhs <= 2 * L.alpha_prime, {{"lhs", lhs}, {"rhs", 2 * L.alpha_prime}});
}

inline Outcome prop17(const GraphAnalysis& a) {
  if (auto g = gate_enumeration(a)) return *g;
  const Graph& g = a.graph;
  const CriticalLandscape& L = a.landscape.value();
  const VertexSet lhs = g.neighborhood(L.diadem) - L.diadem;
  VertexSet rhs = g.vertices();
  for (VertexSet s : L.max_crit_family.sets) rhs &= g.neighborhood(s);
  return verdict(lhs == rhs, {{"lhs", set_json(lhs)}, {"rhs", set_json(rhs)}});
}

inline Outcome prop11(const GraphAnalysis& a) {
  if (auto g = gate_enumeration(a)) return *g;
  const VertexSet n_diadem = a.graph.neighborhood(a.landscape->diadem);
  return verdict(!a.core().intersects(n_diadem), {{"core", set_json(a.core())}, {"N_diadem", set_json(n_diadem)}});
}

inline Outcome prop15(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const PartitionVerdict p = partition_check(a.graph, *a.parity, *a.ke, *a.landscape);
  return verdict(p.disjoint, {{"V_C", set_json(p.cycle_block)}, {"N_diadem_closed", set_json(p.diadem_block)}});
}

inline Outcome conj1(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const PartitionVerdict p = partition_check(a.graph, *a.parity, *a.ke, *a.landscape);
  return verdict(p.covering, {{"V_C", set_json(p.cycle_block)}, {"N_diadem_closed", set_json(p.diadem_block)}});
}

inline Outcome cor3(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const Graph& g = a.graph;
  const VertexSet lhs = cycle_set(a) | g.closed_neighborhood(a.landscape->diadem);
  const VertexSet rhs = a.corona() | g.neighborhood(a.core());
  return verdict(lhs == rhs, {{"lhs", set_json(lhs)}, {"rhs", set_json(rhs)}});
}

inline Outcome th18(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  if (!a.maximum_matchings) return skipped("maximum_matchings");
  const OddCycle& c = *a.parity->cycle;
  const EdgeSet cycle_edges = c.edges();
  const int half = c.length() / 2;
  for (const Matching& m : *a.maximum_matchings) {
    int on_cycle = 0;
    for (const Edge& e : m.edges()) on_cycle += cycle_edges.contains(e) ? 1 : 0;
    if (on_cycle != half) {
      return verdict(false, {{"part", "cycle_edges"}, {"matching", edges_json(m.edges())}, {"on_cycle", on_cycle}, {"expected", half}});
    }
  }
  // Every maximum matching of G[V(C)] leaves one cycle vertex x exposed; it
  // extends to a maximum matching of G that still leaves x exposed.
  const detail::BitGraph bg(a.graph);
  const int mu_off_cycle = detail::mu(bg, a.graph.vertices() - c.vertex_set());
  bool extends = mu_off_cycle + half == a.mu.mu;
  for (int skip = 0; skip < c.length() && extends; ++skip) {
    std::vector<Edge> cycle_matching;
    for (int k = 1; k + 1 < c.length(); k += 2) {
      cycle_matching.emplace_back(c.vertices[(skip + k) % c.length()], c.vertices[(skip + k + 1) % c.length()]);
    }
    const EdgeSet want(cycle_matching);
    const Vertex exposed = c.vertices[skip];
    extends = std::any_of(a.maximum_matchings->begin(), a.maximum_matchings->end(), [&](const Matching& m) {
      if (m.saturates(exposed)) return false;
      return std::all_of(want.begin(), want.end(), [&](const Edge& e) { return m.edges().contains(e); });
    });
  }
  return verdict(extends, {{"part", "extension"},
                           {"mu", a.mu.mu},
                           {"mu_without_cycle", mu_off_cycle},
                           {"half_cycle", half},
                           {"maximum_matchings", a.maximum_matchings->size()}});
}

inline Outcome th18_structure(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  if (!a.maximum_matchings) return skipped("maximum_matchings");
  const Graph& g = a.graph;
  const detail::BitGraph bg(g);
  const OddCycle& c = *a.parity->cycle;
  const VertexSet cycle = c.vertex_set();
  const EdgeSet cycle_edges = c.edges();
  const VertexSet x_block = g.closed_neighborhood(a.landscape->diadem);
  const VertexSet n_diadem = g.neighborhood(a.landscape->diadem);
  const int mu_block = detail::mu(bg, x_block);
  int exposed_case = 0;
  int matched_case = 0;
  for (const Matching& m : *a.maximum_matchings) {
    std::vector<Edge> rest;
    VertexSet covered_on_cycle;
    for (const Edge& e : m.edges()) {
      if (cycle_edges.contains(e)) {
        covered_on_cycle |= e.ends();
      } else {
        rest.push_back(e);
      }
    }
    const VertexSet left = cycle - covered_on_cycle;
    auto fail = [&](const char* why) {
      return verdict(false, {{"reason", why}, {"matching", edges_json(m.edges())}, {"N_diadem_closed", set_json(x_block)}});
    };
    if (left.size() != 1) return fail("cycle edges do not leave exactly one cycle vertex");
    const Vertex x = left.front();
    const Vertex y = m.mate(x);
    VertexSet block = x_block;
    if (y != -1) {
      if (!n_diadem.contains(y)) return fail("partner of the exposed cycle vertex is outside N(diadem)");
      block.erase(y);
      rest.erase(std::find(rest.begin(), rest.end(), Edge(x, y)));
    }
    const bool inside = std::all_of(rest.begin(), rest.end(), [&](const Edge& e) { return block.contains(e.u) && block.contains(e.v); });
    const int target = y == -1 ? mu_block : detail::mu(bg, block);
    if (!inside || static_cast<int>(rest.size()) != target) return fail("remainder is not a maximum matching of the block");
    (y == -1 ? exposed_case : matched_case) += 1;
  }
  return verdict(true, {{"exposed_case", exposed_case}, {"matched_case", matched_case}});
}

inline Outcome th5(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const CriticalLandscape& L = a.landscape.value();
  const int xi = a.core().size();
  const int rho = a.rho->rho_v;
  const int first = a.n() + L.d - xi - L.beta();
  const int second = 2 * a.alpha->alpha + 1 - xi - L.beta();
  return verdict(rho == first && rho == second, {{"rho_v", rho}, {"n_plus_d_minus_xi_beta", first}, {"two_alpha_form", second}});
}

inline Outcome cor2(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const int rhs = cycle_set(a).size() + a.landscape->nucleus.size() - a.core().size();
  return verdict(a.rho->rho_v == rhs, {{"lhs", a.rho->rho_v}, {"rhs", rhs}});
}

inline Outcome cor5(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const int left = cycle_set(a).size() + a.landscape->nucleus.size() + a.landscape->diadem.size();
  const int mid = 2 * a.alpha->alpha + 1;
  const int right = a.core().size() + a.corona().size();
  return verdict(left == mid && mid == right, {{"cycle_nucleus_diadem", left}, {"two_alpha_plus_one", mid}, {"core_plus_corona", right}});
}

inline Outcome cor7(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const int rhs = a.corona().size() - a.landscape->diadem.size();
  return verdict(a.rho->rho_v == rhs, {{"lhs", a.rho->rho_v}, {"rhs", rhs}});
}

inline Outcome cor10(const GraphAnalysis& a) {
  if (auto g = gate_parity(a)) return *g;
  if (!a.almost_bipartite()) return not_applicable("not almost bipartite");
  if (auto g = gate_enumeration(a)) return *g;
  const int lhs = a.core().size() + a.corona().size();
  const int rhs = a.n() + a.landscape->d;
  return verdict(lhs == rhs, {{"lhs", lhs}, {"rhs", rhs}});
}

inline Outcome alpha_prime_bound(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const int low = cycle_set(a).size();
  const int high = 2 * a.alpha->alpha - a.core().size() - a.landscape->alpha_prime + 1;
  const int rho = a.rho->rho_v;
  return verdict(low <= rho && rho <= high, {{"lower", low}, {"rho_v", rho}, {"upper", high}});
}

inline Outcome prop18(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const int len = a.parity->cycle->length();
  const bool is_cycle = a.n() == len && a.m() == len;
  const bool full = a.rho->rho_v == a.n();
  return verdict(full == is_cycle, {{"rho_v", a.rho->rho_v}, {"n", a.n()}, {"is_odd_cycle", is_cycle}});
}

inline int cycle_degree_excess(const GraphAnalysis& a) {
  int sum = 0;
  for (Vertex v : a.parity->cycle->vertices) sum += a.graph.degree(v);
  return sum - a.parity->cycle->length();
}

inline Outcome degree_bound(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const Graph& g = a.graph;
  const VertexSet shared = g.neighborhood(cycle_set(a)) & g.neighborhood(a.core());
  const int rhs = cycle_degree_excess(a) - shared.size();
  return verdict(a.rho->rho_v >= rhs, {{"lhs", a.rho->rho_v}, {"rhs", rhs}, {"shared", set_json(shared)}});
}

inline Outcome cor13(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const Graph& g = a.graph;
  if (g.neighborhood(cycle_set(a)).intersects(g.neighborhood(a.core()))) {
    return not_applicable("N(V(C)) meets N(core)");
  }
  const int rhs = cycle_degree_excess(a);
  return verdict(a.rho->rho_v >= rhs, {{"lhs", a.rho->rho_v}, {"rhs", rhs}});
}

inline Outcome cor_nucleus(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const bool tight = a.rho->rho_v == cycle_set(a).size();
  const bool equal = a.core() == a.landscape->nucleus;
  return verdict(tight == equal, {{"rho_v", a.rho->rho_v}, {"cycle_length", cycle_set(a).size()}, {"core", set_json(a.core())}, {"nucleus", set_json(a.landscape->nucleus)}});
}

inline Outcome th9(const GraphAnalysis& a) {
  if (auto g = gate_ke(a, 0)) return *g;
  const int xi = a.core().size();
  const int eps = a.landscape->epsilon();
  const bool vertex_formula = a.rho->rho_v == a.n() - xi + eps;
  const bool edge_bound = a.rho->rho_e <= a.m() - xi + eps;
  return verdict(vertex_formula && edge_bound, {{"vertex_formula", vertex_formula},
                                                {"edge_bound", edge_bound},
                                                {"rho_v", a.rho->rho_v}, {"n_minus_xi_plus_eps", a.n() - xi + eps}, {"rho_e", a.rho->rho_e}, {"m_minus_xi_plus_eps", a.m() - xi + eps}});
}

inline Outcome th10(const GraphAnalysis& a) {
  if (auto g = gate_ke(a, 1)) return *g;
  const int rhs = a.n() + a.landscape->d - a.core().size() - a.landscape->beta();
  return verdict(a.rho->rho_v <= rhs, {{"lhs", a.rho->rho_v}, {"rhs", rhs}});
}

inline Outcome lem11(const GraphAnalysis& a) {
  if (auto g = gate_ke(a, 1)) return *g;
  const bool full = a.rho->rho_v == a.n();
  const bool cond = 2 * a.mu.mu < a.n() && a.core().empty() && a.landscape->diadem.empty();
  return verdict(full == cond, {{"rho_v", a.rho->rho_v}, {"n", a.n()}, {"mu", a.mu.mu}, {"xi", a.core().size()}, {"beta", a.landscape->beta()}});
}

inline Outcome th17(const GraphAnalysis& a) {
  if (auto g = gate_alpha(a)) return *g;
  if (!a.ke->is_one_ke) return not_applicable("not 1-König-Egerváry");
  const VertexSet deletable = a.graph.vertices() - *a.alpha_critical_vertices - a.mu_critical_vertices;
  return verdict(deletable == a.rho->rho_v_witnesses, {{"deletable", set_json(deletable)}, {"rho_v_witnesses", set_json(a.rho->rho_v_witnesses)}});
}

inline Outcome prop_d1(const GraphAnalysis& a) {
  if (auto g = gate_enumeration(a)) return *g;
  for (Vertex v = 0; v < a.n(); ++v) {
    const VertexDeletionCritical& c = (*a.vertex_critical)[v];
    if (c.has_critical_not_critical_in_g && a.landscape->d < c.d) {
      return verdict(false, {{"v", v}, {"d_G", a.landscape->d}, {"d_G_minus_v", c.d}});
    }
  }
  return verdict(true, Json::object());
}

inline Outcome prop_d2(const GraphAnalysis& a) {
  if (auto g = gate_enumeration(a)) return *g;
  for (Vertex v : a.landscape->nucleus) {
    const VertexDeletionCritical& c = (*a.vertex_critical)[v];
    if (c.has_common_critical && a.landscape->d != c.d) {
      return verdict(false, {{"v", v}, {"d_G", a.landscape->d}, {"d_G_minus_v", c.d}});
    }
  }
  return verdict(true, Json::object());
}

inline Outcome lem8(const GraphAnalysis& a) {
  if (auto g = gate_enumeration(a)) return *g;
  const VertexSet n_diadem = a.graph.neighborhood(a.landscape->diadem);
  for (Vertex v : a.graph.vertices() - n_diadem) {
    const int dv = (*a.vertex_critical)[v].d;
    if (a.landscape->d < dv) return verdict(false, {{"v", v}, {"d_G", a.landscape->d}, {"d_G_minus_v", dv}});
  }
  return verdict(true, {{"N_diadem", set_json(n_diadem)}});
}

inline Outcome lem7(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const bool avoids = !a.landscape->diadem.intersects(cycle_set(a));
  const bool core_critical = a.graph.difference(a.core()) == a.landscape->d;
  return verdict(avoids && core_critical, {{"diadem", set_json(a.landscape->diadem)}, {"V_C", set_json(cycle_set(a))}, {"d_core", a.graph.difference(a.core())}, {"d", a.landscape->d}});
}

inline Outcome lem10(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  if (!a.pendants) return skipped("pendants");
  const Graph& g = a.graph;
  const auto& comps = a.pendants->components;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      const VertexSet left = g.closed_neighborhood(comps[i].vertices - VertexSet::single(comps[i].root));
      const VertexSet right = g.closed_neighborhood(comps[j].vertices - VertexSet::single(comps[j].root));
      if (left.intersects(right)) {
        return verdict(false, {{"x", comps[i].root}, {"y", comps[j].root}, {"left", set_json(left)}, {"right", set_json(right)}});
      }
    }
  }
  return verdict(true, Json::object());
}

inline Outcome lem13(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const Graph& g = a.graph;
  const VertexSet cycle = cycle_set(a);
  for (Vertex x : cycle) {
    for (Vertex y : cycle - VertexSet::range(x + 1)) {
      const VertexSet common = (g.adjacent(x) & g.adjacent(y)) - cycle;
      if (!common.empty()) return verdict(false, {{"part", "common_neighbor"}, {"x", x}, {"y", y}, {"common", set_json(common)}});
    }
  }
  const VertexSet outer = g.neighborhood(cycle) - cycle;
  const VertexSet n_diadem = g.neighborhood(a.landscape->diadem) - a.landscape->diadem;
  const int lhs = cycle_degree_excess(a) - cycle.size();
  const int rhs = n_diadem.size();
  return verdict(outer.is_subset_of(n_diadem) && lhs <= rhs,
                 {{"lhs", lhs}, {"rhs", rhs}, {"outer_neighbors", set_json(outer)}, {"N_diadem_minus_diadem", set_json(n_diadem)}});
}

inline Outcome prop10(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const VertexSet closed = a.graph.closed_neighborhood(cycle_set(a));
  return verdict(!a.core().intersects(closed), {{"core", set_json(a.core())}, {"N_VC_closed", set_json(closed)}});
}

inline Outcome cor_corona(const GraphAnalysis& a) {
  if (auto g = gate_ab_non_ke(a)) return *g;
  const VertexSet cycle = cycle_set(a);
  const int bound = 2 * a.alpha->alpha + 1 - a.core().size();
  return verdict(cycle.is_subset_of(a.corona()) && cycle.size() <= bound,
                 {{"V_C", set_json(cycle)}, {"corona", set_json(a.corona())}, {"bound", bound}});
}

inline Outcome th715(const GraphAnalysis& a) {
  if (auto g = gate_alpha(a)) return *g;
  const Graph& g = a.graph;
  const KeClassification& ke = *a.ke;
  if (ke.is_ke) {
    if (!ke.witness_s || !ke.witness_matching) return verdict(false, {{"reason", "KE graph without S*A witness"}});
    const VertexSet s = *ke.witness_s;
    const VertexSet rest = g.vertices() - s;
    const Matching& m = *ke.witness_matching;
    bool ok = g.is_independent(s) && s.size() >= rest.size() && m.size() == rest.size() && m.is_valid_in(g);
    for (const Edge& e : m.edges()) ok = ok && ((s.contains(e.u) && rest.contains(e.v)) || (s.contains(e.v) && rest.contains(e.u)));
    return verdict(ok, {{"S", set_json(s)}, {"matching", edges_json(m.edges())}});
  }
  const detail::BitGraph bg(g);
  const VertexSet s = detail::lex_first_maximum(bg, bg.all(), ke.alpha);
  const bool none = !matching_from_into(g, g.vertices() - s, s).has_value();
  return verdict(none, {{"S", set_json(s)}, {"kappa", ke.kappa}});
}

inline Outcome dcover(const GraphAnalysis& a) {
  if (!a.landscape) return skipped("critical");
  const int rhs = a.n() - a.double_cover_mu;
  return verdict(a.landscape->d == rhs, {{"d", a.landscape->d}, {"n_minus_cover_mu", rhs}});
}

inline Outcome alpha_core(const GraphAnalysis& a) {
  if (auto g = gate_alpha(a)) return *g;
  if (!a.omega) return skipped("omega");
  return verdict(*a.alpha_critical_vertices == a.core(), {{"alpha_critical", set_json(*a.alpha_critical_vertices)}, {"core", set_json(a.core())}});
}

}  // namespace checks

/// All checks, sorted by id.
inline const std::vector<TheoremCheck>& default_registry() {
  static const std::vector<TheoremCheck> registry = [] {
    std::vector<TheoremCheck> r{
        {"alpha-core", "alpha-critical vertices are exactly core(G)", checks::alpha_core},
        {"alpha-prime-bound", "|V(C)| <= rho_v <= 2alpha - xi - alpha' + 1 (almost bipartite, non-KE)", checks::alpha_prime_bound},
        {"conj1", "V(C) ∪ N[diadem] = V (almost bipartite, non-KE)", checks::conj1},
        {"cor-corona", "V(C) ⊆ corona and |V(C)| <= 2alpha + 1 - xi (almost bipartite, non-KE)", checks::cor_corona},
        {"cor-nucleus", "rho_v = |V(C)| iff core = nucleus (almost bipartite, non-KE)", checks::cor_nucleus},
        {"cor10", "|core| + |corona| = n + d (almost bipartite)", checks::cor10},
        {"cor11", "N(A) ∩ B empty iff N(B) ∩ A empty", checks::cor11},
        {"cor13", "rho_v >= sum deg(C) - |V(C)| when N(V(C)) ∩ N(core) is empty", checks::cor13},
        {"cor2", "rho_v = |V(C)| + |nucleus| - |core| (almost bipartite, non-KE)", checks::cor2},
        {"cor3", "V(C) ∪ N[diadem] = corona ∪ N(core) (almost bipartite, non-KE)", checks::cor3},
        {"cor5", "|V(C)| + |nucleus| + |diadem| = 2alpha + 1 = |core| + |corona|", checks::cor5},
        {"cor7", "rho_v = |corona| - |diadem| (almost bipartite, non-KE)", checks::cor7},
        {"cor8", "n + d = 2alpha + 1, 2mu = n - d - 1 < n (almost bipartite, non-KE)", checks::cor8},
        {"dcover", "d(G) = n - mu(bipartite double cover)", checks::dcover},
        {"degree-bound", "rho_v >= sum deg(C) - |V(C)| - |N(V(C)) ∩ N(core)|", checks::degree_bound},
        {"lem10", "closed neighborhoods of distinct pendant remainders D_y - y are disjoint", checks::lem10},
        {"lem11", "1-KE: rho_v = n iff 2mu < n, xi = 0, beta = 0", checks::lem11},
        {"lem13", "cycle vertices share no outside neighbor; sum(deg - 2) <= |N(diadem) - diadem|", checks::lem13},
        {"lem17", "double counting of edges between A and B", checks::lem17},
        {"lem7", "critical sets avoid V(C); core is critical (almost bipartite, non-KE)", checks::lem7},
        {"lem8", "v outside N(diadem) implies d(G) >= d(G - v)", checks::lem8},
        {"lem84", "almost bipartite: n - 1 <= alpha + mu <= n", checks::lem84},
        {"prop-d1", "a critical set of G - v not critical in G implies d(G) >= d(G - v)", checks::prop_d1},
        {"prop-d2", "v in nucleus with a common critical set implies d(G) = d(G - v)", checks::prop_d2},
        {"prop10", "core ∩ N[V(C)] is empty (almost bipartite, non-KE)", checks::prop10},
        {"prop11", "core ∩ N(diadem) is empty", checks::prop11},
        {"prop13", "|diadem| + |nucleus| <= 2alpha'", checks::prop13},
        {"prop14", "|N[diadem]| = beta + |nucleus| - d", checks::prop14},
        {"prop15", "V(C) ∩ N[diadem] is empty (almost bipartite, non-KE)", checks::prop15},
        {"prop17", "N(diadem) - diadem = intersection of N(A) over MaxCritIndep", checks::prop17},
        {"prop18", "rho_v = n iff G is an odd cycle (almost bipartite, non-KE)", checks::prop18},
        {"sandwich", "floor(n/2) + 1 <= alpha + mu <= n <= alpha + 2mu", checks::sandwich},
        {"th10", "1-KE: rho_v <= n + d - xi - beta", checks::th10},
        {"th100", "N[A] is one set X for all A in MaxCritIndep, and G[X] is KE", checks::th100},
        {"th11", "N(A) is mu-critical for critical A with a matching from N(A) into A", checks::th11},
        {"th17", "1-KE: G - v is KE iff v is neither alpha- nor mu-critical", checks::th17},
        {"th18", "maximum matchings use floor(|V(C)|/2) cycle edges; cycle matchings extend", checks::th18},
        {"th18-structure", "off-cycle part of a maximum matching is a maximum matching of N[diadem] (or N[diadem] - y)", checks::th18_structure},
        {"th2222", "ker = core for bipartite and almost bipartite non-KE graphs", checks::th2222},
        {"th333", "critical sets extend into Omega and MaxCritIndep; N(A) matches into A", checks::th333},
        {"th43", "KE: corona ∪ N(core) = V, d = alpha - mu = d(core), |core| + |corona| = 2alpha", checks::th43},
        {"th44", "almost bipartite non-KE: corona ∪ N(core) = V, d = alpha - mu, |core| + |corona| = 2alpha + 1", checks::th44},
        {"th444", "ker ⊆ core; critical sets closed under meet (and independent join); diadem critical", checks::th444},
        {"th5", "rho_v = n + d - xi - beta = 2alpha + 1 - xi - beta (almost bipartite, non-KE)", checks::th5},
        {"th715", "KE iff an S*A witness with a matching of size |A| exists", checks::th715},
        {"th9", "KE: rho_v = n - xi + epsilon and rho_e <= m - xi + epsilon", checks::th9},
    };
    std::sort(r.begin(), r.end(), [](const TheoremCheck& x, const TheoremCheck& y) { return x.id < y.id; });
    return r;
  }();
  return registry;
}

inline std::vector<std::string> all_theorem_ids(const std::vector<TheoremCheck>& registry = default_registry()) {
  std::vector<std::string> ids;
  for (const TheoremCheck& c : registry) ids.push_back(c.id);
  return ids;
}

/// True when `selection` ("all", empty, or explicit ids) includes `id`.
/// Throws InputError if the selection names an id the registry lacks.
inline bool selects(const std::vector<std::string>& selection, const std::string& id,
                    const std::vector<TheoremCheck>& registry = default_registry()) {
  bool everything = selection.empty();
  bool named = false;
  for (const std::string& s : selection) {
    if (s == "all") {
      everything = true;
      continue;
    }
    if (std::none_of(registry.begin(), registry.end(), [&](const TheoremCheck& c) { return c.id == s; })) {
      throw InputError("unknown theorem id '" + s + "'");
    }
    named = named || s == id;
  }
  return everything || named;
}

/// Evaluates the selected checks ("all" selects everything). Verdicts come
/// back sorted by theorem id. Unknown ids are an InputError.
inline std::vector<TheoremVerdict> run_suite(const GraphAnalysis& a, const std::vector<std::string>& selection,
                                             const std::vector<TheoremCheck>& registry = default_registry()) {
  std::vector<TheoremVerdict> out;
  for (const TheoremCheck& c : registry) {
    if (!selects(selection, c.id, registry)) continue;
    Outcome o = c.evaluate(a);
    out.push_back({a.graph_id, c.id, o.status, std::move(o.detail)});
  }
  std::sort(out.begin(), out.end(), [](const TheoremVerdict& x, const TheoremVerdict& y) { return x.theorem_id < y.theorem_id; });
  return out;
}

}  // namespace kef
