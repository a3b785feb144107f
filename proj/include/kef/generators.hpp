#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kef/analysis.hpp"
#include "kef/caps.hpp"
#include "kef/errors.hpp"
#include "kef/graph.hpp"
#include "kef/odd_structure.hpp"

namespace kef {

struct NamedGraph {
  std::string id;
  Graph graph;
};

/// Pull-based, single-producer graph source. `next()` returns nullopt once
/// the stream is exhausted.
class GraphStream {
 public:
  using Source = std::function<std::optional<NamedGraph>()>;

  explicit GraphStream(Source source) : source_(std::move(source)) {}

  std::optional<NamedGraph> next() { return source_(); }

  std::vector<NamedGraph> collect() {
    std::vector<NamedGraph> out;
    while (auto g = next()) out.push_back(std::move(*g));
    return out;
  }

 private:
  Source source_;
};

enum class GenKind { odd_cycle, cycle_plus_trees, almost_bipartite_random, random_gnp, exhaustive, fixture };

inline const char* to_string(GenKind k) {
  switch (k) {
    case GenKind::odd_cycle:
      return "odd_cycle";
    case GenKind::cycle_plus_trees:
      return "cycle_plus_trees";
    case GenKind::almost_bipartite_random:
      return "almost_bipartite_random";
    case GenKind::random_gnp:
      return "random_gnp";
    case GenKind::exhaustive:
      return "exhaustive";
    case GenKind::fixture:
      return "fixture";
  }
  return "?";
}

inline GenKind gen_kind_from_string(const std::string& s) {
  for (GenKind k : {GenKind::odd_cycle, GenKind::cycle_plus_trees, GenKind::almost_bipartite_random, GenKind::random_gnp,
                    GenKind::exhaustive, GenKind::fixture}) {
    if (s == to_string(k)) return k;
  }
  throw InputError("unknown generator kind '" + s + "'");
}

/// Generator parameters. Written as "kind:key=value,..." on the command
/// line, e.g. "cycle_plus_trees:k=2,n=12,seed=7,count=50".
struct GenSpec {
  GenKind kind = GenKind::odd_cycle;
  int k = 1;
  int n = 0;
  double edge_probability = 0.3;
  std::uint64_t seed = 1;
  int count = 1;
  bool connected_only = false;
  std::string fixture_name;
};

namespace detail {

inline long long parse_integer(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long out = 0;
  try {
    out = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty()) throw InputError("generator parameter " + key + " must be an integer");
  return out;
}

}  // namespace detail

inline GenSpec parse_gen_spec(const std::string& text) {
  GenSpec spec;
  const std::size_t colon = text.find(':');
  spec.kind = gen_kind_from_string(text.substr(0, colon));
  if (spec.kind == GenKind::exhaustive) spec.connected_only = true;
  const std::string params = colon == std::string::npos ? "" : text.substr(colon + 1);
  std::istringstream in(params);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      if (spec.kind == GenKind::fixture && spec.fixture_name.empty()) {
        spec.fixture_name = item;
        continue;
      }
      throw InputError("generator parameter '" + item + "' is not key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "k") {
      spec.k = static_cast<int>(detail::parse_integer(key, value));
    } else if (key == "n") {
      spec.n = static_cast<int>(detail::parse_integer(key, value));
    } else if (key == "p") {
      try {
        std::size_t used = 0;
        spec.edge_probability = std::stod(value, &used);
        if (used != value.size()) throw InputError("");
      } catch (const std::exception&) {
        throw InputError("generator parameter p must be a number");
      }
    } else if (key == "seed") {
      const long long s = detail::parse_integer(key, value);
      if (s < 0) throw InputError("seed must be non-negative");
      spec.seed = static_cast<std::uint64_t>(s);
    } else if (key == "count") {
      spec.count = static_cast<int>(detail::parse_integer(key, value));
    } else if (key == "connected") {
      spec.connected_only = detail::parse_integer(key, value) != 0;
    } else if (key == "name") {
      spec.fixture_name = value;
    } else {
      throw InputError("unknown generator parameter '" + key + "'");
    }
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Fixtures

/// A figure graph, reconstructed from drawing coordinates. Vertex ids follow
/// the order of `coords`. `claims` are the values the source states for the
/// drawing; fixture_mismatches() recomputes them.
struct Fixture {
  using Point = std::pair<int, int>;

  std::string name;
  std::vector<Point> coords;
  std::vector<std::pair<Point, Point>> edges;
  std::vector<std::pair<std::string, Point>> labels;
  std::vector<std::pair<std::string, nlohmann::json>> claims;

  Vertex id_of(const Point& p) const {
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] == p) return static_cast<Vertex>(i);
    }
    throw InputError("fixture " + name + " has no vertex at (" + std::to_string(p.first) + "," + std::to_string(p.second) + ")");
  }

  /// Resolves a label ("a") or a coordinate ("7,1") to a vertex id.
  Vertex vertex(const std::string& label) const {
    for (const auto& [l, p] : labels) {
      if (l == label) return id_of(p);
    }
    const std::size_t comma = label.find(',');
    if (comma == std::string::npos) throw InputError("fixture " + name + " has no label '" + label + "'");
    return id_of({std::stoi(label.substr(0, comma)), std::stoi(label.substr(comma + 1))});
  }

  VertexSet vertex_set(const std::vector<std::string>& members) const {
    VertexSet out;
    for (const std::string& m : members) out.insert(vertex(m));
    return out;
  }

  Graph graph() const {
    std::vector<Edge> es;
    for (const auto& [p, q] : edges) es.emplace_back(id_of(p), id_of(q));
    return Graph(static_cast<int>(coords.size()), es);
  }
};

namespace detail {

using P = Fixture::Point;

inline std::vector<P> row(int y, int from, int to) {
  std::vector<P> out;
  for (int x = from; x <= to; ++x) out.emplace_back(x, y);
  return out;
}

inline std::vector<std::pair<P, P>> row_path(int y, int from, int to) {
  std::vector<std::pair<P, P>> out;
  for (int x = from; x < to; ++x) out.push_back({{x, y}, {x + 1, y}});
  return out;
}

template <typename T>
std::vector<T> concat(std::vector<T> a, const std::vector<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline std::vector<Fixture> build_fixtures() {
  using nlohmann::json;
  std::vector<Fixture> f;

  f.push_back({"fig123-G1",
               {{2, 0}, {3, 0}, {4, 0}, {5, 0}, {4, 1}, {5, 1}, {2, 1}},
               concat(row_path(0, 2, 5), {{{2, 0}, {2, 1}}, {{2, 1}, {3, 0}}, {{4, 0}, {4, 1}}, {{4, 1}, {5, 1}}, {{5, 0}, {5, 1}}}),
               {},
               {{"parity_class", "almost_bipartite"}, {"kappa", 1}}});

  f.push_back({"fig123-G2",
               concat(row(0, 8, 12), {{11, 1}, {12, 1}, {8, 1}}),
               concat(row_path(0, 8, 12), {{{8, 0}, {8, 1}}, {{8, 1}, {9, 0}}, {{11, 1}, {12, 1}}, {{10, 0}, {11, 1}}, {{12, 0}, {12, 1}}}),
               {},
               {{"parity_class", "multi_odd"}, {"kappa", 1}}});

  f.push_back({"fig121212-G1",
               concat(row(0, 3, 6), row(1, 3, 6)),
               concat(row_path(0, 3, 6), {{{3, 0}, {3, 1}}, {{3, 1}, {4, 1}}, {{4, 1}, {5, 0}}, {{5, 1}, {6, 0}}, {{6, 0}, {6, 1}}}),
               {{"a", {5, 1}}, {"b", {6, 1}}, {"c", {6, 0}}},
               {{"rho_v", 5}, {"core", json::array({"a", "b"})}, {"non_deletable", json::array({"a", "b", "c"})}}});

  f.push_back({"fig121212-G2",
               concat(row(0, 8, 11), row(1, 9, 11)),
               concat(row_path(0, 8, 11), {{{8, 0}, {9, 1}}, {{9, 1}, {10, 1}}, {{10, 0}, {10, 1}}, {{11, 0}, {11, 1}}}),
               {{"x", {11, 0}}},
               {{"rho_v", 6}, {"non_deletable", json::array({"x"})}, {"mu_critical_includes", json::array({"x"})}}});

  f.push_back({"fig44",
               concat(row(0, 2, 8), {{3, 1}, {4, 1}, {5, 1}, {7, 1}, {8, 1}}),
               concat(row_path(0, 2, 8), {{{3, 1}, {4, 0}},
                                          {{4, 0}, {4, 1}},
                                          {{5, 1}, {6, 0}},
                                          {{5, 0}, {5, 1}},
                                          {{7, 0}, {7, 1}},
                                          {{7, 1}, {8, 1}},
                                          {{8, 0}, {8, 1}}}),
               {{"y", {6, 0}}},
               {{"parity_class", "almost_bipartite"}, {"pendant:y", json::array({"y", "7,0", "7,1", "8,0", "8,1"})}}});

  f.push_back({"fig34-G1",
               concat(row(0, 2, 6), row(1, 2, 5)),
               concat(row_path(0, 2, 6),
                      {{{2, 0}, {2, 1}}, {{2, 1}, {3, 0}}, {{3, 1}, {4, 1}}, {{4, 1}, {5, 1}}, {{3, 1}, {4, 0}}, {{4, 0}, {5, 1}}}),
               {{"a", {3, 1}}, {"b", {4, 1}}, {"c", {5, 1}}, {"x", {4, 0}}, {"y", {5, 0}}, {"z", {6, 0}}},
               {{"diadem", json::array({"a", "c", "y", "z"})},
                {"N_diadem", json::array({"b", "x", "y", "z"})},
                {"lem13_lhs", 1},
                {"lem13_rhs", 2}}});

  f.push_back({"fig34-G2",
               concat(row(0, 8, 11), row(1, 8, 11)),
               concat(row_path(0, 8, 11), {{{8, 0}, {8, 1}}, {{8, 1}, {9, 0}}, {{9, 1}, {10, 0}}, {{10, 0}, {10, 1}}, {{11, 0}, {11, 1}}}),
               {{"u", {9, 1}}, {"v", {10, 1}}, {"w", {11, 1}}, {"s", {10, 0}}, {"t", {11, 0}}},
               {{"diadem", json::array({"u", "v", "w", "t"})},
                {"N_diadem", json::array({"s", "t", "w"})},
                {"lem13_lhs", 1},
                {"lem13_rhs", 1}}});

  f.push_back({"fig1-G1",
               {{3, 0}, {4, 0}, {5, 0}, {3, 1}, {4, 1}, {5, 1}, {4, 2}, {5, 2}},
               {{{3, 0}, {4, 0}}, {{4, 0}, {5, 0}}, {{3, 0}, {3, 1}}, {{3, 0}, {4, 1}}, {{3, 0}, {4, 2}},
                {{3, 1}, {4, 2}}, {{3, 1}, {4, 0}}, {{3, 1}, {4, 1}}, {{4, 0}, {5, 1}}, {{4, 0}, {5, 2}},
                {{4, 1}, {5, 2}}, {{4, 1}, {5, 0}}, {{4, 1}, {5, 1}}, {{4, 2}, {5, 2}}, {{4, 2}, {5, 1}},
                {{4, 2}, {5, 0}}, {{5, 0}, {5, 1}}, {{5, 1}, {5, 2}}, {{5, 0}, {5, 2}}},
               {},
               {{"kappa", 1}}});

  f.push_back({"fig1-G2",
               concat(row(0, 8, 12), row(1, 9, 11)),
               concat(row_path(0, 8, 12), {{{8, 0}, {9, 1}}, {{9, 1}, {10, 1}}, {{10, 0}, {10, 1}}, {{11, 0}, {11, 1}}}),
               {{"x", {11, 0}}, {"y", {12, 0}}, {"z", {11, 1}}},
               {{"d", 1}, {"d_minus:y", 0}, {"d_minus:x", 2}, {"diadem", json::array({"y", "z"})}}});

  f.push_back({"fig2-G1",
               {{3, 0}, {4, 0}, {5, 0}, {4, 1}, {5, 1}},
               {{{3, 0}, {4, 0}}, {{4, 0}, {5, 0}}, {{3, 0}, {4, 1}}, {{4, 0}, {4, 1}}, {{5, 0}, {5, 1}}},
               {{"x", {5, 1}}},
               {{"rho_v", 4},
                {"nucleus", json::array({"x"})},
                {"core", json::array()},
                {"cycle_size", 3},
                {"closed_diadem_size", 2}}});

  f.push_back({"fig2-G2",
               concat(row(0, 8, 11), row(1, 9, 10)),
               concat(row_path(0, 8, 11), {{{8, 0}, {9, 1}}, {{9, 0}, {9, 1}}, {{10, 0}, {10, 1}}}),
               {{"u", {10, 1}}, {"v", {11, 0}}},
               {{"rho_v", 3}, {"core", json::array({"u", "v"})}, {"nucleus", json::array({"u", "v"})}}});

  f.push_back({"fig11222",
               concat(row(0, 5, 9), row(1, 5, 9)),
               concat(row_path(0, 5, 9), {{{5, 0}, {5, 1}},
                                          {{5, 1}, {6, 0}},
                                          {{6, 1}, {7, 1}},
                                          {{7, 1}, {8, 1}},
                                          {{6, 1}, {7, 0}},
                                          {{7, 0}, {8, 1}},
                                          {{8, 0}, {9, 1}}}),
               {},
               {{"alpha", 5}, {"mu", 4}, {"rho_v", 5}, {"degree_excess", 4}}});
  return f;
}

}  // namespace detail

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = detail::build_fixtures();
  return all;
}

inline const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw InputError("unknown fixture '" + name + "'");
}

/// Recomputes one claim key from an analysis of the fixture graph. Set
/// values come back as sorted label lists using the fixture's own names.
inline nlohmann::json measure_claim(const Fixture& f, const GraphAnalysis& a, const std::string& key,
                                    const nlohmann::json& stated) {
  const Graph& g = a.graph;
  auto named = [&](VertexSet s) {
    // Express s using the labels the claim used, so comparisons are exact.
    std::vector<std::string> out;
    VertexSet covered;
    for (const auto& label : stated) {
      const Vertex v = f.vertex(label.get<std::string>());
      if (s.contains(v)) {
        out.push_back(label.get<std::string>());
        covered.insert(v);
      }
    }
    for (Vertex v : s - covered) {
      out.push_back(std::to_string(f.coords[v].first) + "," + std::to_string(f.coords[v].second));
    }
    std::sort(out.begin(), out.end());
    return nlohmann::json(out);
  };
  auto need = [&](bool present) {
    if (!present) throw CapacityError("fixture claim " + key + " needs an invariant that was skipped");
  };
  auto cycle = [&]() -> const OddCycle& {
    if (!a.parity || !a.parity->cycle) throw InputError("fixture " + f.name + " is not almost bipartite");
    return *a.parity->cycle;
  };
  if (key == "alpha") return (need(a.alpha.has_value()), a.alpha->alpha);
  if (key == "mu") return a.mu.mu;
  if (key == "kappa") return (need(a.ke.has_value()), a.ke->kappa);
  if (key == "rho_v") return (need(a.rho.has_value()), a.rho->rho_v);
  if (key == "d") return (need(a.landscape.has_value()), a.landscape->d);
  if (key == "parity_class") return (need(a.parity.has_value()), to_string(a.parity->kind));
  if (key == "core") return (need(a.omega.has_value()), named(a.core()));
  if (key == "diadem") return (need(a.landscape.has_value()), named(a.landscape->diadem));
  if (key == "nucleus") return (need(a.landscape.has_value()), named(a.landscape->nucleus));
  if (key == "N_diadem") return (need(a.landscape.has_value()), named(g.neighborhood(a.landscape->diadem)));
  if (key == "non_deletable") return (need(a.rho.has_value()), named(g.vertices() - a.rho->rho_v_witnesses));
  if (key == "mu_critical_includes") return named(a.mu_critical_vertices & f.vertex_set(stated.get<std::vector<std::string>>()));
  if (key == "cycle_size") return cycle().length();
  if (key == "closed_diadem_size") return (need(a.landscape.has_value()), g.closed_neighborhood(a.landscape->diadem).size());
  if (key == "degree_excess" || key == "lem13_lhs") {
    int sum = 0;
    for (Vertex v : cycle().vertices) sum += g.degree(v);
    return key == "degree_excess" ? sum - cycle().length() : sum - 2 * cycle().length();
  }
  if (key == "lem13_rhs") {
    need(a.landscape.has_value());
    return (g.neighborhood(a.landscape->diadem) - a.landscape->diadem).size();
  }
  if (key.rfind("d_minus:", 0) == 0) {
    need(a.vertex_critical.has_value());
    return (*a.vertex_critical)[f.vertex(key.substr(8))].d;
  }
  if (key.rfind("pendant:", 0) == 0) {
    need(a.pendants.has_value());
    const Vertex y = f.vertex(key.substr(8));
    for (const PendantComponent& c : a.pendants->components) {
      if (c.root == y) return named(c.vertices);
    }
    throw InputError("fixture " + f.name + ": " + key.substr(8) + " is not a cycle vertex");
  }
  throw InputError("unknown fixture claim '" + key + "'");
}

/// Every claim whose recomputed value differs from the stated one, as
/// "key: stated X, computed Y". Empty means the reconstruction is faithful.
inline std::vector<std::string> fixture_mismatches(const Fixture& f, const Caps& caps = {}) {
  const GraphAnalysis a = analyze(f.name, f.graph(), caps);
  std::vector<std::string> out;
  for (const auto& [key, stated] : f.claims) {
    nlohmann::json expect = stated;
    if (expect.is_array()) {
      std::vector<std::string> sorted = expect.get<std::vector<std::string>>();
      std::sort(sorted.begin(), sorted.end());
      expect = sorted;
    }
    const nlohmann::json got = measure_claim(f, a, key, stated);
    if (got != expect) out.push_back(key + ": stated " + expect.dump() + ", computed " + got.dump());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

inline Graph odd_cycle_graph(int k) {
  if (k < 1) throw InputError("odd_cycle needs k >= 1");
  const int len = 2 * k + 1;
  if (len > kMaxVertices) throw CapacityError("odd_cycle: C_" + std::to_string(len) + " exceeds the vertex limit");
  std::vector<Edge> es;
  for (int i = 0; i < len; ++i) es.emplace_back(i, (i + 1) % len);
  return Graph(len, es);
}

namespace detail {

/// Uniform integer in [0, bound) from a 64-bit engine, identical on every
/// platform (std::uniform_int_distribution is implementation-defined).
inline int below(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); }

/// Bernoulli(p) with 53-bit resolution, again platform independent.
inline bool coin(std::mt19937_64& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// C_{2k+1} on vertices 0..2k with random trees hanging off it. Vertex v
/// beyond the cycle attaches to a uniformly chosen earlier vertex.
inline Graph cycle_plus_trees(int k, int n, std::uint64_t seed) {
  const int len = 2 * k + 1;
  if (k < 1) throw InputError("cycle_plus_trees needs k >= 1");
  if (n < len) throw InputError("cycle_plus_trees needs n >= 2k+1");
  if (n > kMaxVertices) throw CapacityError("cycle_plus_trees: n exceeds the vertex limit");
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  for (int i = 0; i < len; ++i) es.emplace_back(i, (i + 1) % len);
  for (int v = len; v < n; ++v) es.emplace_back(detail::below(rng, v), v);
  return Graph(n, es);
}

inline Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InputError("random_gnp needs n >= 0");
  if (n > kMaxVertices) throw CapacityError("random_gnp: n exceeds the vertex limit");
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (detail::coin(rng, p)) es.emplace_back(i, j);
    }
  }
  return Graph(n, es);
}

/// Random bipartite graph plus one edge inside a side, kept only when it
/// has exactly one odd cycle. Classification is re-checked, never assumed.
inline Graph almost_bipartite_random(int n, double p, std::uint64_t seed, const Caps& caps = {}) {
  if (n < 3) throw InputError("almost_bipartite_random needs n >= 3");
  if (n > kMaxVertices) throw CapacityError("almost_bipartite_random: n exceeds the vertex limit");
  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 100000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<int> side(static_cast<std::size_t>(n));
    for (int& s : side) s = static_cast<int>(rng() & 1U);
    std::vector<Edge> es;
    std::vector<Edge> chords;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (side[i] != side[j]) {
          if (detail::coin(rng, p)) es.emplace_back(i, j);
        } else {
          chords.emplace_back(i, j);
        }
      }
    }
    if (chords.empty()) continue;
    es.push_back(chords[detail::below(rng, static_cast<int>(chords.size()))]);
    Graph g(n, es);
    try {
      if (classify_parity(g, caps).kind == ParityClass::almost_bipartite) return g;
    } catch (const CapacityError&) {
      // too many cycles to classify; draw again
    }
  }
  throw InputError("almost_bipartite_random: no almost bipartite graph after " + std::to_string(kAttempts) +
                   " draws (edge probability too high?)");
}

namespace detail {

/// Graph on n vertices whose edges are the set bits of `mask`, pairs taken
/// in graph6 order (0,1), (0,2), (1,2), (0,3), ...
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> es;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (((mask >> bit) & 1U) != 0) es.emplace_back(i, j);
    }
  }
  return Graph(n, es);
}

inline bool mask_connected(int n, std::uint64_t mask) {
  if (n <= 1) return true;
  std::array<std::uint64_t, 8> adj{};
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (((mask >> bit) & 1U) != 0) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
    }
  }
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (std::uint64_t{1} << n) - 1;
}

}  // namespace detail

/// All labeled graphs on n <= 7 vertices in mask order.
inline GraphStream exhaustive_graphs(int n, bool connected_only) {
  if (n < 0) throw InputError("exhaustive needs n >= 0");
  if (n > 7) throw CapacityError("exhaustive enumeration is limited to n <= 7");
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  auto mask = std::make_shared<std::uint64_t>(0);
  return GraphStream([=]() -> std::optional<NamedGraph> {
    while (*mask < total) {
      const std::uint64_t m = (*mask)++;
      if (connected_only && !detail::mask_connected(n, m)) continue;
      return NamedGraph{"exh-n" + std::to_string(n) + "-" + std::to_string(m), detail::graph_from_mask(n, m)};
    }
    return std::nullopt;
  });
}

inline GraphStream generate(const GenSpec& spec, const Caps& caps = {}) {
  if (spec.count < 0) throw InputError("count must be non-negative");
  if (spec.edge_probability < 0.0 || spec.edge_probability > 1.0) throw InputError("p must lie in [0, 1]");
  const std::string seed_tag = "-s" + std::to_string(spec.seed);
  switch (spec.kind) {
    case GenKind::odd_cycle: {
      auto done = std::make_shared<bool>(false);
      Graph g = odd_cycle_graph(spec.k);
      return GraphStream([=]() -> std::optional<NamedGraph> {
        if (*done) return std::nullopt;
        *done = true;
        return NamedGraph{"odd_cycle-k" + std::to_string(spec.k), g};
      });
    }
    case GenKind::fixture: {
      if (spec.fixture_name.empty()) throw InputError("fixture needs a name");
      std::vector<NamedGraph> items;
      if (spec.fixture_name == "all") {
        for (const Fixture& f : fixtures()) items.push_back({f.name, f.graph()});
      } else {
        items.push_back({spec.fixture_name, fixture(spec.fixture_name).graph()});
      }
      auto pos = std::make_shared<std::size_t>(0);
      return GraphStream([items, pos]() -> std::optional<NamedGraph> {
        if (*pos >= items.size()) return std::nullopt;
        return items[(*pos)++];
      });
    }
    case GenKind::exhaustive:
      return exhaustive_graphs(spec.n, spec.connected_only);
    case GenKind::cycle_plus_trees:
    case GenKind::almost_bipartite_random:
    case GenKind::random_gnp: {
      if (spec.kind == GenKind::cycle_plus_trees) {
        if (spec.k < 1) throw InputError("cycle_plus_trees needs k >= 1");
        if (spec.n != 0 && spec.n < 2 * spec.k + 1) throw InputError("cycle_plus_trees needs n >= 2k+1");
      }
      if (spec.kind == GenKind::almost_bipartite_random && spec.n < 3) throw InputError("almost_bipartite_random needs n >= 3");
      if (spec.n > kMaxVertices) throw CapacityError("n exceeds the vertex limit of " + std::to_string(kMaxVertices));
      auto index = std::make_shared<int>(0);
      return GraphStream([=]() -> std::optional<NamedGraph> {
        if (*index >= spec.count) return std::nullopt;
        const int i = (*index)++;
        const std::uint64_t s = detail::mix_seed(spec.seed, static_cast<std::uint64_t>(i));
        const std::string id = std::string(to_string(spec.kind)) + seed_tag + "-" + std::to_string(i);
        switch (spec.kind) {
          case GenKind::cycle_plus_trees:
            return NamedGraph{id, cycle_plus_trees(spec.k, spec.n == 0 ? 2 * spec.k + 1 : spec.n, s)};
          case GenKind::almost_bipartite_random:
            return NamedGraph{id, almost_bipartite_random(spec.n, spec.edge_probability, s, caps)};
          default:
            return NamedGraph{id, random_gnp(spec.n, spec.edge_probability, s)};
        }
      });
    }
  }
  throw InputError("unsupported generator kind");
}

inline GraphStream generate(const std::string& spec, const Caps& caps = {}) { return generate(parse_gen_spec(spec), caps); }

/// Fuzzing stream: `count` graphs cycling through `kinds`, each with its own
/// order in [1, n_max] (kind minimums apply) and a seed derived from `seed`.
/// Sparse edge densities keep the almost bipartite rejection step cheap.
inline GraphStream random_mix(int n_max, int count, std::uint64_t seed, std::vector<GenKind> kinds, const Caps& caps = {}) {
  if (kinds.empty()) throw InputError("random_mix needs at least one kind");
  if (count < 0) throw InputError("count must be non-negative");
  if (n_max > kMaxVertices) throw CapacityError("n_max exceeds the vertex limit of " + std::to_string(kMaxVertices));
  for (GenKind k : kinds) {
    if (k == GenKind::exhaustive || k == GenKind::fixture) throw InputError(std::string("kind ") + to_string(k) + " is not random");
    if (k != GenKind::random_gnp && n_max < 3) throw InputError(std::string("kind ") + to_string(k) + " needs n_max >= 3");
    if (k == GenKind::random_gnp && n_max < 1) throw InputError("n_max must be >= 1");
  }
  auto index = std::make_shared<int>(0);
  return GraphStream([=]() -> std::optional<NamedGraph> {
    if (*index >= count) return std::nullopt;
    const int i = (*index)++;
    std::mt19937_64 rng(detail::mix_seed(seed, static_cast<std::uint64_t>(i)));
    const GenKind kind = kinds[static_cast<std::size_t>(i) % kinds.size()];
    const std::string id = std::string("mix-s") + std::to_string(seed) + "-" + std::to_string(i) + "-" + to_string(kind);
    switch (kind) {
      case GenKind::odd_cycle: {
        const int k = 1 + detail::below(rng, (n_max - 1) / 2);
        return NamedGraph{id, odd_cycle_graph(k)};
      }
      case GenKind::cycle_plus_trees: {
        const int k = 1 + detail::below(rng, (n_max - 1) / 2);
        const int n = 2 * k + 1 + detail::below(rng, n_max - 2 * k);
        return NamedGraph{id, cycle_plus_trees(k, n, rng())};
      }
      case GenKind::almost_bipartite_random: {
        const int n = 3 + detail::below(rng, n_max - 2);
        const double p = (0.5 + static_cast<double>(detail::below(rng, 1000)) / 1000.0) / n;
        return NamedGraph{id, almost_bipartite_random(n, p, rng(), caps)};
      }
      default: {
        const int n = 1 + detail::below(rng, n_max);
        const double p = 0.1 + 0.5 * static_cast<double>(detail::below(rng, 1000)) / 1000.0;
        return NamedGraph{id, random_gnp(n, p, rng())};
      }
    }
  });
}

inline std::vector<GenKind> parse_kinds(const std::string& csv) {
  std::vector<GenKind> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(gen_kind_from_string(item));
  }
  if (out.empty()) throw InputError("no generator kinds given");
  return out;
}

}  // namespace kef
