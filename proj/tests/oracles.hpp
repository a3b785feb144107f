#pragma once

// Brute-force reference computations. Everything here works from the edge
// list by exhaustive subset enumeration and shares no code with the solvers.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct SmallGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

inline std::vector<std::uint32_t> adjacency(const SmallGraph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n), 0);
  for (auto [u, v] : g.edges) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }
  return adj;
}

inline int popcount(std::uint32_t x) { return __builtin_popcount(x); }

inline bool independent(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if ((s >> v & 1U) != 0 && (adj[v] & s) != 0) return false;
  }
  return true;
}

inline std::uint32_t neighborhood(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  std::uint32_t out = 0;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if ((s >> v & 1U) != 0) out |= adj[v];
  }
  return out;
}

/// All maximum independent sets as bitmasks, with alpha.
inline std::pair<int, std::vector<std::uint32_t>> maximum_independent_sets(const SmallGraph& g) {
  const auto adj = adjacency(g);
  int best = 0;
  std::vector<std::uint32_t> sets;
  for (std::uint32_t s = 0; s < (1U << g.n); ++s) {
    if (!independent(adj, s)) continue;
    const int k = popcount(s);
    if (k > best) {
      best = k;
      sets.clear();
    }
    if (k == best) sets.push_back(s);
  }
  return {best, sets};
}

inline int alpha(const SmallGraph& g) { return maximum_independent_sets(g).first; }

/// Maximum matching size by trying every edge subset (small m only) or by
/// recursion on the lowest vertex.
inline int mu(const SmallGraph& g) {
  const auto adj = adjacency(g);
  std::vector<int> memo(std::size_t{1} << g.n, -1);
  auto rec = [&](auto&& self, std::uint32_t alive) -> int {
    if (alive == 0) return 0;
    if (memo[alive] >= 0) return memo[alive];
    const int v = __builtin_ctz(alive);
    const std::uint32_t rest = alive & ~(1U << v);
    int best = self(self, rest);
    for (std::uint32_t nb = adj[v] & rest; nb != 0; nb &= nb - 1) {
      const int u = __builtin_ctz(nb);
      best = std::max(best, 1 + self(self, rest & ~(1U << u)));
    }
    return memo[alive] = best;
  };
  return rec(rec, (1U << g.n) - 1);
}

/// Every maximum matching, each as a sorted edge list; the family sorted.
inline std::vector<std::vector<std::pair<int, int>>> all_maximum_matchings(const SmallGraph& g) {
  const int target = mu(g);
  std::vector<std::pair<int, int>> es = g.edges;
  for (auto& e : es) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(es.begin(), es.end());
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t used) -> void {
    if (static_cast<int>(cur.size()) == target) {
      out.push_back(cur);
      return;
    }
    if (i == es.size()) return;
    if (static_cast<int>(cur.size() + (es.size() - i)) < target) return;
    const auto [u, v] = es[i];
    if ((used >> u & 1U) == 0 && (used >> v & 1U) == 0) {
      cur.push_back(es[i]);
      self(self, i + 1, used | 1U << u | 1U << v);
      cur.pop_back();
    }
    self(self, i + 1, used);
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

struct Landscape {
  int d = 0;
  std::vector<std::uint32_t> critical;  ///< all critical independent sets, ascending mask order
  std::uint32_t ker = 0;
  std::uint32_t diadem = 0;
  std::uint32_t nucleus = 0;
  int alpha_prime = 0;
};

/// Critical difference and critical-set landscape by enumerating every
/// independent set.
inline Landscape landscape(const SmallGraph& g) {
  const auto adj = adjacency(g);
  Landscape out;
  out.d = 0;
  for (std::uint32_t s = 0; s < (1U << g.n); ++s) {
    if (!independent(adj, s)) continue;
    out.d = std::max(out.d, popcount(s) - popcount(neighborhood(adj, s)));
  }
  out.ker = (1U << g.n) - 1;
  for (std::uint32_t s = 0; s < (1U << g.n); ++s) {
    if (!independent(adj, s) || popcount(s) - popcount(neighborhood(adj, s)) != out.d) continue;
    out.critical.push_back(s);
    out.ker &= s;
    out.diadem |= s;
    out.alpha_prime = std::max(out.alpha_prime, popcount(s));
  }
  out.nucleus = (1U << g.n) - 1;
  for (std::uint32_t s : out.critical) {
    if (popcount(s) == out.alpha_prime) out.nucleus &= s;
  }
  return out;
}

/// d(G) computed as max over all subsets X (independent or not) of |X| - |N(X)|.
inline int difference_any_subset(const SmallGraph& g) {
  const auto adj = adjacency(g);
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << g.n); ++s) best = std::max(best, popcount(s) - popcount(neighborhood(adj, s)));
  return best;
}

inline SmallGraph without_vertex(const SmallGraph& g, int v) {
  SmallGraph out{g.n - 1, {}};
  auto rename = [v](int x) { return x < v ? x : x - 1; };
  for (auto [a, b] : g.edges) {
    if (a != v && b != v) out.edges.emplace_back(rename(a), rename(b));
  }
  return out;
}

inline SmallGraph without_edge(const SmallGraph& g, std::size_t i) {
  SmallGraph out = g;
  out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

inline bool is_ke(const SmallGraph& g) { return alpha(g) + mu(g) == g.n; }

/// Vertices whose deletion leaves a KE graph.
inline std::uint32_t rho_v_witnesses(const SmallGraph& g) {
  std::uint32_t out = 0;
  for (int v = 0; v < g.n; ++v) {
    if (is_ke(without_vertex(g, v))) out |= 1U << v;
  }
  return out;
}

inline int rho_e(const SmallGraph& g) {
  int out = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i) out += is_ke(without_edge(g, i)) ? 1 : 0;
  return out;
}

/// Number of odd simple cycles, by enumerating vertex subsets that span a
/// cycle: for each subset, count Hamiltonian cycles of the induced graph.
inline long odd_cycle_count(const SmallGraph& g) {
  const auto adj = adjacency(g);
  long total = 0;
  for (std::uint32_t s = 1; s < (1U << g.n); ++s) {
    const int k = popcount(s);
    if (k < 3 || k % 2 == 0) continue;
    const int start = __builtin_ctz(s);
    // Hamiltonian cycles through `start` in G[s], directed, then halved.
    std::vector<std::vector<long>> paths(std::size_t{1} << g.n, std::vector<long>(static_cast<std::size_t>(g.n), 0));
    paths[1U << start][start] = 1;
    long cycles = 0;
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t t = s; t != 0; t = (t - 1) & s) {
      if ((t >> start & 1U) != 0) subsets.push_back(t);
    }
    std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) { return popcount(a) < popcount(b); });
    for (std::uint32_t t : subsets) {
      for (int v = 0; v < g.n; ++v) {
        const long c = paths[t][v];
        if (c == 0) continue;
        if (t == s && (adj[v] >> start & 1U) != 0 && v != start) cycles += c;
        for (std::uint32_t nb = adj[v] & s & ~t; nb != 0; nb &= nb - 1) {
          const int w = __builtin_ctz(nb);
          paths[t | 1U << w][w] += c;
        }
      }
    }
    total += cycles / 2;
  }
  return total;
}

inline SmallGraph random_graph(std::mt19937_64& rng, int n, double p) {
  SmallGraph g{n, {}};
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

}  // namespace oracle
