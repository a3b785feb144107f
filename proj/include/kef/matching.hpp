#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kef/caps.hpp"
#include "kef/detail/bit_graph.hpp"
#include "kef/graph.hpp"

namespace kef {

/// A set of pairwise vertex-disjoint edges.
class Matching {
 public:
  Matching() = default;

  /// Throws InputError if two edges share a vertex.
  explicit Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (const Edge& e : edges_.edges()) {
      if (saturated_.contains(e.u) || saturated_.contains(e.v)) {
        throw InputError("matching edges share a vertex");
      }
      saturated_ |= e.ends();
    }
  }

  const EdgeSet& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  VertexSet saturated() const { return saturated_; }
  bool saturates(Vertex v) const { return saturated_.contains(v); }

  /// The partner of v, or -1 when v is exposed.
  Vertex mate(Vertex v) const {
    for (const Edge& e : edges_.edges()) {
      if (e.touches(v)) return e.other(v);
    }
    return -1;
  }

  /// True when every edge is an edge of g.
  bool is_valid_in(const Graph& g) const {
    return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return g.has_edge(e); });
  }

  friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }
  friend auto operator<=>(const Matching& a, const Matching& b) { return a.edges_ <=> b.edges_; }

 private:
  EdgeSet edges_;
  VertexSet saturated_;
};

struct MuResult {
  int mu = 0;
  Matching matching;
};

namespace detail {

using MateArray = std::array<Vertex, kMaxVertices>;

/// Edmonds' augmenting-path search with blossom contraction, restricted to
/// the vertices in `alive`. Vertices and neighbors are scanned in ascending
/// id order, so the returned matching is deterministic.
class BlossomMatcher {
 public:
  BlossomMatcher(const BitGraph& g, VertexSet alive) : g_(g), alive_(alive) {}

  int run() {
    match_.fill(-1);
    int size = 0;
    for (Vertex v : alive_) {
      if (match_[v] != -1) continue;
      const VertexSet free_nbrs = g_.nbrs(v) & alive_;
      for (Vertex u : free_nbrs) {
        if (match_[u] == -1) {
          match_[v] = u;
          match_[u] = v;
          ++size;
          break;
        }
      }
    }
    for (Vertex v : alive_) {
      if (match_[v] != -1) continue;
      Vertex t = find_augmenting_path(v);
      if (t == -1) continue;
      ++size;
      while (t != -1) {
        const Vertex pv = parent_[t];
        const Vertex next = match_[pv];
        match_[t] = pv;
        match_[pv] = t;
        t = next;
      }
    }
    return size;
  }

  const MateArray& mates() const { return match_; }

 private:
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

  Vertex lowest_common_base(Vertex a, Vertex b) const {
    std::uint64_t seen = 0;
    for (;;) {
      a = base_[a];
      seen |= bit(a);
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if ((seen & bit(b)) != 0) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_ |= bit(base_[v]) | bit(base_[match_[v]]);
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    used_ = bit(root);
    parent_.fill(-1);
    for (Vertex i = 0; i < g_.n; ++i) base_[i] = i;
    int head = 0;
    int tail = 0;
    queue_[tail++] = root;
    while (head < tail) {
      const Vertex v = queue_[head++];
      for (Vertex to : g_.nbrs(v) & alive_) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const Vertex cur_base = lowest_common_base(v, to);
          in_blossom_ = 0;
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (Vertex i : alive_) {
            if ((in_blossom_ & bit(base_[i])) == 0) continue;
            base_[i] = cur_base;
            if ((used_ & bit(i)) == 0) {
              used_ |= bit(i);
              queue_[tail++] = i;
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_ |= bit(match_[to]);
          queue_[tail++] = match_[to];
        }
      }
    }
    return -1;
  }

  const BitGraph& g_;
  VertexSet alive_;
  MateArray match_{};
  MateArray parent_{};
  MateArray base_{};
  MateArray queue_{};
  std::uint64_t used_ = 0;
  std::uint64_t in_blossom_ = 0;
};

inline int mu(const BitGraph& g, VertexSet alive) { return BlossomMatcher(g, alive).run(); }

inline Matching to_matching(const MateArray& mates, VertexSet alive) {
  std::vector<Edge> edges;
  for (Vertex v : alive) {
    if (mates[v] > v) edges.emplace_back(v, mates[v]);
  }
  return Matching(std::move(edges));
}

/// Maximum bipartite matching by augmenting paths. `rows[l]` holds the
/// right-side neighbors of left vertex l; left vertices are processed in
/// index order. Returns the size; `mate_of_left[l]` is -1 or a right id.
inline int bipartite_matching(std::span<const std::uint64_t> rows, std::vector<int>& mate_of_left) {
  const int left = static_cast<int>(rows.size());
  std::array<int, kMaxVertices> mate_of_right;
  mate_of_right.fill(-1);
  mate_of_left.assign(static_cast<std::size_t>(left), -1);
  int size = 0;
  for (int l = 0; l < left; ++l) {
    std::uint64_t visited = 0;
    auto augment = [&](auto&& self, int x) -> bool {
      for (Vertex r : VertexSet(rows[x] & ~visited)) {
        if (((visited >> r) & 1U) != 0) continue;
        visited |= std::uint64_t{1} << r;
        if (mate_of_right[r] == -1 || self(self, mate_of_right[r])) {
          mate_of_right[r] = x;
          mate_of_left[x] = r;
          return true;
        }
      }
      return false;
    };
    if (augment(augment, l)) ++size;
  }
  return size;
}

}  // namespace detail

/// Maximum matching via blossom contraction. No size cap beyond kMaxVertices.
inline MuResult mu(const Graph& g) {
  const detail::BitGraph bg(g);
  detail::BlossomMatcher matcher(bg, bg.all());
  const int size = matcher.run();
  return {size, detail::to_matching(matcher.mates(), bg.all())};
}

/// Every matching of size mu(G), sorted. Each vertex, taken in ascending
/// order, is either matched to a later undecided neighbor or left exposed;
/// at most n - 2mu vertices may be exposed.
inline std::vector<Matching> all_maximum_matchings(const Graph& g, const Caps& caps = {}) {
  if (g.order() > caps.matching_enumeration_n) {
    throw CapacityError("all_maximum_matchings: order " + std::to_string(g.order()) + " exceeds cap " +
                        std::to_string(caps.matching_enumeration_n));
  }
  const detail::BitGraph bg(g);
  const int target = detail::mu(bg, bg.all());
  std::vector<Matching> out;
  std::vector<Edge> current;
  auto rec = [&](auto&& self, VertexSet undecided, int budget) -> void {
    if (undecided.empty()) {
      if (static_cast<std::int64_t>(out.size()) >= caps.crit_count) {
        throw CapacityError("all_maximum_matchings: more than crit_count maximum matchings");
      }
      out.emplace_back(current);
      return;
    }
    int stranded = 0;
    for (Vertex v : undecided) {
      if (!bg.nbrs(v).intersects(undecided)) ++stranded;
    }
    if (stranded > budget) return;
    if (undecided.size() - 2 * detail::mu(bg, undecided) > budget) return;

    const Vertex v = undecided.front();
    const VertexSet rest = undecided - VertexSet::single(v);
    for (Vertex u : bg.nbrs(v) & rest) {
      current.emplace_back(v, u);
      self(self, rest - VertexSet::single(u), budget);
      current.pop_back();
    }
    if (budget > 0) self(self, rest, budget - 1);
  };
  rec(rec, bg.all(), g.order() - 2 * target);
  std::sort(out.begin(), out.end());
  return out;
}

/// A matching that saturates every vertex of `from` using only (from, into)
/// edges, or nullopt if none exists.
inline std::optional<Matching> matching_from_into(const Graph& g, VertexSet from, VertexSet into) {
  g.require_valid(from);
  g.require_valid(into);
  if (from.intersects(into)) throw InputError("matching_from_into requires disjoint sets");
  const std::vector<Vertex> left = from.members();
  std::vector<std::uint64_t> rows;
  rows.reserve(left.size());
  for (Vertex v : left) rows.push_back((g.adjacent(v) & into).bits());
  std::vector<int> mate;
  const int size = detail::bipartite_matching(rows, mate);
  if (size != static_cast<int>(left.size())) return std::nullopt;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < left.size(); ++i) edges.emplace_back(left[i], mate[i]);
  return Matching(std::move(edges));
}

/// Vertices v with mu(G - v) < mu(G).
inline VertexSet mu_critical_vertices(const Graph& g) {
  const detail::BitGraph bg(g);
  const int m = detail::mu(bg, bg.all());
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (detail::mu(bg, bg.all() - VertexSet::single(v)) < m) out.insert(v);
  }
  return out;
}

/// Edges e with mu(G - e) < mu(G).
inline EdgeSet mu_critical_edges(const Graph& g) {
  const detail::BitGraph bg(g);
  const int m = detail::mu(bg, bg.all());
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (detail::mu(bg.without_edge(e), bg.all()) < m) out.push_back(e);
  }
  return EdgeSet(std::move(out));
}

}  // namespace kef
