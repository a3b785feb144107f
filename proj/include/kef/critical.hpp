#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "kef/caps.hpp"
#include "kef/detail/bit_graph.hpp"
#include "kef/graph.hpp"
#include "kef/independence.hpp"
#include "kef/matching.hpp"

namespace kef {

/// Everything about the critical independent sets of one graph.
///
/// The empty set always counts as independent with difference 0, so d >= 0
/// and a graph whose only critical set is the empty one has
/// ker = diadem = nucleus = {} and alpha_prime = 0.
struct CriticalLandscape {
  int d = 0;                              ///< critical difference d(G)
  VertexSet ker;                          ///< intersection of all critical independent sets
  VertexSet diadem;                       ///< union of all critical independent sets
  VertexSet nucleus;                      ///< intersection of MaxCritIndep(G)
  int alpha_prime = 0;                    ///< size of a maximum critical independent set
  IndependentFamily max_crit_family;      ///< MaxCritIndep(G)
  std::vector<VertexSet> critical_sets;   ///< all critical independent sets, sorted
  std::int64_t crit_count = 0;

  int epsilon() const { return ker.size(); }
  int beta() const { return diadem.size(); }
};

namespace detail {

/// Depth-first search over the independent sets inside `alive`. Each
/// independent set is a leaf of exactly one branch. A candidate all of
/// whose neighbors already lie in N(I) is taken without branching: leaving
/// it out can never produce a set of maximum difference.
class DifferenceSearch {
 public:
  DifferenceSearch(const BitGraph& g, VertexSet alive) : g_(g), alive_(alive) {}

  int maximum() {
    best_ = -1;
    optimize(alive_, {}, {});
    return best_;
  }

  /// Returns false if more than `limit` critical sets exist.
  bool enumerate(int target, std::int64_t limit, std::vector<VertexSet>& out) {
    target_ = target;
    limit_ = limit;
    out_ = &out;
    overflow_ = false;
    collect(alive_, {}, {});
    return !overflow_;
  }

 private:
  void absorb_free(VertexSet& p, VertexSet& in, VertexSet nbrs) const {
    for (Vertex w : p) {
      if ((g_.nbrs(w) & alive_).is_subset_of(nbrs)) {
        in.insert(w);
        p.erase(w);
      }
    }
  }

  void optimize(VertexSet p, VertexSet in, VertexSet nbrs) {
    absorb_free(p, in, nbrs);
    const int d = in.size() - nbrs.size();
    best_ = std::max(best_, d);
    if (p.empty() || d + p.size() <= best_) return;
    const Vertex v = p.front();
    const VertexSet nv = g_.nbrs(v) & alive_;
    optimize(p - nv - VertexSet::single(v), in | VertexSet::single(v), nbrs | nv);
    optimize(p - VertexSet::single(v), in, nbrs);
  }

  void collect(VertexSet p, VertexSet in, VertexSet nbrs) {
    if (overflow_) return;
    absorb_free(p, in, nbrs);
    const int d = in.size() - nbrs.size();
    if (d + p.size() < target_) return;
    if (p.empty()) {
      if (d == target_) {
        if (static_cast<std::int64_t>(out_->size()) >= limit_) {
          overflow_ = true;
          return;
        }
        out_->push_back(in);
      }
      return;
    }
    const Vertex v = p.front();
    const VertexSet nv = g_.nbrs(v) & alive_;
    collect(p - nv - VertexSet::single(v), in | VertexSet::single(v), nbrs | nv);
    collect(p - VertexSet::single(v), in, nbrs);
  }

  const BitGraph& g_;
  VertexSet alive_;
  int best_ = -1;
  int target_ = 0;
  std::int64_t limit_ = 0;
  std::vector<VertexSet>* out_ = nullptr;
  bool overflow_ = false;
};

inline int critical_difference(const BitGraph& g, VertexSet alive) { return DifferenceSearch(g, alive).maximum(); }

inline CriticalLandscape critical_landscape(const BitGraph& g, VertexSet alive, std::int64_t limit) {
  CriticalLandscape out;
  DifferenceSearch search(g, alive);
  out.d = search.maximum();
  if (!search.enumerate(out.d, limit, out.critical_sets)) {
    throw CapacityError("critical_landscape: more than crit_count critical independent sets");
  }
  std::sort(out.critical_sets.begin(), out.critical_sets.end());
  out.crit_count = static_cast<std::int64_t>(out.critical_sets.size());

  out.ker = out.critical_sets.front();
  for (VertexSet s : out.critical_sets) {
    out.ker &= s;
    out.diadem |= s;
    out.alpha_prime = std::max(out.alpha_prime, s.size());
  }
  out.max_crit_family.cardinality = out.alpha_prime;
  for (VertexSet s : out.critical_sets) {
    if (s.size() == out.alpha_prime) out.max_crit_family.sets.push_back(s);
  }
  out.nucleus = out.max_crit_family.intersection();
  return out;
}

/// mu of the bipartite double cover (parts V and V', u ~ v' iff uv in E),
/// restricted to `alive` on both sides.
inline int double_cover_mu(const BitGraph& g, VertexSet alive) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.n), 0);
  for (Vertex v : alive) rows[v] = g.adj[v] & alive.bits();
  std::vector<int> mate;
  return bipartite_matching(rows, mate);
}

}  // namespace detail

/// d(G) = max over independent sets I of |I| - |N(I)|.
inline int critical_difference(const Graph& g, const Caps& caps = {}) {
  detail::require_order(g, caps.enumeration_n, "critical_difference");
  const detail::BitGraph bg(g);
  return detail::critical_difference(bg, bg.all());
}

inline CriticalLandscape critical_landscape(const Graph& g, const Caps& caps = {}) {
  detail::require_order(g, caps.enumeration_n, "critical_landscape");
  const detail::BitGraph bg(g);
  return detail::critical_landscape(bg, bg.all(), caps.crit_count);
}

/// Size of a maximum matching of the bipartite double cover of g. The
/// identity d(G) = n(G) - double_cover_mu(G) is checked, not assumed.
inline int double_cover_mu(const Graph& g) {
  const detail::BitGraph bg(g);
  return detail::double_cover_mu(bg, bg.all());
}

}  // namespace kef
