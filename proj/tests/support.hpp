#pragma once

#include <cstdint>
#include <vector>

#include "kef/kef.hpp"
#include "oracles.hpp"

namespace testing_support {

inline kef::Graph to_graph(const oracle::SmallGraph& g) {
  std::vector<kef::Edge> es;
  for (auto [u, v] : g.edges) es.emplace_back(u, v);
  return kef::Graph(g.n, es);
}

inline oracle::SmallGraph to_small(const kef::Graph& g) {
  oracle::SmallGraph out{g.order(), {}};
  for (const kef::Edge& e : g.edges()) out.edges.emplace_back(e.u, e.v);
  return out;
}

inline kef::VertexSet to_set(std::uint32_t mask) { return kef::VertexSet(mask); }

inline kef::Graph graph(int n, std::vector<std::pair<int, int>> edges) {
  return to_graph(oracle::SmallGraph{n, std::move(edges)});
}

inline kef::Graph cycle(int len) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < len; ++i) es.emplace_back(i, (i + 1) % len);
  return graph(len, es);
}

inline kef::Graph path(int len) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < len; ++i) es.emplace_back(i, i + 1);
  return graph(len, es);
}

inline kef::Graph complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  }
  return graph(n, es);
}

inline kef::VertexSet set(std::initializer_list<int> members) {
  kef::VertexSet s;
  for (int v : members) s.insert(v);
  return s;
}

}  // namespace testing_support
