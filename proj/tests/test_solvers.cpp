#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace kef;
using testing_support::set;
using testing_support::to_graph;
using testing_support::to_set;

namespace {

std::vector<std::pair<int, int>> as_pairs(const Matching& m) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : m.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

TEST(Alpha, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const oracle::SmallGraph small = oracle::random_graph(rng, n, 0.1 + 0.1 * static_cast<double>(trial % 7));
    const Graph g = to_graph(small);
    const auto [alpha_bf, sets] = oracle::maximum_independent_sets(small);
    const AlphaResult r = alpha(g);
    ASSERT_EQ(r.alpha, alpha_bf);
    EXPECT_TRUE(g.is_independent(r.witness));
    EXPECT_EQ(r.witness.size(), r.alpha);

    const IndependentFamily omega = omega_family(g);
    std::vector<VertexSet> expected;
    for (std::uint32_t s : sets) expected.push_back(to_set(s));
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(omega.sets, expected);
  }
}

TEST(Alpha, CoreCoronaAndCriticalVertices) {
  const Graph p = testing_support::path(5);  // Omega = {{0,2,4}}
  EXPECT_EQ(core(p), set({0, 2, 4}));
  EXPECT_EQ(corona(p), set({0, 2, 4}));
  EXPECT_EQ(alpha_critical_vertices(p), set({0, 2, 4}));

  const Graph c = testing_support::cycle(5);
  EXPECT_EQ(core(c), VertexSet{});
  EXPECT_EQ(corona(c), VertexSet::range(5));
  EXPECT_EQ(alpha_critical_edges(c).size(), 5U);
}

TEST(Alpha, CapacityCaps) {
  const Graph big = random_gnp(41, 0.2, 3);
  EXPECT_THROW(alpha(big), CapacityError);
  Caps caps;
  caps.solver_n = 41;
  EXPECT_NO_THROW(alpha(big, caps));
  EXPECT_THROW(omega_family(random_gnp(25, 0.2, 3)), CapacityError);
}

TEST(Alpha, SolvesFortyVertexGraphs) {
  // Disjoint union of 8 five-cycles: alpha = 16.
  std::vector<Edge> es;
  for (int b = 0; b < 8; ++b) {
    for (int i = 0; i < 5; ++i) es.emplace_back(5 * b + i, 5 * b + (i + 1) % 5);
  }
  EXPECT_EQ(alpha(Graph(40, es)).alpha, 16);
  const Graph dense = random_gnp(40, 0.5, 9);
  const AlphaResult r = alpha(dense);
  EXPECT_TRUE(dense.is_independent(r.witness));
}

TEST(Blossom, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng() % 13);
    const oracle::SmallGraph small = oracle::random_graph(rng, n, 0.05 + 0.05 * static_cast<double>(trial % 10));
    const Graph g = to_graph(small);
    const MuResult r = mu(g);
    ASSERT_EQ(r.mu, oracle::mu(small)) << write_graph6(g);
    EXPECT_EQ(r.matching.size(), r.mu);
    EXPECT_TRUE(r.matching.is_valid_in(g));
  }
}

TEST(Blossom, HandlesNestedBlossoms) {
  // Two triangles joined through a path, plus a pendant: needs blossom shrinking.
  const Graph g = testing_support::graph(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}, {6, 7}});
  EXPECT_EQ(mu(g).mu, 4);
  EXPECT_EQ(mu(testing_support::complete(7)).mu, 3);
  EXPECT_EQ(mu(Graph(0, {})).mu, 0);
}

TEST(Matching, RejectsEdgesSharingAVertex) {
  EXPECT_THROW(Matching({Edge(0, 1), Edge(1, 2)}), InputError);
  const Matching m({Edge(0, 1), Edge(2, 3)});
  EXPECT_EQ(m.mate(0), 1);
  EXPECT_EQ(m.mate(4), -1);
}

TEST(AllMaximumMatchings, MatchesBruteForce) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 10);
    const oracle::SmallGraph small = oracle::random_graph(rng, n, 0.3);
    const Graph g = to_graph(small);
    std::vector<std::vector<std::pair<int, int>>> got;
    for (const Matching& m : all_maximum_matchings(g)) got.push_back(as_pairs(m));
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got, oracle::all_maximum_matchings(small)) << write_graph6(g);
  }
  EXPECT_EQ(all_maximum_matchings(testing_support::cycle(5)).size(), 5U);
  EXPECT_THROW(all_maximum_matchings(random_gnp(21, 0.1, 1)), CapacityError);
}

TEST(MatchingFromInto, FindsAndRefutes) {
  const Graph p = testing_support::path(4);
  const auto m = matching_from_into(p, set({1, 2}), set({0, 3}));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->size(), 2);
  EXPECT_FALSE(matching_from_into(testing_support::graph(3, {{0, 1}, {0, 2}}), set({1, 2}), set({0})).has_value());
  EXPECT_TRUE(matching_from_into(p, VertexSet{}, set({0})).has_value());
  EXPECT_THROW(matching_from_into(p, set({1}), set({1, 2})), InputError);
}

TEST(MuCritical, MatchesDeletionByBruteForce) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    const oracle::SmallGraph small = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.35);
    const Graph g = to_graph(small);
    const int m = oracle::mu(small);
    VertexSet vertices;
    for (int v = 0; v < small.n; ++v) {
      if (oracle::mu(oracle::without_vertex(small, v)) < m) vertices.insert(v);
    }
    EXPECT_EQ(mu_critical_vertices(g), vertices);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < small.edges.size(); ++i) edges += oracle::mu(oracle::without_edge(small, i)) < m ? 1 : 0;
    EXPECT_EQ(mu_critical_edges(g).size(), edges);
  }
}

TEST(Fixtures, StatedSolverValues) {
  const Fixture& f = fixture("fig11222");
  EXPECT_EQ(alpha(f.graph()).alpha, 5);
  EXPECT_EQ(mu(f.graph()).mu, 4);

  const Fixture& g1 = fixture("fig121212-G1");
  EXPECT_EQ(core(g1.graph()), g1.vertex_set({"a", "b"}));

  const Fixture& g2 = fixture("fig121212-G2");
  EXPECT_TRUE(mu_critical_vertices(g2.graph()).contains(g2.vertex("x")));
}
