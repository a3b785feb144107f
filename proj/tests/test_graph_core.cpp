#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support.hpp"

using namespace kef;
using testing_support::cycle;
using testing_support::graph;
using testing_support::set;

TEST(VertexSet, OrdersLexicographicallyOnMemberLists) {
  EXPECT_LT(set({0, 5}), set({1}));
  EXPECT_LT(set({0}), set({0, 1}));
  EXPECT_LT(set({}), set({0}));
  EXPECT_LT(set({1, 2}), set({1, 3}));
  EXPECT_EQ(to_string(set({3, 0, 2})), "{0,2,3}");
}

TEST(VertexSet, RejectsOutOfRangeMembers) {
  VertexSet s;
  EXPECT_THROW(s.insert(64), InputError);
  EXPECT_THROW(s.insert(-1), InputError);
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(graph(3, {{1, 1}}), InputError);
  EXPECT_THROW(graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(graph(3, {{0, 3}}), InputError);
  EXPECT_THROW(Graph(65, {}), CapacityError);
}

TEST(Graph, NeighborhoodAndDifference) {
  const Graph p = testing_support::path(4);  // 0-1-2-3
  EXPECT_EQ(p.neighborhood(set({0, 3})), set({1, 2}));
  EXPECT_EQ(p.closed_neighborhood(set({0})), set({0, 1}));
  EXPECT_EQ(p.difference(set({0, 3})), 0);
  EXPECT_EQ(p.difference(set({0})), 0);
  EXPECT_EQ(p.difference(set({1})), -1);
  EXPECT_TRUE(p.is_independent(set({0, 2})));
  EXPECT_FALSE(p.is_independent(set({0, 1})));
  EXPECT_THROW(p.neighborhood(set({4})), InputError);
}

TEST(Graph, EdgesBetweenRequiresDisjointSets) {
  const Graph c = cycle(5);
  EXPECT_EQ(c.edges_between(set({0}), set({1, 4})).size(), 2U);
  EXPECT_THROW(c.edges_between(set({0, 1}), set({1})), InputError);
}

TEST(Graph, InducedSubgraphRelabelsAndLiftsBack) {
  const Graph c = cycle(5);
  const Subgraph sub = c.induced(set({1, 2, 4}));
  EXPECT_EQ(sub.graph.order(), 3);
  EXPECT_EQ(sub.graph.size(), 1);  // only 1-2 survives
  EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{1, 2, 4}));
  EXPECT_EQ(sub.lift(set({0, 2})), set({1, 4}));

  const Subgraph minus = c.delete_vertex(0);
  EXPECT_EQ(minus.graph.order(), 4);
  EXPECT_EQ(minus.graph.size(), 3);
  EXPECT_THROW(c.delete_edge(Edge(0, 2)), InputError);
  EXPECT_EQ(c.delete_edge(Edge(0, 1)).size(), 4);
}

TEST(EdgeListFormat, ParsesCommentsAndMultipleGraphs) {
  std::istringstream in("# two graphs\n3 2\n0 1\n1 2\n\n2 1 # trailing\n0 1\n");
  const std::vector<Graph> gs = read_edge_lists(in);
  ASSERT_EQ(gs.size(), 2U);
  EXPECT_EQ(gs[0].size(), 2);
  EXPECT_EQ(gs[1].order(), 2);
}

TEST(EdgeListFormat, RejectsMalformedInput) {
  EXPECT_THROW(parse_edge_list(""), InputError);
  EXPECT_THROW(parse_edge_list("# only a comment\n"), InputError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), InputError);
  EXPECT_THROW(parse_edge_list("3 1\n0 x\n"), InputError);
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), InputError);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), InputError);
  EXPECT_THROW(parse_edge_list("-1 0\n"), InputError);
  EXPECT_THROW(parse_edge_list("70 0\n"), CapacityError);
}

TEST(Graph6Format, KnownEncodings) {
  EXPECT_EQ(write_graph6(cycle(5)), "Dhc");
  EXPECT_EQ(write_graph6(testing_support::complete(4)), "C~");
  EXPECT_EQ(parse_graph6(">>graph6<<Dhc\n"), cycle(5));
  EXPECT_EQ(parse_graph6("@").order(), 1);
  EXPECT_EQ(parse_graph6("?").order(), 0);
}

TEST(Graph6Format, RejectsUnsupportedVariantsAndBadLengths) {
  EXPECT_THROW(parse_graph6("&Dhc"), InputError);
  EXPECT_THROW(parse_graph6(":Dhc"), InputError);
  EXPECT_THROW(parse_graph6(";Dhc"), InputError);
  EXPECT_THROW(parse_graph6("Dh"), InputError);
  EXPECT_THROW(parse_graph6("Dhcc"), InputError);
  EXPECT_THROW(parse_graph6("D h"), InputError);
  EXPECT_THROW(parse_graph6(""), InputError);
}

TEST(Graph6Format, RoundTripsRandomGraphsIncludingLongHeaders) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng() % 65);
    const Graph g = random_gnp(n, 0.2, rng());
    const std::string text = write_graph6(g);
    EXPECT_EQ(parse_graph6(text), g) << text;
    EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
  }
}

TEST(Graph, RelabelingPreservesInvariants) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_gnp(9, 0.35, rng());
    std::vector<Vertex> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = g.relabeled(perm);
    EXPECT_EQ(h.size(), g.size());
    EXPECT_EQ(alpha(h).alpha, alpha(g).alpha);
    EXPECT_EQ(mu(h).mu, mu(g).mu);
    EXPECT_EQ(rho(h).rho_v, rho(g).rho_v);
    EXPECT_EQ(rho(h).rho_e, rho(g).rho_e);
    EXPECT_EQ(critical_difference(h), critical_difference(g));
  }
}
