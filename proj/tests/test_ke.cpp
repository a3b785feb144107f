#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace kef;
using testing_support::set;
using testing_support::to_graph;
using testing_support::to_set;

TEST(KeClassification, Examples) {
  const KeClassification c5 = classify_ke(testing_support::cycle(5));
  EXPECT_EQ(c5.alpha, 2);
  EXPECT_EQ(c5.mu, 2);
  EXPECT_EQ(c5.kappa, 1);
  EXPECT_FALSE(c5.is_ke);
  EXPECT_TRUE(c5.is_one_ke);
  EXPECT_FALSE(c5.witness_s.has_value());

  const KeClassification c6 = classify_ke(testing_support::cycle(6));
  EXPECT_TRUE(c6.is_ke);
  ASSERT_TRUE(c6.witness_s.has_value());
  EXPECT_EQ(*c6.witness_s, set({0, 2, 4}));
  ASSERT_TRUE(c6.witness_matching.has_value());
  EXPECT_EQ(c6.witness_matching->size(), 3);

  EXPECT_EQ(classify_ke(testing_support::complete(5)).kappa, 2);
  EXPECT_TRUE(is_koenig_egervary(Graph(0, {})));
}

TEST(KeClassification, WitnessIsIndependentAndMatched) {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 200; ++trial) {
    const oracle::SmallGraph small = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.3);
    const Graph g = to_graph(small);
    const KeClassification k = classify_ke(g);
    EXPECT_EQ(k.is_ke, oracle::is_ke(small));
    EXPECT_EQ(k.kappa, small.n - oracle::alpha(small) - oracle::mu(small));
    if (!k.is_ke) continue;
    const VertexSet s = *k.witness_s;
    EXPECT_TRUE(g.is_independent(s));
    EXPECT_EQ(s.size(), k.alpha);
    for (const Edge& e : k.witness_matching->edges()) EXPECT_TRUE(s.contains(e.u) != s.contains(e.v));
    EXPECT_EQ(k.witness_matching->size(), g.order() - s.size());
  }
}

TEST(Rho, MatchesDeletionByBruteForce) {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 200; ++trial) {
    const oracle::SmallGraph small = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.15 + 0.05 * (trial % 6));
    const Graph g = to_graph(small);
    const RhoReport r = rho(g);
    ASSERT_EQ(r.rho_v_witnesses, to_set(oracle::rho_v_witnesses(small))) << write_graph6(g);
    EXPECT_EQ(r.rho_v, r.rho_v_witnesses.size());
    EXPECT_EQ(r.rho_e, oracle::rho_e(small));
    EXPECT_EQ(r.rho_e, static_cast<int>(r.rho_e_witnesses.size()));
  }
}

TEST(Rho, DeletableByCriticalityAgreesOnOneKeGraphs) {
  std::mt19937_64 rng(909);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = random_gnp(3 + static_cast<int>(rng() % 8), 0.3, rng());
    if (classify_ke(g).kappa != 1) {
      EXPECT_THROW(deletable_by_criticality(g), DomainError);
      continue;
    }
    ++checked;
    EXPECT_EQ(deletable_by_criticality(g), rho(g).rho_v_witnesses) << write_graph6(g);
  }
  EXPECT_GT(checked, 20);
}

TEST(Rho, FixtureValues) {
  const Fixture& g1 = fixture("fig121212-G1");
  const RhoReport r1 = rho(g1.graph());
  EXPECT_EQ(r1.rho_v, 5);
  EXPECT_EQ(VertexSet::range(8) - r1.rho_v_witnesses, g1.vertex_set({"a", "b", "c"}));

  const Fixture& g2 = fixture("fig121212-G2");
  const RhoReport r2 = rho(g2.graph());
  EXPECT_EQ(r2.rho_v, 6);
  EXPECT_EQ(VertexSet::range(7) - r2.rho_v_witnesses, g2.vertex_set({"x"}));

  EXPECT_EQ(rho(fixture("fig2-G1").graph()).rho_v, 4);
  EXPECT_EQ(rho(fixture("fig2-G2").graph()).rho_v, 3);
  EXPECT_EQ(rho(fixture("fig11222").graph()).rho_v, 5);
  EXPECT_EQ(rho(testing_support::cycle(5)).rho_v, 5);
  EXPECT_EQ(classify_ke(fixture("fig123-G1").graph()).kappa, 1);
  EXPECT_EQ(classify_ke(fixture("fig123-G2").graph()).kappa, 1);
}

TEST(Rho, CapacityCap) { EXPECT_THROW(rho(random_gnp(41, 0.1, 1)), CapacityError); }
