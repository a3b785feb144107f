#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace kef;

namespace {

std::string run(int jobs, std::size_t batch, std::vector<std::string>* order = nullptr) {
  GraphStream s = random_mix(10, 120, 11, parse_kinds("almost_bipartite_random,cycle_plus_trees,random_gnp"));
  HarnessOptions o;
  o.jobs = jobs;
  o.batch = batch;
  const FuzzSummary summary = run_harness(s, o, [&](const GraphOutcome& out) {
    if (order != nullptr) order->push_back(out.analysis.graph_id);
  });
  return summary_json(summary).dump();
}

}  // namespace

TEST(Harness, SummaryIndependentOfJobsAndBatching) {
  std::vector<std::string> serial;
  std::vector<std::string> parallel;
  const std::string a = run(1, 512, &serial);
  const std::string b = run(3, 7, &parallel);
  EXPECT_EQ(a, b);
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(serial.size(), 120U);
  EXPECT_EQ(serial.front(), "mix-s11-0-almost_bipartite_random");
}

TEST(Harness, TalliesEveryVerdict) {
  GraphStream s = exhaustive_graphs(4, true);
  HarnessOptions o;
  o.theorems = {"th5", "th9"};
  const FuzzSummary summary = run_harness(s, o);
  EXPECT_EQ(summary.graphs, 38);
  ASSERT_EQ(summary.theorems.size(), 2U);
  for (const auto& [id, t] : summary.theorems) EXPECT_EQ(t.pass + t.fail + t.not_applicable + t.capacity_skipped, 38) << id;
  EXPECT_FALSE(summary.any_capacity_skip());
  // K4 minus an edge appears under six labelings.
  EXPECT_EQ(summary.theorems.at("th9").fail, 6);
  EXPECT_EQ(summary.failing_graphs.size(), 6U);
}

TEST(Harness, CapacitySkipsAreCounted) {
  GraphStream s = generate("cycle_plus_trees:k=2,n=30,seed=1,count=3");
  HarnessOptions o;
  o.theorems = {"th5"};
  const FuzzSummary summary = run_harness(s, o);
  EXPECT_TRUE(summary.any_capacity_skip());
  EXPECT_FALSE(summary.any_fail());
  EXPECT_THROW(
      [] {
        GraphStream e = exhaustive_graphs(2, true);
        HarnessOptions bad;
        bad.jobs = 0;
        run_harness(e, bad);
      }(),
      InputError);
}

TEST(CounterexampleStore, RoundTripsAndSkipsBlankLines) {
  const Graph g = parse_graph6("C}");
  const std::vector<TheoremVerdict> vs = run_suite(analyze("k4e", g), {"th9", "th5"});
  std::stringstream store;
  append_counterexample(store, {"k4e", g, vs});
  store << "\n";
  append_counterexample(store, {"c5", testing_support::cycle(5), {}});
  const std::vector<Counterexample> back = read_counterexamples(store);
  ASSERT_EQ(back.size(), 2U);
  EXPECT_EQ(back[0].graph_id, "k4e");
  EXPECT_EQ(back[0].verdicts.size(), 2U);
  EXPECT_EQ(counterexample_json(back[0]), counterexample_json({"k4e", g, vs}));
  EXPECT_EQ(back[1].graph, testing_support::cycle(5));
  const std::vector<TheoremVerdict> again = replay(back[0]);
  ASSERT_EQ(again.size(), 1U);
  EXPECT_EQ(again[0].theorem_id, "th9");
  EXPECT_EQ(again[0].status, Status::fail);

  std::stringstream broken("{\"graph_id\":1}\n");
  EXPECT_THROW(read_counterexamples(broken), InputError);
}
