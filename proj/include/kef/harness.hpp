#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "kef/analysis.hpp"
#include "kef/generators.hpp"
#include "kef/theorems.hpp"

namespace kef {

struct StatusTally {
  std::int64_t pass = 0;
  std::int64_t fail = 0;
  std::int64_t not_applicable = 0;
  std::int64_t capacity_skipped = 0;

  void add(Status s) {
    switch (s) {
      case Status::pass:
        ++pass;
        break;
      case Status::fail:
        ++fail;
        break;
      case Status::not_applicable:
        ++not_applicable;
        break;
      case Status::capacity_skipped:
        ++capacity_skipped;
        break;
    }
  }

  friend bool operator==(const StatusTally&, const StatusTally&) = default;
};

/// Aggregate of a harness run. Everything in it is independent of the
/// number of worker threads.
struct FuzzSummary {
  std::int64_t graphs = 0;
  std::int64_t graphs_with_capacity_skips = 0;
  std::map<std::string, StatusTally> theorems;
  std::vector<std::string> failing_graphs;  ///< in stream order

  std::int64_t total(Status s) const {
    std::int64_t t = 0;
    for (const auto& [id, tally] : theorems) {
      switch (s) {
        case Status::pass:
          t += tally.pass;
          break;
        case Status::fail:
          t += tally.fail;
          break;
        case Status::not_applicable:
          t += tally.not_applicable;
          break;
        case Status::capacity_skipped:
          t += tally.capacity_skipped;
          break;
      }
    }
    return t;
  }

  bool any_fail() const { return total(Status::fail) > 0; }
  bool any_capacity_skip() const { return graphs_with_capacity_skips > 0 || total(Status::capacity_skipped) > 0; }
};

inline Json summary_json(const FuzzSummary& s) {
  Json theorems = Json::object();
  for (const auto& [id, t] : s.theorems) {
    theorems[id] = Json{{"pass", t.pass}, {"fail", t.fail}, {"not_applicable", t.not_applicable}, {"capacity_skipped", t.capacity_skipped}};
  }
  return Json{{"graphs", s.graphs},
              {"graphs_with_capacity_skips", s.graphs_with_capacity_skips},
              {"theorems", theorems},
              {"failing_graphs", s.failing_graphs}};
}

/// One processed graph, handed to the observer in stream order.
struct GraphOutcome {
  const GraphAnalysis& analysis;
  const std::vector<TheoremVerdict>& verdicts;
};

struct HarnessOptions {
  Caps caps;
  std::vector<std::string> theorems{"all"};
  int jobs = 1;
  std::size_t batch = 512;
};

/// Runs the suite over every graph of `stream`. Graphs are pulled in batches
/// and fanned out to `jobs` threads; results are merged and passed to
/// `observe` strictly in stream order, so output never depends on `jobs`.
inline FuzzSummary run_harness(GraphStream& stream, const HarnessOptions& options,
                               const std::function<void(const GraphOutcome&)>& observe = {}) {
  if (options.jobs < 1) throw InputError("jobs must be >= 1");
  FuzzSummary summary;
  for (const std::string& id : all_theorem_ids()) {
    if (selects(options.theorems, id)) summary.theorems[id] = StatusTally{};
  }

  std::vector<NamedGraph> batch;
  std::vector<std::optional<GraphAnalysis>> analyses;
  std::vector<std::vector<TheoremVerdict>> verdicts;
  bool exhausted = false;
  while (!exhausted) {
    batch.clear();
    while (batch.size() < options.batch) {
      std::optional<NamedGraph> g = stream.next();
      if (!g) {
        exhausted = true;
        break;
      }
      batch.push_back(std::move(*g));
    }
    analyses.assign(batch.size(), std::nullopt);
    verdicts.assign(batch.size(), {});

    auto work = [&](std::size_t i) {
      analyses[i] = analyze(batch[i].id, batch[i].graph, options.caps);
      verdicts[i] = run_suite(*analyses[i], options.theorems);
    };
    const int threads = std::min<int>(options.jobs, static_cast<int>(batch.size()));
    if (threads <= 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) work(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            for (std::size_t i = next++; i < batch.size(); i = next++) work(i);
          } catch (...) {
            errors[static_cast<std::size_t>(t)] = std::current_exception();
            next = batch.size();
          }
        });
      }
      for (std::thread& th : pool) th.join();
      for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }

    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++summary.graphs;
      if (!analyses[i]->complete()) ++summary.graphs_with_capacity_skips;
      bool failed = false;
      for (const TheoremVerdict& v : verdicts[i]) {
        summary.theorems[v.theorem_id].add(v.status);
        failed = failed || v.status == Status::fail;
      }
      if (failed) summary.failing_graphs.push_back(batch[i].id);
      if (observe) observe(GraphOutcome{*analyses[i], verdicts[i]});
    }
  }
  return summary;
}

// ---------------------------------------------------------------------------
// Counterexample store: one JSON object per line, append-only.

struct Counterexample {
  std::string graph_id;
  Graph graph;
  std::vector<TheoremVerdict> verdicts;
};

inline Json counterexample_json(const Counterexample& c) {
  Json edges = Json::array();
  for (const Edge& e : c.graph.edges()) edges.push_back({e.u, e.v});
  return Json{{"graph_id", c.graph_id}, {"n", c.graph.order()}, {"edges", edges}, {"verdicts", c.verdicts}};
}

inline Counterexample counterexample_from_json(const Json& j) {
  try {
    Counterexample c;
    c.graph_id = j.at("graph_id").get<std::string>();
    std::vector<Edge> edges;
    for (const Json& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    c.graph = Graph(j.at("n").get<int>(), edges);
    for (const Json& v : j.at("verdicts")) c.verdicts.push_back(v.get<TheoremVerdict>());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed counterexample: ") + e.what());
  }
}

inline void append_counterexample(std::ostream& out, const Counterexample& c) { out << counterexample_json(c).dump() << '\n'; }

inline std::vector<Counterexample> read_counterexamples(std::istream& in) {
  std::vector<Counterexample> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("counterexample store: ") + e.what());
    }
    out.push_back(counterexample_from_json(j));
  }
  return out;
}

/// Re-evaluates the stored fail verdicts of `c` from scratch and returns the
/// fresh verdicts for the same theorem ids.
inline std::vector<TheoremVerdict> replay(const Counterexample& c, const Caps& caps = {}) {
  std::vector<std::string> ids;
  for (const TheoremVerdict& v : c.verdicts) {
    if (v.status == Status::fail) ids.push_back(v.theorem_id);
  }
  if (ids.empty()) return {};
  return run_suite(analyze(c.graph_id, c.graph, caps), ids);
}

}  // namespace kef
