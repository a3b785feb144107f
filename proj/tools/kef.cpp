// kef: invariant reports, theorem verification, fuzzing and graph generation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kef/kef.hpp"

namespace {

enum ExitCode : int { kOk = 0, kTheoremFail = 1, kInputError = 2, kCapacity = 3 };

struct CapFlags {
  std::optional<int> solver_n;
  std::optional<int> enumeration_n;
  std::optional<int> matching_enumeration_n;
  std::optional<std::int64_t> cycle_work;
  std::optional<std::int64_t> crit_count;

  void attach(CLI::App& app) {
    app.add_option("--solver-n", solver_n, "max order for exact alpha (default 40)");
    app.add_option("--enumeration-n", enumeration_n, "max order for Omega and critical-set enumeration (default 24)");
    app.add_option("--matching-enumeration-n", matching_enumeration_n, "max order for listing maximum matchings (default 20)");
    app.add_option("--cycle-work", cycle_work, "DFS step budget for the odd-cycle census");
    app.add_option("--crit-count", crit_count, "max sets enumerated per family");
  }

  kef::Caps resolve() const {
    kef::Caps caps = kef::caps_from_environment();
    kef::Json overrides = kef::Json::object();
    if (solver_n) overrides["solver_n"] = *solver_n;
    if (enumeration_n) overrides["enumeration_n"] = *enumeration_n;
    if (matching_enumeration_n) overrides["matching_enumeration_n"] = *matching_enumeration_n;
    if (cycle_work) overrides["cycle_work"] = *cycle_work;
    if (crit_count) overrides["crit_count"] = *crit_count;
    return kef::merge_caps(caps, overrides);
  }
};

struct Source {
  std::string input;
  std::string gen;
  std::string format = "edgelist";

  void attach(CLI::App& app, bool allow_gen) {
    auto* in = app.add_option("--input,-i", input, "graph file, '-' for stdin");
    if (allow_gen) app.add_option("--gen,-g", gen, "generator spec, e.g. cycle_plus_trees:k=2,n=10,count=5")->excludes(in);
    app.add_option("--format,-f", format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
  }

  kef::GraphStream open(const kef::Caps& caps) const {
    if (!gen.empty()) return kef::generate(gen, caps);
    if (input.empty()) throw kef::InputError("no input: pass --input FILE or --gen SPEC");
    std::vector<kef::Graph> graphs;
    std::string stem = "stdin";
    if (input == "-") {
      graphs = kef::read_graphs(std::cin, kef::graph_format_from_string(format));
    } else {
      std::ifstream file(input);
      if (!file) throw kef::InputError("cannot open " + input);
      graphs = kef::read_graphs(file, kef::graph_format_from_string(format));
      stem = input.substr(input.find_last_of('/') + 1);
    }
    std::vector<kef::NamedGraph> named;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      named.push_back({graphs.size() == 1 ? stem : stem + "#" + std::to_string(i), std::move(graphs[i])});
    }
    auto pos = std::make_shared<std::size_t>(0);
    return kef::GraphStream([named = std::move(named), pos]() -> std::optional<kef::NamedGraph> {
      if (*pos >= named.size()) return std::nullopt;
      return named[(*pos)++];
    });
  }
};

/// Writes to --out if given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw kef::InputError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) out.emplace_back("all");
  return out;
}

void append_failures(const std::string& store, const kef::GraphOutcome& g) {
  if (store.empty()) return;
  std::ofstream out(store, std::ios::app);
  if (!out) throw kef::InputError("cannot append to " + store);
  kef::append_counterexample(out, {g.analysis.graph_id, g.analysis.graph, g.verdicts});
}

bool has_fail(const std::vector<kef::TheoremVerdict>& verdicts) {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const kef::TheoremVerdict& v) { return v.status == kef::Status::fail; });
}

int run_report(const Source& source, const std::string& out_path, const CapFlags& flags) {
  const kef::Caps caps = flags.resolve();
  kef::GraphStream stream = source.open(caps);
  std::vector<kef::InvariantReport> reports;
  while (auto g = stream.next()) reports.push_back(kef::make_report(kef::analyze(g->id, std::move(g->graph), caps)));
  Output out(out_path);
  if (reports.size() == 1) {
    out.stream() << kef::report_to_string(reports.front());
  } else {
    out.stream() << kef::Json(reports).dump(2) << '\n';
  }
  const bool partial = std::any_of(reports.begin(), reports.end(), [](const kef::InvariantReport& r) { return !r.complete; });
  return partial ? kCapacity : kOk;
}

int run_verify(const Source& source, const std::string& theorems, const std::string& store, bool strict, int jobs,
               const std::string& out_path, const CapFlags& flags) {
  kef::HarnessOptions options;
  options.caps = flags.resolve();
  options.theorems = split_ids(theorems);
  options.jobs = jobs;
  kef::GraphStream stream = source.open(options.caps);
  Output out(out_path);
  const kef::FuzzSummary summary = kef::run_harness(stream, options, [&](const kef::GraphOutcome& g) {
    for (const kef::TheoremVerdict& v : g.verdicts) out.stream() << kef::Json(v).dump() << '\n';
    if (has_fail(g.verdicts)) append_failures(store, g);
  });
  if (summary.any_fail()) return kTheoremFail;
  if (strict && summary.any_capacity_skip()) return kCapacity;
  return kOk;
}

struct FuzzArgs {
  bool exhaustive = false;
  bool random = false;
  int n_max = 8;
  int count = 100;
  std::uint64_t seed = 1;
  std::string kinds = "almost_bipartite_random,cycle_plus_trees,random_gnp";
  std::string theorems = "all";
  std::string store;
  std::string out;
  bool strict = false;
  int jobs = 1;
};

/// All connected graphs with 1..n_max vertices, smallest order first.
kef::GraphStream exhaustive_up_to(int n_max) {
  if (n_max < 1) throw kef::InputError("--n-max must be >= 1");
  if (n_max > 7) throw kef::CapacityError("exhaustive fuzzing is limited to n <= 7");
  auto n = std::make_shared<int>(1);
  auto current = std::make_shared<kef::GraphStream>(kef::exhaustive_graphs(1, true));
  return kef::GraphStream([=]() -> std::optional<kef::NamedGraph> {
    while (true) {
      if (auto g = current->next()) return g;
      if (++*n > n_max) return std::nullopt;
      *current = kef::exhaustive_graphs(*n, true);
    }
  });
}

int run_fuzz(const FuzzArgs& args, const CapFlags& flags) {
  if (args.exhaustive && args.random) throw kef::InputError("--exhaustive and --random are exclusive");
  kef::HarnessOptions options;
  options.caps = flags.resolve();
  options.theorems = split_ids(args.theorems);
  options.jobs = args.jobs;
  kef::GraphStream stream = args.exhaustive ? exhaustive_up_to(args.n_max)
                                            : kef::random_mix(args.n_max, args.count, args.seed, kef::parse_kinds(args.kinds), options.caps);
  const kef::FuzzSummary summary = kef::run_harness(stream, options, [&](const kef::GraphOutcome& g) {
    if (has_fail(g.verdicts)) append_failures(args.store, g);
  });
  kef::Json report = kef::Json::object();
  report["mode"] = args.exhaustive ? "exhaustive" : "random";
  report["n_max"] = args.n_max;
  if (!args.exhaustive) {
    report["count"] = args.count;
    report["seed"] = args.seed;
    report["kinds"] = args.kinds;
  }
  report["caps"] = options.caps;
  report["summary"] = kef::summary_json(summary);
  Output out(args.out);
  out.stream() << report.dump(2) << '\n';
  if (summary.any_fail()) return kTheoremFail;
  if (args.strict && summary.any_capacity_skip()) return kCapacity;
  return kOk;
}

int run_gen(const std::string& spec, const std::string& format, const std::string& out_path, const CapFlags& flags) {
  const kef::Caps caps = flags.resolve();
  kef::GraphStream stream = kef::generate(spec, caps);
  const kef::GraphFormat fmt = kef::graph_format_from_string(format);
  Output out(out_path);
  while (auto g = stream.next()) {
    if (fmt == kef::GraphFormat::edgelist) out.stream() << "# " << g->id << '\n';
    out.stream() << kef::write_graph(g->graph, fmt);
  }
  return kOk;
}

int run_replay(const std::string& store, const CapFlags& flags) {
  std::ifstream in(store);
  if (!in) throw kef::InputError("cannot open " + store);
  const kef::Caps caps = flags.resolve();
  bool reproduced = false;
  for (const kef::Counterexample& c : kef::read_counterexamples(in)) {
    for (const kef::TheoremVerdict& v : kef::replay(c, caps)) {
      std::cout << kef::Json(v).dump() << '\n';
      reproduced = reproduced || v.status == kef::Status::fail;
    }
  }
  return reproduced ? kTheoremFail : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"König-Egerváry structure of small graphs: reports, theorem checks, fuzzing"};
  app.require_subcommand(1);

  CapFlags report_caps;
  Source report_source;
  std::string report_out;
  auto* report = app.add_subcommand("report", "compute the invariant report of each input graph");
  report_source.attach(*report, true);
  report->add_option("--out,-o", report_out, "output path (default stdout)");
  report_caps.attach(*report);

  CapFlags verify_caps;
  Source verify_source;
  std::string verify_theorems = "all";
  std::string verify_store;
  std::string verify_out;
  bool verify_strict = false;
  int verify_jobs = 1;
  auto* verify = app.add_subcommand("verify", "evaluate theorem checks and print JSONL verdicts");
  verify_source.attach(*verify, true);
  verify->add_option("--theorems,-t", verify_theorems, "comma separated theorem ids, or 'all'");
  verify->add_option("--store", verify_store, "append counterexamples (JSONL) here");
  verify->add_option("--out,-o", verify_out, "output path (default stdout)");
  verify->add_option("--jobs,-j", verify_jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--strict", verify_strict, "exit 3 when any check was skipped for capacity");
  verify_caps.attach(*verify);

  CapFlags fuzz_caps;
  FuzzArgs fuzz_args;
  auto* fuzz = app.add_subcommand("fuzz", "run the theorem suite over generated graphs");
  fuzz->add_flag("--exhaustive", fuzz_args.exhaustive, "all connected graphs with n <= --n-max (max 7)");
  fuzz->add_flag("--random", fuzz_args.random, "seeded random graphs (default)");
  fuzz->add_option("--n-max", fuzz_args.n_max, "largest order generated");
  fuzz->add_option("--count", fuzz_args.count, "number of random graphs");
  fuzz->add_option("--seed", fuzz_args.seed, "random seed");
  fuzz->add_option("--kinds", fuzz_args.kinds, "comma separated random generator kinds");
  fuzz->add_option("--theorems,-t", fuzz_args.theorems, "comma separated theorem ids, or 'all'");
  fuzz->add_option("--store", fuzz_args.store, "append counterexamples (JSONL) here");
  fuzz->add_option("--out,-o", fuzz_args.out, "summary path (default stdout)");
  fuzz->add_option("--jobs,-j", fuzz_args.jobs, "worker threads")->check(CLI::PositiveNumber);
  fuzz->add_flag("--strict", fuzz_args.strict, "exit 3 when any check was skipped for capacity");
  fuzz_caps.attach(*fuzz);

  CapFlags gen_caps;
  std::string gen_spec;
  std::string gen_format = "edgelist";
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "emit generated graphs");
  gen->add_option("spec", gen_spec, "generator spec, e.g. odd_cycle:k=2 or fixture:fig11222")->required();
  gen->add_option("--format,-f", gen_format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
  gen->add_option("--out,-o", gen_out, "output path (default stdout)");
  gen_caps.attach(*gen);

  CapFlags replay_caps;
  std::string replay_store;
  auto* replay = app.add_subcommand("replay", "re-evaluate the failing checks stored in a counterexample file");
  replay->add_option("store", replay_store, "counterexample JSONL file")->required();
  replay_caps.attach(*replay);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*report) return run_report(report_source, report_out, report_caps);
    if (*verify) {
      return run_verify(verify_source, verify_theorems, verify_store, verify_strict, verify_jobs, verify_out, verify_caps);
    }
    if (*fuzz) return run_fuzz(fuzz_args, fuzz_caps);
    if (*gen) return run_gen(gen_spec, gen_format, gen_out, gen_caps);
    if (*replay) return run_replay(replay_store, replay_caps);
  } catch (const kef::CapacityError& e) {
    std::cerr << "kef: capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const kef::InputError& e) {
    std::cerr << "kef: " << e.what() << '\n';
    return kInputError;
  } catch (const kef::DomainError& e) {
    std::cerr << "kef: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
