#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kef/kef.hpp"

namespace fs = std::filesystem;
using kef::Json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun kef_cli(const std::string& args) {
  const std::string cmd = std::string(KEF_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  CliRun r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("kef-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& contents) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << contents;
    return p.string();
  }

  fs::path dir_;
};

std::vector<Json> jsonl(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(Json::parse(line));
  }
  return out;
}

const char* kC5 = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";

}  // namespace

TEST_F(Cli, ReportOnFiveCycle) {
  const CliRun r = kef_cli("report -i " + file("c5.txt", kC5));
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["alpha"], 2);
  EXPECT_EQ(j["mu"], 2);
  EXPECT_EQ(j["kappa"], 1);
  EXPECT_EQ(j["rho_v"], 5);
  EXPECT_EQ(j["schema"], "kef-report/v1");
}

TEST_F(Cli, ReportOnFixtureAndGraph6) {
  const CliRun fx = kef_cli("report -g fixture:fig2-G1");
  ASSERT_EQ(fx.code, 0);
  EXPECT_EQ(Json::parse(fx.out)["rho_v"], 4);
  const CliRun g6 = kef_cli("report -f graph6 -i " + file("c5.g6", "Dhc\n"));
  ASSERT_EQ(g6.code, 0);
  EXPECT_EQ(Json::parse(g6.out)["alpha"], 2);
  const CliRun many = kef_cli("report -g random_gnp:n=6,count=3");
  ASSERT_EQ(many.code, 0);
  EXPECT_EQ(Json::parse(many.out).size(), 3U);
}

TEST_F(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(kef_cli("report -i " + file("empty.txt", "")).code, 2);
  EXPECT_EQ(kef_cli("report -i " + file("bad.txt", "2 1\n0 x\n")).code, 2);
  EXPECT_EQ(kef_cli("report -i " + (dir_ / "missing.txt").string()).code, 2);
  EXPECT_EQ(kef_cli("verify -g fixture:fig44 -t nosuch").code, 2);
  EXPECT_EQ(kef_cli("report --bogus").code, 2);
  EXPECT_EQ(kef_cli("--help").code, 0);
}

TEST_F(Cli, CapacityLimitedReportExitsThreeWithPartialFlag) {
  const CliRun r = kef_cli("report -g odd_cycle:k=12");
  EXPECT_EQ(r.code, 3);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["complete"], false);
  EXPECT_TRUE(j["d"].is_null());
  EXPECT_EQ(kef_cli("report -g odd_cycle:k=12 --enumeration-n 30 --matching-enumeration-n 30").code, 0);
}

TEST_F(Cli, VerifyFixtureLemma) {
  const CliRun r = kef_cli("verify -g fixture:fig34-G1 -t lem13");
  ASSERT_EQ(r.code, 0);
  const std::vector<Json> lines = jsonl(r.out);
  ASSERT_EQ(lines.size(), 1U);
  EXPECT_EQ(lines[0]["status"], "pass");
  EXPECT_EQ(lines[0]["detail"]["lhs"], 1);
  EXPECT_EQ(lines[0]["detail"]["rhs"], 2);
}

TEST_F(Cli, VerifyExitCodes) {
  const CliRun all = kef_cli("verify -i " + file("c5.txt", kC5));
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(jsonl(all.out).size(), kef::all_theorem_ids().size());

  const CliRun multi = kef_cli("verify -g fixture:fig123-G2 -t th5");
  EXPECT_EQ(multi.code, 0);
  EXPECT_EQ(jsonl(multi.out).at(0)["status"], "not_applicable");

  EXPECT_EQ(kef_cli("verify -g odd_cycle:k=12 -t th5").code, 0);
  EXPECT_EQ(kef_cli("verify -g odd_cycle:k=12 -t th5 --strict").code, 3);
}

TEST_F(Cli, FailingVerifyWritesStoreAndReplays) {
  const std::string store = (dir_ / "store.jsonl").string();
  const CliRun r = kef_cli("verify -f graph6 -i " + file("k4e.g6", "C}\n") + " --store " + store);
  EXPECT_EQ(r.code, 1);
  std::ifstream in(store);
  const std::vector<kef::Counterexample> cs = kef::read_counterexamples(in);
  ASSERT_EQ(cs.size(), 1U);
  EXPECT_EQ(cs[0].graph.size(), 5);
  const CliRun rep = kef_cli("replay " + store);
  EXPECT_EQ(rep.code, 1);
  EXPECT_NE(rep.out.find("\"th9\""), std::string::npos);
}

TEST_F(Cli, FuzzExhaustiveSmall) {
  const CliRun r = kef_cli("fuzz --exhaustive --n-max 5 -t th5,th44,cor13,lem13,th18");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["summary"]["graphs"], 1 + 1 + 4 + 38 + 728);
}

TEST_F(Cli, FuzzRandomIsDeterministic) {
  const std::string args = "fuzz --random --count 100 --seed 7 --n-max 10";
  const CliRun a = kef_cli(args);
  const CliRun b = kef_cli(args + " -j 2");
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(Json::parse(a.out)["summary"]["graphs"], 100);
}

TEST_F(Cli, FuzzBeyondCapsReportsSkips) {
  const std::string args = "fuzz --random --count 6 --seed 3 --n-max 50 -t th5,th18,cor13,sandwich";
  const CliRun r = kef_cli(args);
  EXPECT_EQ(r.code, 0);
  EXPECT_GT(Json::parse(r.out)["summary"]["graphs_with_capacity_skips"].get<int>(), 0);
  EXPECT_EQ(kef_cli(args + " --strict").code, 3);
}

TEST_F(Cli, GenFormats) {
  const CliRun g6 = kef_cli("gen odd_cycle:k=2 -f graph6");
  ASSERT_EQ(g6.code, 0);
  EXPECT_EQ(g6.out, "Dhc\n");
  const CliRun el = kef_cli("gen odd_cycle:k=1");
  ASSERT_EQ(el.code, 0);
  EXPECT_NE(el.out.find("# odd_cycle-k1"), std::string::npos);
  const std::string out = (dir_ / "g.txt").string();
  EXPECT_EQ(kef_cli("gen fixture:fig11222 -o " + out).code, 0);
  EXPECT_TRUE(fs::file_size(out) > 0);
  EXPECT_EQ(kef_cli("gen exhaustive:n=8").code, 3);
}
