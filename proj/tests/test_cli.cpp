#include "support/support.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#ifndef GTX_PATH
#error "GTX_PATH must name the gtx executable"
#endif

namespace fs = std::filesystem;
using gt::testing::asset_path;
using gt::testing::read_text;

namespace {

struct GtxResult {
  int exit = -1;
  std::string out; // stdout and stderr
};

GtxResult gtx(const std::string& args) {
  const std::string cmd = std::string(GTX_PATH) + " " + args + " 2>&1";
  GtxResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  const int status = pclose(p);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("gtx_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const {
    fs::create_directories((dir_ / name).parent_path());
    std::ofstream(dir_ / name, std::ios::binary) << text;
  }

  fs::path dir_;
};

} // namespace

TEST_F(Cli, SmallCorpusMatchesGolden) {
  const GtxResult r = gtx("transform --java " + asset_path("small") + " --seed 42 --out " + path("out.gm") + " --trace " +
                    path("out.trace") + " --report " + path("report.json"));
  ASSERT_EQ(r.exit, 0) << r.out;
  EXPECT_EQ(read_text(path("out.gm")), read_text(asset_path("small/expected.gm")));
  EXPECT_EQ(read_text(path("out.trace")), read_text(asset_path("small/expected.trace")));

  const auto report = nlohmann::json::parse(read_text(path("report.json")));
  EXPECT_EQ(report["exit"], 0);
  EXPECT_EQ(report["seed"], 42);
  // Rule counts equal the trace line counts.
  std::map<std::string, int> from_trace;
  std::istringstream trace(read_text(path("out.trace")));
  for (std::string line; std::getline(trace, line);) ++from_trace[line.substr(6, line.find(' ', 6) - 6)];
  std::map<std::string, int> from_report;
  for (const auto& [k, v] : report["rules"].items()) from_report[k] = v.get<int>();
  EXPECT_EQ(from_report, from_trace);
  for (const char* phase : {"parse", "StatesLoop", "TransitionsLoop", "ActionsLoop", "transform"})
    EXPECT_TRUE(report["phases"].contains(phase)) << phase;
}

TEST_F(Cli, DiffGoldenAgainstItself) {
  const GtxResult r = gtx("diff " + asset_path("small/expected.gm") + " " + asset_path("small/expected.gm"));
  EXPECT_EQ(r.exit, 0) << r.out;
  EXPECT_NE(r.out.find("no differences"), std::string::npos);
}

TEST_F(Cli, DiffReportsDifference) {
  std::string text = read_text(asset_path("small/expected.gm"));
  const auto at = text.find("\"hangup\"");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 8, "\"hangUp\"");
  write("changed.gm", text);
  const GtxResult r = gtx("diff " + asset_path("small/expected.gm") + " " + path("changed.gm"));
  EXPECT_EQ(r.exit, 1);
  EXPECT_NE(r.out.find("- transition Connected -> Idle [trigger \"hangup\""), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("+ transition Connected -> Idle [trigger \"hangUp\""), std::string::npos) << r.out;
}

TEST_F(Cli, OracleAgreesWithTransformOnSeed7) {
  ASSERT_EQ(gtx("generate --states 15 --methods 3 --nesting 3 --seed 7 --out " + path("java")).exit, 0);
  ASSERT_EQ(gtx("transform --java " + path("java") + " --out " + path("a.gm")).exit, 0);
  ASSERT_EQ(gtx("oracle --java " + path("java") + " --out " + path("b.gm")).exit, 0);
  const GtxResult r = gtx("diff " + path("a.gm") + " " + path("b.gm"));
  EXPECT_EQ(r.exit, 0) << r.out;
}

TEST_F(Cli, MissingStateClassIsTransformFailure) {
  write("java/A.java", "class A { void m() { new A(); } }\n");
  const GtxResult r = gtx("transform --java " + path("java") + " --out " + path("out.gm"));
  EXPECT_EQ(r.exit, 4) << r.out;
  EXPECT_FALSE(fs::exists(path("out.gm")));
}

TEST_F(Cli, ParseErrorIsInputError) {
  write("java/State.java", "abstract class State {}\n");
  write("java/B.java", "class B extends State {\n  void m() { new ; }\n}\n");
  const GtxResult r = gtx("transform --java " + path("java"));
  EXPECT_EQ(r.exit, 3);
  EXPECT_NE(r.out.find("B.java:2:"), std::string::npos) << r.out;
  EXPECT_EQ(gtx("transform --java " + path("nowhere")).exit, 3);
  EXPECT_EQ(gtx("diff " + path("missing.gm") + " " + asset_path("small/expected.gm")).exit, 3);
}

TEST_F(Cli, StepLimitHasOwnExitCode) {
  const GtxResult r = gtx("transform --java " + asset_path("small") + " --step-limit 20 --out " + path("out.gm"));
  EXPECT_EQ(r.exit, 5) << r.out;
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(gtx("").exit, 2);
  EXPECT_EQ(gtx("transform").exit, 2);
  EXPECT_EQ(gtx("transform --java a --model b").exit, 2);
  EXPECT_EQ(gtx("frobnicate").exit, 2);
}

TEST_F(Cli, CustomTransformationOverModel) {
  write("tm.mm", "metamodel tm;\nclass Node { attr n : int; ref next : Node[*]; }\n");
  write("m.gm", R"({"format":"gm/1","nodes":[{"id":1,"type":"Node","attrs":{"n":1}},{"id":2,"type":"Node"}]})");
  write("t.tfm", R"(transformation t; import tm; main Bump;
rule inc(v) { node x : Node { attr n = v; attr n = check(self < 3); } assign x.n = v + 1; }
unit counted Bump() { body inc; count -1; }
)");
  const GtxResult r = gtx("transform --metamodel " + path("tm.mm") + " --model " + path("m.gm") + " --tfm " + path("t.tfm") +
                    " --out " + path("out.gm"));
  ASSERT_EQ(r.exit, 0) << r.out;
  const auto out = nlohmann::json::parse(read_text(path("out.gm")));
  EXPECT_EQ(out["nodes"][0]["attrs"]["n"], 3);
  EXPECT_EQ(out["nodes"][1]["attrs"]["n"], 3);

  // A main unit that fails exits with 4 and leaves no output.
  write("f.tfm", "transformation f; import tm; main r;\nrule r() { node x : Node { attr n = 99; } }\n");
  EXPECT_EQ(gtx("transform --metamodel " + path("tm.mm") + " --model " + path("m.gm") + " --tfm " + path("f.tfm") +
                " --out " + path("f.gm"))
                .exit,
            4);
}

TEST_F(Cli, GenerateIsDeterministic) {
  ASSERT_EQ(gtx("generate --states 5 --methods 2 --nesting 2 --seed 9 --out " + path("a")).exit, 0);
  ASSERT_EQ(gtx("generate --states 5 --methods 2 --nesting 2 --seed 9 --out " + path("b")).exit, 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(path("a"))) {
    ++files;
    EXPECT_EQ(read_text(e.path().string()), read_text(path("b/" + e.path().filename().string())));
  }
  EXPECT_EQ(files, 8u); // State, Abstract1, S1..S5, Helper
}

TEST_F(Cli, BenchPrintsPhases) {
  const GtxResult r = gtx("bench --states 10 --methods 2 --nesting 2 --seed 1");
  ASSERT_EQ(r.exit, 0) << r.out;
  for (const char* phase : {"parse", "transform", "total"}) EXPECT_NE(r.out.find(phase), std::string::npos) << phase;
}
