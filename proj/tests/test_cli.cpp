#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cliff/cli.hpp"

using cliff::cli::json;
using cliff::cli::run_command;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  json body() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST(Cli, EvalEnvelope) {
  const auto r = run({"--no-timestamp", "eval", "--signature", "++-", "e3*e3 + T(e1*e2)"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.body();
  EXPECT_EQ(j["command"], "eval");
  EXPECT_EQ(j["results"]["value"], "-1 - e1*e2");
  EXPECT_EQ(j["config"]["signature"], "++-");
  EXPECT_EQ(j["tool_version"], "0.1.0");
  EXPECT_TRUE(j["timestamp"].is_null());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it)
    keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "config", "results", "residuals",
                                            "tool_version", "timestamp"}));
}

TEST(Cli, EvalRingsAndNorm) {
  auto r = run({"--no-timestamp", "eval", "--ring", "gf2", "--gens", "3", "a*b + b*a + c"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.body()["results"]["value"], "e3");
  r = run({"--no-timestamp", "eval", "--signature", "1,1", "--norm", "T", "2 + e1*e2"});
  ASSERT_EQ(r.code, 0) << r.err;
  // Re(T(x) x) = 4 + (-1)(e1e2)^2 = 4 + (-1)(1)
  EXPECT_EQ(r.body()["results"]["norm_form"], "3");
  r = run({"eval", "--ring", "float", "1e300*1e300"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, TimestampPresentByDefault) {
  const auto r = run({"eval", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.body()["timestamp"].is_string());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"eval", "--bogus", "1"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "eval", "1"}).code, 2);
  const auto bad = run({"eval", "e1 +"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({"eval", "--signature", "+x", "1"}).code, 1);
  EXPECT_EQ(run({"dirac", "--n", "9", "--report", "time-spectrum"}).code, 1);
  EXPECT_EQ(run({"dirac", "--n", "4", "--report", "commutators"}).code, 1);
  EXPECT_EQ(run({"hierarchy", "--max", "7"}).code, 1);
  EXPECT_EQ(run({"--config", "/nonexistent/cfg.json", "eval", "1"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Binor) {
  auto r = run({"--no-timestamp", "binor", "--gens", "3", "--op", "xand", "a", "b"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.body()["results"]["value"], "e3");
  r = run({"--no-timestamp", "binor", "--gens", "2", "--op", "full"});
  EXPECT_EQ(r.body()["results"]["value"], "1 + e1 + e2 + e1*e2");
  r = run({"--no-timestamp", "binor", "--gens", "3", "--op", "grade", "a*b*c"});
  EXPECT_EQ(r.body()["results"]["grade"], 3);
  EXPECT_EQ(run({"binor", "--gens", "3", "--op", "grade", "a + b"}).code, 1);
  EXPECT_EQ(run({"binor", "--gens", "3", "--op", "xor", "a"}).code, 1);
  r = run({"--no-timestamp", "binor", "--bool", "por", "10", "01"});
  EXPECT_EQ(r.body()["results"]["value"], "11");
}

TEST(Cli, HierarchyGolden) {
  const auto r = run({"--no-timestamp", "hierarchy", "--search"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json golden = json::parse(read_file(CLIFF_TEST_DATA_DIR "/hierarchy_search.json"));
  EXPECT_EQ(r.body(), golden);
  EXPECT_EQ(r.body()["results"]["conventions"].size(), 16u);
}

TEST(Cli, Deterministic) {
  for (const auto &args : std::vector<std::vector<std::string>>{
           {"--no-timestamp", "hierarchy", "--max", "5"},
           {"--no-timestamp", "dirac", "--n", "2", "--report", "eta-spectrum"},
           {"--no-timestamp", "dirac", "--report", "evolution", "--seed", "7"}}) {
    const auto a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, RepJsonAndCsv) {
  auto r = run({"--no-timestamp", "rep", "--signature", "+-"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.body();
  EXPECT_EQ(j["results"]["spinor_dim"], 2);
  EXPECT_EQ(j["results"]["relations_ok"], true);
  EXPECT_LE(j["residuals"]["max_anticommutator_deviation"].get<double>(), 1e-12);
  EXPECT_EQ(j["results"]["generators"][0]["pauli"], "X");
  r = run({"--format", "csv", "rep", "--signature", "+"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "generator,row,col,re,im\n1,1,0,1,0\n1,0,1,1,0\n");
}

TEST(Cli, DiracReports) {
  auto r = run({"--no-timestamp", "dirac", "--n", "2", "--report", "time-spectrum"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto clusters = r.body()["results"]["clusters"];
  ASSERT_EQ(clusters.size(), 3u);
  EXPECT_EQ(clusters[1]["multiplicity"], 128);
  r = run({"--no-timestamp", "dirac", "--n", "5", "--report", "eta-spectrum"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.body()["results"]["method"], "combinatorial");
  EXPECT_EQ(r.body()["results"]["clusters"].size(), 6u);
  r = run({"--format", "csv", "dirac", "--n", "1", "--report", "time-spectrum"});
  {
    std::istringstream csv(r.out);
    std::string header, line;
    std::getline(csv, header);
    EXPECT_EQ(header, "re,im,multiplicity");
    std::vector<double> values;
    while (std::getline(csv, line)) {
      double re = 0, im = 0;
      int mult = 0;
      ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%d", &re, &im, &mult), 3) << line;
      EXPECT_EQ(mult, 8);
      EXPECT_EQ(im, 0.0);
      values.push_back(re);
    }
    ASSERT_EQ(values.size(), 2u);
    EXPECT_NEAR(values[0], -1.0, 1e-12);
    EXPECT_NEAR(values[1], 1.0, 1e-12);
  }
  r = run({"--no-timestamp", "dirac", "--report", "commutators"});
  EXPECT_EQ(r.body()["results"]["commutators"][0]["c"][0], 2.0);
}

TEST(Cli, ConfigFilePrecedence) {
  const auto path = std::filesystem::temp_directory_path() / "cliff_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"n": 2, "report": "eta-spectrum", "tau": 2.0})";
  }
  auto r = run({"--no-timestamp", "--config", path.string(), "dirac"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.body()["config"]["n"], 2);
  EXPECT_EQ(r.body()["config"]["report"], "eta-spectrum");
  // Command-line flags win over the file.
  r = run({"--no-timestamp", "--config", path.string(), "dirac", "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.body()["config"]["n"], 1);
  EXPECT_EQ(r.body()["config"]["tau"], 2.0);
  {
    std::ofstream f(path);
    f << R"({"n": "two"})";
  }
  EXPECT_EQ(run({"--config", path.string(), "dirac"}).code, 1);
  std::filesystem::remove(path);
}
