// Copyright 2026 The cvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cvqe/instance_io.hpp"
#include "cvqe/oracles.hpp"
#include "cvqe/report_io.hpp"

namespace fs = std::filesystem;

namespace cvqe {
namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cvqe_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = std::string(CVQE_CLI_PATH) + " " + args + " > " + (dir_ / "stdout.txt").string() +
                            " 2> " + (dir_ / "stderr.txt").string();
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, GenWritesFeasibleInstances) {
  ASSERT_EQ(run("gen -n 2 -m 1 --seed 7 --count 4 --out " + path("a")), 0);
  for (int s = 7; s < 11; ++s) {
    auto doc = parse_instance_document(read_text_file(path("a/instance_" + std::to_string(s) + ".json")));
    EXPECT_EQ(doc.instance.n(), 2);
    EXPECT_EQ(doc.meta.seed, static_cast<std::uint64_t>(s));
    EXPECT_TRUE(stochastic_feasible(doc.instance));
  }
  ASSERT_EQ(run("gen -n 2 -m 1 --seed 7 --count 4 --out " + path("b")), 0);
  for (int s = 7; s < 11; ++s) {
    const auto name = "/instance_" + std::to_string(s) + ".json";
    EXPECT_EQ(read_text_file(path("a") + name), read_text_file(path("b") + name));
  }
}

TEST_F(Cli, GenUnconstrained) {
  ASSERT_EQ(run("gen -n 3 -m 0 --seed 1 --out " + path("g")), 0);
  const auto text = read_text_file(path("g/instance_1.json"));
  EXPECT_EQ(serialize_instance(parse_instance(text), parse_instance_document(text).meta), text);
}

TEST_F(Cli, SolveUnconstrainedMatchesBruteForce) {
  ASSERT_EQ(run("gen -n 3 -m 0 --seed 2 --out " + path("g")), 0);
  ASSERT_EQ(run("solve " + path("g/instance_2.json") + " --restarts 4 --out " + path("s")), 0);
  ASSERT_EQ(run("oracle " + path("g/instance_2.json") + " --mode brute --out " + path("s")), 0);
  auto q = parse_report(read_text_file(path("s/instance_2.report.json")));
  auto b = parse_report(read_text_file(path("s/instance_2.brute.json")));
  EXPECT_NEAR(q.objective, b.objective, 1e-4);
  EXPECT_EQ(b.solver, "brute");
}

TEST_F(Cli, TruncatedSolveExitsTwo) {
  ASSERT_EQ(run("gen -n 2 -m 1 --seed 7 --out " + path("g")), 0);
  EXPECT_EQ(run("solve " + path("g/instance_7.json") + " --max-outer 1 --out " + path("s")), 2);
  std::ifstream csv(path("s/instance_7.trace.csv"));
  std::string header, row;
  std::getline(csv, header);
  EXPECT_EQ(header, "iter,lambda_1,F0,F1,inner_evals");
  ASSERT_TRUE(std::getline(csv, row));
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), 4);
  auto rep = parse_report(read_text_file(path("s/instance_7.report.json")));
  EXPECT_FALSE(rep.converged);
}

TEST_F(Cli, OracleInfeasibleExitsThree) {
  write_text_file(path("inf.json"), serialize_instance(QcqpInstance(QuadraticForm::zero(2),
                                                                    {QuadraticForm::constant(2, 1.0)})));
  EXPECT_EQ(run("oracle " + path("inf.json") + " --mode lp --out " + path("o")), 3);
  auto rep = parse_report(read_text_file(path("o/inf.lp.json")));
  EXPECT_EQ(rep.status, "infeasible");
}

TEST_F(Cli, ErrorsExitOne) {
  write_text_file(path("bad.json"), R"({"n":2,"objective":{"A":[1,2],"c":[0,0],"d":0},"constraints":[]})");
  EXPECT_EQ(run("solve " + path("bad.json") + " --out " + path("s")), 1);
  EXPECT_EQ(run("solve " + path("missing.json")), 1);
  EXPECT_EQ(run("bench table7"), 1);
  EXPECT_EQ(run("frobnicate"), 1);
  EXPECT_EQ(run("oracle " + path("bad.json") + " --mode simplex"), 1);
}

TEST_F(Cli, BenchTable1Layout) {
  ASSERT_EQ(run("bench table1 --max-outer 5 --out " + path("b")), 0);
  const auto md = read_text_file(path("b/table1.md"));
  EXPECT_NE(md.find("| Found PMF | Exact PMF | Found dual | Exact dual |"), std::string::npos);
  std::stringstream csv(read_text_file(path("b/table1.csv")));
  std::string line;
  int rows = -1;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 4);
}

}  // namespace
}  // namespace cvqe
