// Copyright 2026 The Dualheap Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the installed CLI binary end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#ifndef DUALHEAP_CLI
#error "DUALHEAP_CLI must name the CLI executable"
#endif

namespace {

struct CliResult {
  int status;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(DUALHEAP_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TEST(Cli, SelectReportsValueAndCounters) {
  const CliResult r = run("select --values 5,3,9,1,7 --k 3 --show-array");
  ASSERT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::string header, row, array;
  std::getline(lines, header);
  std::getline(lines, row);
  std::getline(lines, array);
  EXPECT_EQ(header.rfind("algo,swap_strategy,presplit,n,k,value,", 0), 0u);
  EXPECT_EQ(row.rfind("dhselect,tree,1,5,3,5,", 0), 0u);
  EXPECT_NE(row.find(",true"), std::string::npos);
  EXPECT_EQ(array.size(), 9u);
}

TEST(Cli, SelectBaselines) {
  CliResult r = run("select --n 101 --dist reverse --algo quickselect --pivot first");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("quickselect,first,0,101,51,51,"), std::string::npos);
  r = run("select --n 101 --dist organpipe --algo quickselect-mom --k 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("quickselect-mom,mom,0,101,1,1,"), std::string::npos);
}

TEST(Cli, SortPrintsSortedValues) {
  const CliResult r = run("sort --values 3,1,2,2,9,0 --swap root --presplit 0");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0 1 2 2 3 9\n");
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run("select --swap diagonal").status, 1);
  EXPECT_EQ(run("select --values 1,2 --k 3").status, 1);
  EXPECT_EQ(run("bench --dist gaussian --trials 1").status, 1);
  EXPECT_EQ(run("bench --workers 3 --trials 1").status, 1);
  EXPECT_EQ(run("worstcase --max-n 10").status, 1);
  EXPECT_EQ(run("fit /nonexistent.csv").status, 1);
  EXPECT_EQ(run("").status, 1);
}

TEST(Cli, BenchIsByteIdenticalAcrossRuns) {
  const std::string a = ::testing::TempDir() + "cli_a.csv";
  const std::string b = ::testing::TempDir() + "cli_b.csv";
  const std::string flags =
      "bench --sizes 255,1023 --algo dhselect,quickselect --swap tree,root "
      "--presplit 0,1 --pivot first,random --dist random,fewvalues --trials 3 "
      "--seed 5 --out ";
  ASSERT_EQ(run(flags + a).status, 0);
  ASSERT_EQ(run(flags + b).status, 0);
  const std::string ca = slurp(a);
  EXPECT_FALSE(ca.empty());
  EXPECT_EQ(ca, slurp(b));
}

TEST(Cli, BenchZeroTrialsEmitsHeaderOnly) {
  const CliResult r = run("bench --trials 0");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "algo,swap_strategy,presplit,n,k,dist,seed,trial,compares_construct,"
            "moves_construct,compares_swap,moves_swap,compares_total,moves_total,"
            "elapsed_ns,correct\n");
}

TEST(Cli, WorstCaseAndFit) {
  CliResult r = run("worstcase --mode exhaustive --max-n 3");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("n,instances_tested,max_compares_swap,argmax_k,argmax_permutation\n", 0), 0u);
  EXPECT_NE(r.out.find("\n3,18,"), std::string::npos);

  const std::string csv = ::testing::TempDir() + "cli_fit.csv";
  ASSERT_EQ(run("bench --sizes 255,1023,4095 --swap root --trials 5 --out " + csv).status, 0);
  r = run("fit " + csv + " --metric compares_swap --algo dhselect --swap root");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("metric=compares_swap sizes=3 slope=", 0), 0u);
}

}  // namespace
