// Copyright 2026 The farey-rank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "farey/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace farey::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "farey");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_poly(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() /
              ("farey_cli_test_" + name + ".poly");
  std::ofstream(path) << body;
  return path.string();
}

const char kSquare[] = "# side 4\n-2 -2\n2 -2\n2 2\n-2 2\n";

TEST(Cli, SequenceExamples) {
  EXPECT_EQ(call({"rank", "--n", "4", "--x", "1/2"}).out, "4\n");
  EXPECT_EQ(call({"rank", "--n", "10", "--x", "1", "--algo", "pawlewicz"}).out,
            "33\n");
  EXPECT_EQ(call({"rank", "--n", "5", "--x", "1/1", "--algo", "brute"}).out,
            "11\n");
  EXPECT_EQ(call({"stat", "--n", "4", "--k", "4"}).out, "1/2\n");
  EXPECT_EQ(call({"stat", "--n", "5", "--k", "1"}).out, "0/1\n");
  EXPECT_EQ(call({"totsum", "--n", "100"}).out, "3044\n");
  // Symmetry: Rank(1/2) = (|F_n| + 1) / 2 and |F_n| = 1 + totsum(n).
  long long total = std::stoll(call({"totsum", "--n", "1000000"}).out);
  EXPECT_EQ(std::stoll(call({"rank", "--n", "1000000", "--x", "1/2"}).out),
            (total + 2) / 2);
}

TEST(Cli, PolygonExamples) {
  std::string sq = write_poly("square", kSquare);
  EXPECT_EQ(call({"lattice", "--poly", sq}).out, "25\n");
  EXPECT_EQ(call({"primitive", "--poly", sq}).out, "16\n");
  EXPECT_EQ(call({"primitive", "--poly", sq, "--brute"}).out, "16\n");
  EXPECT_EQ(call({"primitive", "--poly", sq, "--tau", "1"}).out, "16\n");
  std::string tri = write_poly("triangle", "0 0\n4 0\n4 2\n");
  EXPECT_EQ(call({"primitive", "--poly", tri}).out, "4\n");
  EXPECT_EQ(call({"lattice", "--poly", tri}).out, "9\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"rank", "--n", "4"}).code, kUsage);
  EXPECT_EQ(call({"rank", "--n", "4", "--x", "1/2", "--algo", "fast"}).code,
            kUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kUsage);
  EXPECT_EQ(call({"--help"}).code, kOk);

  Result bad_x = call({"rank", "--n", "4", "--x", "0.5"});
  EXPECT_EQ(bad_x.code, kInvalidInput);
  EXPECT_NE(bad_x.err.find("invalid input"), std::string::npos);
  EXPECT_TRUE(bad_x.out.empty());
  EXPECT_EQ(call({"rank", "--n", "4", "--x", "3/2"}).code, kInvalidInput);
  EXPECT_EQ(call({"rank", "--n", "0", "--x", "1/2"}).code, kInvalidInput);
  EXPECT_EQ(call({"stat", "--n", "4", "--k", "8"}).code, kInvalidInput);
  EXPECT_EQ(call({"stat", "--n", "4", "--k", "0"}).code, kInvalidInput);
  EXPECT_EQ(call({"rank", "--n", "20000", "--x", "1/2", "--algo", "brute"})
                .code,
            kInvalidInput);

  std::string outside = write_poly("outside", "1 1\n3 1\n3 3\n");
  Result r = call({"primitive", "--poly", outside});
  EXPECT_EQ(r.code, kInvalidInput);
  EXPECT_NE(r.err.find("origin"), std::string::npos);
  std::string garbage = write_poly("garbage", "1 2\nthree 4\n");
  Result g = call({"lattice", "--poly", garbage});
  EXPECT_EQ(g.code, kInvalidInput);
  EXPECT_NE(g.err.find("line 2"), std::string::npos);
  EXPECT_EQ(call({"lattice", "--poly", "/nonexistent.poly"}).code,
            kInvalidInput);
  std::string sq = write_poly("square_tau", kSquare);
  EXPECT_EQ(call({"primitive", "--poly", sq, "--tau", "99"}).code,
            kInvalidInput);
}

TEST(Cli, BruteMatchesDefaultAndIsDeterministic) {
  for (const char* x : {"0/1", "1/3", "5/7", "1/1"}) {
    for (const char* n : {"1", "17", "300"}) {
      Result a = call({"rank", "--n", n, "--x", x});
      Result b = call({"rank", "--n", n, "--x", x, "--algo", "brute"});
      Result c = call({"rank", "--n", n, "--x", x, "--algo", "pawlewicz"});
      EXPECT_EQ(a.out, b.out);
      EXPECT_EQ(a.out, c.out);
      EXPECT_EQ(a.out, call({"rank", "--n", n, "--x", x}).out);
    }
  }
}

TEST(Cli, Selftest) {
  Result r = call({"selftest", "--seed", "7"});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(r.out, call({"selftest", "--seed", "7"}).out);
  EXPECT_EQ(call({"selftest", "--scale", "huge"}).code, kUsage);
}

TEST(Cli, BenchWritesCsvAndFit) {
  Result r = call({"bench", "--algo", "improved", "--sizes",
                   "100,1000,4000,10000", "--reps", "3", "--fit"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.rfind("algo,n,reps,median_ns\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  EXPECT_EQ(r.err.rfind("exponent improved ", 0), 0u);
  EXPECT_EQ(call({"bench", "--sizes", "100,10"}).code, kInvalidInput);
  EXPECT_EQ(call({"bench", "--sizes", "1,x"}).code, kInvalidInput);
}

}  // namespace
}  // namespace farey::cli
