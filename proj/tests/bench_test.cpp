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

#include "farey/bench.hpp"

#include <sstream>

#include <gtest/gtest.h>

namespace farey::bench {
namespace {

std::vector<BenchRecord> synthetic(int pow_num, int pow_den) {
  // n = 16^k and t = 1000 * 2^(4k * num / den), exact for the ratios used.
  std::vector<BenchRecord> out;
  for (int k = 1; k <= 5; ++k) {
    std::int64_t n = std::int64_t{1} << (4 * k);
    std::int64_t t = std::int64_t{1000} << (4 * k * pow_num / pow_den);
    out.push_back({"improved", n, 5, t});
  }
  return out;
}

TEST(FitExponent, RecoversSyntheticSlopes) {
  EXPECT_NEAR(fit_exponent(synthetic(1, 1)), 1.0, 1e-6);
  EXPECT_NEAR(fit_exponent(synthetic(3, 4)), 0.75, 1e-6);
  EXPECT_NEAR(fit_exponent(synthetic(1, 2)), 0.5, 1e-6);
  EXPECT_EQ(format_exponent(0.75), "0.750");
  EXPECT_EQ(format_exponent(2.0 / 3.0), "0.667");
}

TEST(FitExponent, Rejects) {
  auto few = synthetic(1, 1);
  few.resize(3);
  EXPECT_THROW(fit_exponent(few), DomainError);
  auto mixed = synthetic(1, 1);
  mixed[2].algo = "pawlewicz";
  EXPECT_THROW(fit_exponent(mixed), DomainError);
  auto zero = synthetic(1, 1);
  zero[0].median_ns = 0;
  EXPECT_THROW(fit_exponent(zero), DomainError);
  std::vector<BenchRecord> flat(4, BenchRecord{"improved", 100, 3, 50});
  EXPECT_THROW(fit_exponent(flat), DomainError);
}

TEST(RunGrid, RejectsBadGrids) {
  using seq::RankAlgo;
  const std::vector<std::int64_t> ok{100, 1000, 5000, 10000};
  EXPECT_THROW(run_grid(RankAlgo::kImproved, ok, 2), DomainError);
  const std::vector<std::int64_t> three{100, 1000, 10000};
  EXPECT_THROW(run_grid(RankAlgo::kImproved, three, 3), DomainError);
  const std::vector<std::int64_t> unsorted{100, 1000, 500, 10000};
  EXPECT_THROW(run_grid(RankAlgo::kImproved, unsorted, 3), DomainError);
  const std::vector<std::int64_t> narrow{100, 200, 400, 800};
  EXPECT_THROW(run_grid(RankAlgo::kImproved, narrow, 3), DomainError);
}

TEST(RunGrid, ProducesOneRecordPerSize) {
  const std::vector<std::int64_t> sizes{100, 1000, 4000, 10000};
  auto records = run_grid(seq::RankAlgo::kPawlewicz, sizes, 3);
  ASSERT_EQ(records.size(), 4u);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    EXPECT_EQ(records[i].algo, "pawlewicz");
    EXPECT_EQ(records[i].n, sizes[i]);
    EXPECT_EQ(records[i].reps, 3);
    EXPECT_GT(records[i].median_ns, 0);
  }
  std::ostringstream csv;
  write_csv(csv, records);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "algo,n,reps,median_ns");
  int rows = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3);
    ++rows;
  }
  EXPECT_EQ(rows, 4);
}

TEST(GoldenSlope, IsFibonacciRatio) {
  EXPECT_EQ(golden_slope().str(), "832040/1346269");
}

}  // namespace
}  // namespace farey::bench
