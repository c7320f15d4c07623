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

// Wall-clock timing of the rank tiers over a size grid, and a log-log
// least-squares fit of the runtime exponent.

#ifndef FAREY_BENCH_HPP_
#define FAREY_BENCH_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "farey/farey.hpp"

namespace farey::bench {

struct BenchRecord {
  std::string algo;
  std::int64_t n = 0;
  int reps = 0;
  std::int64_t median_ns = 0;
};

// F_30 / F_31 = 832040/1346269, a convergent of 1/phi: every partial
// quotient is 1, so the floor-sum recursion runs its full depth.
math::Rational golden_slope();

// Times rank(golden_slope(), n) for each n: one discarded warm-up call,
// then `reps` timed calls, median reported. Requires reps >= 3 and at least
// four ascending sizes spanning two decades.
std::vector<BenchRecord> run_grid(seq::RankAlgo algo,
                                  std::span<const std::int64_t> sizes,
                                  int reps);

// Least-squares slope of log(median_ns) against log(n). Needs at least four
// records, all of one algorithm.
double fit_exponent(std::span<const BenchRecord> records);

// `algo,n,reps,median_ns` header plus one row per record.
void write_csv(std::ostream& out, std::span<const BenchRecord> records);

std::string format_exponent(double slope);

}  // namespace farey::bench

#endif  // FAREY_BENCH_HPP_
