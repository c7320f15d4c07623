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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace farey::bench {

math::Rational golden_slope() {
  return math::Rational(math::BigInt(832040), math::BigInt(1346269));
}

std::vector<BenchRecord> run_grid(seq::RankAlgo algo,
                                  std::span<const std::int64_t> sizes,
                                  int reps) {
  if (reps < 3) {
    throw DomainError("bench needs at least 3 repetitions, got " +
                      std::to_string(reps));
  }
  if (sizes.size() < 4) throw DomainError("bench needs at least 4 sizes");
  if (!std::is_sorted(sizes.begin(), sizes.end()) ||
      std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end()) {
    throw DomainError("bench sizes must be strictly ascending");
  }
  if (sizes.front() < 1 || sizes.back() < 100 * sizes.front()) {
    throw DomainError("bench sizes must span at least two decades");
  }
  const math::Rational x = golden_slope();
  std::vector<BenchRecord> out;
  math::BigInt sink = 0;
  for (std::int64_t n : sizes) {
    sink += seq::rank(x, n, algo);  // warm-up, discarded
    std::vector<std::int64_t> times;
    for (int r = 0; r < reps; ++r) {
      auto start = std::chrono::steady_clock::now();
      sink += seq::rank(x, n, algo);
      auto stop = std::chrono::steady_clock::now();
      times.push_back(
          std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
              .count());
    }
    std::nth_element(times.begin(), times.begin() + reps / 2, times.end());
    out.push_back({std::string(seq::algo_name(algo)), n, reps,
                   times[reps / 2]});
  }
  if (sink.sign() < 0) throw InternalError("negative rank");
  return out;
}

double fit_exponent(std::span<const BenchRecord> records) {
  if (records.size() < 4) {
    throw DomainError("fit_exponent needs at least 4 records, got " +
                      std::to_string(records.size()));
  }
  for (const auto& r : records) {
    if (r.algo != records.front().algo) {
      throw DomainError("fit_exponent: records mix algorithms '" +
                        records.front().algo + "' and '" + r.algo + "'");
    }
    if (r.n < 1 || r.median_ns < 1) {
      throw DomainError("fit_exponent: sizes and times must be positive");
    }
  }
  const auto m = static_cast<double>(records.size());
  double sx = 0, sy = 0;
  for (const auto& r : records) {
    sx += std::log(static_cast<double>(r.n));
    sy += std::log(static_cast<double>(r.median_ns));
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxy = 0, sxx = 0;
  for (const auto& r : records) {
    double dx = std::log(static_cast<double>(r.n)) - mx;
    double dy = std::log(static_cast<double>(r.median_ns)) - my;
    sxy += dx * dy;
    sxx += dx * dx;
  }
  if (sxx == 0) throw DomainError("fit_exponent: all sizes are equal");
  return sxy / sxx;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "algo,n,reps,median_ns\n";
  for (const auto& r : records) {
    out << r.algo << ',' << r.n << ',' << r.reps << ',' << r.median_ns << '\n';
  }
}

std::string format_exponent(double slope) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", slope);
  return buf;
}

}  // namespace farey::bench
