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

// Test-only oracles. Nothing here calls into the library's algorithms; each
// helper is a direct transcription of a definition.

#ifndef FAREY_TESTS_ORACLES_HPP_
#define FAREY_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace farey::testing {

// phi(0..n) by the classic multiplicative sieve.
inline std::vector<std::int64_t> phi_sieve(std::int64_t n) {
  std::vector<std::int64_t> phi(static_cast<std::size_t>(n) + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (std::int64_t p = 2; p <= n; ++p) {
    if (phi[p] != p) continue;  // not prime
    for (std::int64_t m = p; m <= n; m += p) phi[m] -= phi[m] / p;
  }
  return phi;
}

inline std::int64_t totient_sum_oracle(std::int64_t n) {
  auto phi = phi_sieve(n);
  return std::accumulate(phi.begin() + 1, phi.end(), std::int64_t{0});
}

// sum_{b=1}^{n} floor(b p / q), p >= 0, q > 0, by the loop.
inline std::int64_t floor_sum_loop(std::int64_t n, std::int64_t p,
                                   std::int64_t q) {
  std::int64_t s = 0;
  for (std::int64_t b = 1; b <= n; ++b) {
    s += static_cast<std::int64_t>(static_cast<__int128>(b) * p / q);
  }
  return s;
}

// Members of F_n as (a, b) pairs, sorted, by double loop + gcd filter.
inline std::vector<std::pair<std::int64_t, std::int64_t>> farey_enumerate(
    std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t b = 1; b <= n; ++b) {
    for (std::int64_t a = 0; a <= b; ++a) {
      if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    return static_cast<__int128>(l.first) * r.second <
           static_cast<__int128>(r.first) * l.second;
  });
  return out;
}

// #{ members of `sorted` (from farey_enumerate) that are <= p/q }.
inline std::int64_t count_not_above(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& sorted,
    std::int64_t p, std::int64_t q) {
  auto it = std::partition_point(sorted.begin(), sorted.end(),
                                 [p, q](const auto& f) {
                                   return static_cast<__int128>(f.first) * q <=
                                          static_cast<__int128>(p) * f.second;
                                 });
  return it - sorted.begin();
}

}  // namespace farey::testing

#endif  // FAREY_TESTS_ORACLES_HPP_
