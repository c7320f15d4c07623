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

// Rank and order-statistic queries on the Farey sequence F_n.
//
// Conventions used throughout:
//   S_n(x)     = #{ a/b : 1 <= a <= b <= n, gcd(a, b) = 1, a/b <= x }
//   Rank(x, n) = S_n(x) + 1      (the extra 1 is 0/1)
//
// S obeys S_n(x) = A_n(x) - sum_{d>=2} S_{floor(n/d)}(x), where A_n(x) is
// math::floor_sum. Only the values S_{floor(n/d)} ever appear, since
// floor(floor(n/d1)/d2) = floor(n/(d1*d2)).

#ifndef FAREY_FAREY_HPP_
#define FAREY_FAREY_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "farey/exactmath.hpp"

namespace farey::seq {

using math::BigInt;
using math::Int128;
using math::Rational;

enum class RankAlgo { kImproved, kPawlewicz, kBrute };

RankAlgo parse_algo(std::string_view name);
std::string_view algo_name(RankAlgo algo);

// Largest n accepted by rank_brute.
inline constexpr std::int64_t kBruteRankLimit = 10'000;

// Divisor lists for 1..limit in compressed-row form; built by adding d to
// every multiple of d, so divisors(i) comes out sorted.
class DivisorTable {
 public:
  explicit DivisorTable(std::int64_t limit);

  std::int64_t limit() const { return limit_; }
  std::span<const std::uint32_t> divisors(std::int64_t i) const {
    return {entries_.data() + offsets_[i], entries_.data() + offsets_[i + 1]};
  }
  std::size_t total_entries() const { return entries_.size(); }

 private:
  std::int64_t limit_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> entries_;
};

DivisorTable divisor_table(std::int64_t k);

// Memo of S_q(x) for every q that the recursion can touch: a dense prefix
// q <= k_cut, then the distinct floors floor(n/d) above it. Floors at most
// sqrt(n) are indexed by value, larger ones by d = n / q.
class STable {
 public:
  STable(std::int64_t n, std::int64_t k_cut, std::vector<Int128> dense);

  std::int64_t n() const { return n_; }
  std::int64_t k_cut() const { return k_cut_; }
  std::int64_t root() const { return root_; }

  // q must be <= k_cut or a value floor(n/d). Every divisor slot is
  // filled, so reads by divisor need no canonical index.
  Int128 at(std::int64_t q) const {
    if (q <= k_cut_) return dense_[q];
    if (q <= root_) return by_value_[q];
    return by_divisor_[n_ / q];
  }
  void set(std::int64_t q, Int128 value);

  // Entry for floor(n/i), 1 <= i <= divisor_limit(), read by divisor.
  std::int64_t divisor_limit() const {
    return static_cast<std::int64_t>(by_divisor_.size()) - 1;
  }
  Int128 at_divisor(std::int64_t i) const { return by_divisor_[i]; }
  void set_divisor(std::int64_t i, Int128 value) { by_divisor_[i] = value; }

 private:
  std::int64_t n_;
  std::int64_t k_cut_;
  std::int64_t root_;
  std::vector<Int128> dense_;       // [0..k_cut], dense_[0] = 0
  std::vector<Int128> by_value_;    // [0..root]
  std::vector<Int128> by_divisor_;  // [0..n/(root+1)]
};

// Dense-prefix size for rank_improved:
// round((n / max(1, ceil(log2 n)))^(2/3)), clamped to [1, n].
std::int64_t improved_cut(std::int64_t n);

// S_1(x) .. S_k(x) (index 0 holds S_0 = 0) in O(k lg k).
std::vector<Int128> sieved_prefix(const Rational& x, std::int64_t k);

// Rank(x, n) = |F_n ∩ [0, x]|. All tiers agree exactly.
BigInt rank_brute(const Rational& x, std::int64_t n);
BigInt rank_pawlewicz(const Rational& x, std::int64_t n);
BigInt rank_improved(const Rational& x, std::int64_t n);
BigInt rank(const Rational& x, std::int64_t n,
            RankAlgo algo = RankAlgo::kImproved);

// sum_{b<=n} phi(b) = |F_n| - 1.
BigInt totient_sum(std::int64_t n);

// k-th smallest member of F_n, 1-based.
Rational statistic(const BigInt& k, std::int64_t n);

}  // namespace farey::seq

#endif  // FAREY_FAREY_HPP_
