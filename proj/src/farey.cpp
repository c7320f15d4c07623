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

#include "farey/farey.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace farey::seq {

namespace {

// Evaluates floor(i*x) and A_v(x) for one query slope, in the narrowest
// arithmetic that cannot overflow: 64-bit when n and the denominator are
// below 2^31, 128-bit below 2^61 (every dyadic probe made by statistic()
// for n < 2^30 lands here), BigInt otherwise.
class Slope {
 public:
  Slope(const Rational& x, std::int64_t n) : x_(x) {
    constexpr std::int64_t kNarrow = std::int64_t{1} << 31;
    constexpr std::int64_t kWide = std::int64_t{1} << 61;
    if (x.den() < kNarrow && n < kNarrow) {
      width_ = Width::k64;
    } else if (x.den() < kWide && n < kWide) {
      width_ = Width::k128;
    } else {
      width_ = Width::kBig;
      return;
    }
    p_ = math::to_int128(x.num());
    q_ = math::to_int128(x.den());
    p64_ = static_cast<std::int64_t>(p_);
    q64_ = static_cast<std::int64_t>(q_);
  }

  Int128 floor_mul(std::int64_t i) const {
    switch (width_) {
      case Width::k64: return i * p64_ / q64_;
      case Width::k128: return static_cast<Int128>(i) * p_ / q_;
      case Width::kBig: break;
    }
    return math::to_int128(math::floor_div(BigInt(i) * x_.num(), x_.den()));
  }

  // x <= 1 keeps every partial sum below v(v+1)/2.
  Int128 prefix(std::int64_t v) const {
    switch (width_) {
      case Width::k64:
        return math::floor_sum_linear<std::int64_t>(v, p64_, p64_, q64_);
      case Width::k128:
        return math::floor_sum_linear<Int128>(v, p_, p_, q_);
      case Width::kBig: break;
    }
    return math::to_int128(math::floor_sum(BigInt(v), x_));
  }

 private:
  enum class Width { k64, k128, kBig };

  Rational x_;
  Width width_ = Width::kBig;
  Int128 p_ = 0;
  Int128 q_ = 1;
  std::int64_t p64_ = 0;
  std::int64_t q64_ = 1;
};

void check_query(const Rational& x, std::int64_t n) {
  if (n < 1) throw DomainError("Farey order must be >= 1, got " +
                               std::to_string(n));
  if (x.sign() < 0 || x > Rational(1)) {
    throw DomainError("rank query " + x.str() + " outside [0, 1]");
  }
}

std::vector<Int128> sieved_prefix_with(const Slope& slope, std::int64_t k) {
  DivisorTable table(k);
  std::vector<Int128> s(static_cast<std::size_t>(k) + 1, 0);
  // running = sum_{d>=2} S_{floor(i/d)}; it only moves at divisors of i,
  // where floor(i/d) steps from i/d - 1 to i/d.
  Int128 running = 0;
  Int128 a = 0;
  for (std::int64_t i = 1; i <= k; ++i) {
    for (std::uint32_t d : table.divisors(i)) {
      if (d == 1) continue;
      std::int64_t q = i / d;
      running += s[q] - s[q - 1];
    }
    a += slope.floor_mul(i);
    s[i] = a - running;
  }
  return s;
}

// S_v = A_v - sum_{d=2}^{v} S_{floor(v/d)}. Divisors d <= sqrt(v) are read
// one by one; above that, each quotient q covers a run of d. When v =
// floor(n/m), floor(v/d) = floor(n/(m d)) so large entries are read by
// divisor m*d. Pass m = 0 when v is not of that form.
Int128 grouped_term(const STable& table, const Slope& slope, std::int64_t v,
                    std::int64_t m) {
  const std::int64_t s = math::isqrt(v);
  const std::int64_t by_divisor = m > 0 ? table.divisor_limit() / m : 0;
  Int128 total = 0;
  std::int64_t d = 2;
  for (; d <= s && d <= by_divisor; ++d) total += table.at_divisor(m * d);
  for (; d <= s; ++d) total += table.at(v / d);
  const std::int64_t q_max = v / (s + 1);
  std::int64_t hi = v;  // floor(v/q) for the current q
  for (std::int64_t q = 1; q <= q_max; ++q) {
    const std::int64_t lo = std::max(v / (q + 1), s);
    total += static_cast<Int128>(hi - lo) * table.at(q);
    hi = lo;
  }
  return slope.prefix(v) - total;
}

// Fills every distinct floor above k_cut in ascending order, so each
// grouped_term only reads finished entries, and returns S_n(x).
Int128 solve(const Slope& slope, std::int64_t n, std::int64_t k_cut) {
  std::vector<Int128> dense =
      k_cut > 0 ? sieved_prefix_with(slope, k_cut) : std::vector<Int128>{0};
  if (k_cut >= n) return dense[n];
  STable table(n, k_cut, std::move(dense));
  const std::int64_t root = table.root();
  for (std::int64_t v = k_cut + 1; v <= root; ++v) {
    table.set(v, grouped_term(table, slope, v, 0));
  }
  std::int64_t prev = 0;
  Int128 prev_value = 0;
  for (std::int64_t d = n / (root + 1); d >= 1; --d) {
    const std::int64_t v = n / d;
    if (v <= k_cut) {
      prev_value = table.at(v);
    } else if (v != prev) {
      prev_value = grouped_term(table, slope, v, d);
    }
    prev = v;
    table.set_divisor(d, prev_value);
  }
  return table.at(n);
}

}  // namespace

RankAlgo parse_algo(std::string_view name) {
  if (name == "improved") return RankAlgo::kImproved;
  if (name == "pawlewicz") return RankAlgo::kPawlewicz;
  if (name == "brute") return RankAlgo::kBrute;
  throw ParseError("unknown rank algorithm '" + std::string(name) + "'");
}

std::string_view algo_name(RankAlgo algo) {
  switch (algo) {
    case RankAlgo::kImproved: return "improved";
    case RankAlgo::kPawlewicz: return "pawlewicz";
    case RankAlgo::kBrute: return "brute";
  }
  return "?";
}

DivisorTable::DivisorTable(std::int64_t limit) : limit_(limit) {
  if (limit < 1) throw DomainError("divisor table limit must be >= 1");
  if (limit > std::int64_t{0xFFFFFFFF}) {
    throw DomainError("divisor table limit exceeds 32-bit entries");
  }
  // Two passes over the same sieve: count, then place. d ascends in the
  // outer loop, so each row ends up sorted.
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(limit) + 2, 0);
  for (std::int64_t d = 1; d <= limit; ++d) {
    for (std::int64_t m = d; m <= limit; m += d) ++counts[m];
  }
  offsets_.assign(static_cast<std::size_t>(limit) + 2, 0);
  for (std::int64_t i = 1; i <= limit; ++i) {
    offsets_[i + 1] = offsets_[i] + counts[i];
  }
  entries_.resize(offsets_[limit + 1]);
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::int64_t d = 1; d <= limit; ++d) {
    for (std::int64_t m = d; m <= limit; m += d) {
      entries_[cursor[m]++] = static_cast<std::uint32_t>(d);
    }
  }
}

DivisorTable divisor_table(std::int64_t k) { return DivisorTable(k); }

STable::STable(std::int64_t n, std::int64_t k_cut, std::vector<Int128> dense)
    : n_(n), k_cut_(k_cut), root_(math::isqrt(n)), dense_(std::move(dense)) {
  if (static_cast<std::int64_t>(dense_.size()) != k_cut + 1) {
    throw InternalError("STable: dense prefix size does not match k_cut");
  }
  by_value_.assign(static_cast<std::size_t>(root_) + 1, 0);
  by_divisor_.assign(static_cast<std::size_t>(n_ / (root_ + 1)) + 1, 0);
}

void STable::set(std::int64_t q, Int128 value) {
  if (q <= k_cut_) {
    dense_[q] = value;
  } else if (q <= root_) {
    by_value_[q] = value;
  } else {
    by_divisor_[n_ / q] = value;
  }
}

std::int64_t improved_cut(std::int64_t n) {
  if (n <= 1) return 1;
  // ceil(log2 n), exact for powers of two.
  std::int64_t bits = 0;
  while ((std::int64_t{1} << bits) < n) ++bits;
  auto lg = static_cast<long double>(bits);
  long double k = std::round(
      std::pow(static_cast<long double>(n) / std::max(1.0L, lg), 2.0L / 3.0L));
  auto cut = static_cast<std::int64_t>(k);
  return std::clamp<std::int64_t>(cut, 1, n);
}

std::vector<Int128> sieved_prefix(const Rational& x, std::int64_t k) {
  check_query(x, std::max<std::int64_t>(k, 1));
  if (k < 1) throw DomainError("sieved_prefix needs k >= 1");
  return sieved_prefix_with(Slope(x, k), k);
}

BigInt rank_brute(const Rational& x, std::int64_t n) {
  check_query(x, n);
  if (n > kBruteRankLimit) {
    throw DomainError("rank_brute refuses n = " + std::to_string(n) +
                      " (oracle limit " + std::to_string(kBruteRankLimit) +
                      ")");
  }
  Slope slope(x, n);
  std::int64_t count = 0;
  for (std::int64_t b = 1; b <= n; ++b) {
    auto top = static_cast<std::int64_t>(slope.floor_mul(b));
    for (std::int64_t a = 0; a <= top; ++a) {
      if (math::gcd(a, b) == 1) ++count;
    }
  }
  return count;
}

BigInt rank_pawlewicz(const Rational& x, std::int64_t n) {
  check_query(x, n);
  return math::from_int128(solve(Slope(x, n), n, 0) + 1);
}

BigInt rank_improved(const Rational& x, std::int64_t n) {
  check_query(x, n);
  return math::from_int128(solve(Slope(x, n), n, improved_cut(n)) + 1);
}

BigInt rank(const Rational& x, std::int64_t n, RankAlgo algo) {
  switch (algo) {
    case RankAlgo::kImproved: return rank_improved(x, n);
    case RankAlgo::kPawlewicz: return rank_pawlewicz(x, n);
    case RankAlgo::kBrute: return rank_brute(x, n);
  }
  throw InternalError("unhandled rank algorithm");
}

BigInt totient_sum(std::int64_t n) {
  if (n < 1) throw DomainError("totient_sum needs n >= 1");
  return rank_improved(Rational(1), n) - 1;
}

Rational statistic(const BigInt& k, std::int64_t n) {
  if (n < 1) throw DomainError("Farey order must be >= 1");
  BigInt size = rank_improved(Rational(1), n);
  if (k < 1 || k > size) {
    throw DomainError("statistic index " + k.str() + " outside [1, " +
                      size.str() + "]");
  }
  if (k == 1) return Rational(0);
  // Invariant: rank(lo) < k <= rank(hi), i.e. the answer lies in (lo, hi].
  // Stop once hi - lo < 1/n^2; neighbours in F_n are further apart, so the
  // interval then holds exactly one member.
  Rational lo(0);
  Rational hi(1);
  const BigInt n_sq = BigInt(n) * n;
  while ((hi - lo) * Rational(n_sq) >= Rational(1)) {
    Rational mid = (lo + hi) / Rational(2);
    if (rank_improved(mid, n) >= k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return math::best_approximation_in(lo, hi, BigInt(n));
}

}  // namespace farey::seq
