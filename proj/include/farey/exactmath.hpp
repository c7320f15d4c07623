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

// Exact integer and rational arithmetic, plus the floor-sum primitive
//
//   A_n(x) = sum_{b=1}^{n} floor(b * x)
//
// evaluated with the Euclid-style exchange recursion in O(lg) steps.

#ifndef FAREY_EXACTMATH_HPP_
#define FAREY_EXACTMATH_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "farey/errors.hpp"

namespace farey::math {

using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Int128 = __int128;

BigInt gcd(const BigInt& a, const BigInt& b);
std::int64_t gcd(std::int64_t a, std::int64_t b);

// floor(a / b) and ceil(a / b) for b > 0, any sign of a.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

// Largest r with r*r <= v; smallest r with r*r >= v. v >= 0.
BigInt isqrt(const BigInt& v);
BigInt ceil_sqrt(const BigInt& v);
std::int64_t isqrt(std::int64_t v);

// Nearest integer to v^(1/k), k >= 1. Ties and near-ties may round either
// way; callers only rely on it up to a constant factor.
std::uint64_t nearest_root(unsigned __int128 v, unsigned k);

// Conversions between BigInt and the 128-bit fast path. to_int128 throws
// DomainError when the value does not fit.
Int128 to_int128(const BigInt& v);
BigInt from_int128(Int128 v);
std::string to_string(Int128 v);

// Normalized fraction num/den with den >= 1 and gcd(|num|, den) == 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit
  Rational(std::int64_t n) : num_(n), den_(1) {}       // NOLINT: implicit
  Rational(int n) : num_(n), den_(1) {}                // NOLINT: implicit
  Rational(BigInt num, BigInt den);

  // Strict `P/Q` or `P` text; optional sign on P only, ASCII digits.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  BigInt floor() const { return floor_div(num_, den_); }
  BigInt ceil() const { return ceil_div(num_, den_); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  struct Normalized {};
  Rational(BigInt num, BigInt den, Normalized)
      : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// sum_{i=0}^{n-1} floor((a*i + b) / m) for n >= 0, m > 0 and any signs of
// a and b. Each round reduces (a, m) like one Euclid step, so the loop runs
// O(lg m) times. Int must be a signed type wide enough for a*n + b and for
// the partial sums; floor_sum() below picks the width.
template <typename Int>
Int floor_sum_linear(Int n, Int a, Int b, Int m) {
  Int ans = 0;
  if (n <= 0) return ans;
  // Shift a and b into [0, m).
  auto split = [&m](Int& v) {
    Int q = v / m;
    Int r = v % m;
    if (r < 0) {
      r += m;
      q -= 1;
    }
    v = r;
    return q;
  };
  Int qa = split(a);
  Int qb = split(b);
  ans += qa * (n * (n - 1) / 2) + qb * n;
  while (true) {
    if (a >= m) {
      ans += (n - 1) * n / 2 * (a / m);
      a %= m;
    }
    if (b >= m) {
      ans += n * (b / m);
      b %= m;
    }
    Int y_max = a * n + b;
    if (y_max < m) break;
    n = y_max / m;
    b = y_max % m;
    std::swap(m, a);
  }
  return ans;
}

// A_n(x) = sum_{b=1}^{n} floor(b * x). Exact for any n >= 0 and any
// non-negative x; uses 128-bit arithmetic when operand sizes allow and
// falls back to BigInt otherwise. Negative x or n throws DomainError.
BigInt floor_sum(const BigInt& n, const Rational& x);

// Simplest fraction (smallest denominator, then smallest numerator) in the
// half-open interval (lo, hi], found by continued-fraction descent. Throws
// NotFoundError if its denominator exceeds qmax or the interval is empty.
// When hi - lo < 1/qmax^2 the result is the unique fraction with
// denominator <= qmax in the interval.
Rational best_approximation_in(const Rational& lo, const Rational& hi,
                               const BigInt& qmax);

}  // namespace farey::math

#endif  // FAREY_EXACTMATH_HPP_
