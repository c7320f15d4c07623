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

#include "farey/exactmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <ostream>

namespace farey::math {

BigInt gcd(const BigInt& a, const BigInt& b) {
  if (a.is_zero()) return abs(b);
  if (b.is_zero()) return abs(a);
  return boost::multiprecision::gcd(a, b);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

BigInt isqrt(const BigInt& v) {
  if (v.sign() < 0) throw DomainError("isqrt of a negative value");
  return boost::multiprecision::sqrt(v);
}

BigInt ceil_sqrt(const BigInt& v) {
  BigInt r = isqrt(v);
  if (r * r < v) ++r;
  return r;
}

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) throw DomainError("isqrt of a negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && static_cast<Int128>(r) * r > v) --r;
  while (static_cast<Int128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

namespace {

using U128 = unsigned __int128;

// min(base^k, 2^127), saturating.
U128 saturating_pow(U128 base, unsigned k) {
  constexpr U128 kCap = U128{1} << 127;
  U128 out = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (base != 0 && out > kCap / base) return kCap;
    out *= base;
  }
  return out;
}

}  // namespace

std::uint64_t nearest_root(U128 v, unsigned k) {
  if (k == 0) throw DomainError("zeroth root");
  if (v == 0) return 0;
  auto guess = static_cast<std::uint64_t>(
      std::pow(static_cast<long double>(v), 1.0L / static_cast<long double>(k)));
  std::uint64_t r = guess;
  while (r > 0 && saturating_pow(r, k) > v) --r;
  while (saturating_pow(r + 1, k) <= v) ++r;
  // r = floor root; step up when v is closer to (r+1)^k.
  U128 below = v - saturating_pow(r, k);
  U128 above = saturating_pow(r + 1, k) - v;
  return above < below ? r + 1 : r;
}

Int128 to_int128(const BigInt& v) {
  static const BigInt kMax = (BigInt(1) << 127) - 1;
  static const BigInt kMin = -(BigInt(1) << 127);
  if (v > kMax || v < kMin) throw DomainError("value exceeds 128 bits");
  BigInt mag = abs(v);
  auto lo = static_cast<std::uint64_t>(mag & BigInt(~std::uint64_t{0}));
  auto hi = static_cast<std::uint64_t>(mag >> 64);
  U128 u = (static_cast<U128>(hi) << 64) | lo;
  return v.sign() < 0 ? -static_cast<Int128>(u) : static_cast<Int128>(u);
}

BigInt from_int128(Int128 v) {
  bool neg = v < 0;
  U128 u = neg ? -static_cast<U128>(v) : static_cast<U128>(v);
  BigInt out = BigInt(static_cast<std::uint64_t>(u >> 64));
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-out) : out;
}

std::string to_string(Int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  U128 u = neg ? -static_cast<U128>(v) : static_cast<U128>(v);
  std::string s;
  while (u != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(BigInt num, BigInt den) {
  if (den.is_zero()) throw DomainError("zero denominator");
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = gcd(num, den);
  if (g != 1) {
    num /= g;
    den /= g;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto bad = [&text]() {
    return ParseError("malformed fraction '" + std::string(text) + "'");
  };
  std::string_view p = text;
  std::string_view q = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    p = text.substr(0, slash);
    q = text.substr(slash + 1);
  }
  bool negative = false;
  if (!p.empty() && (p.front() == '-' || p.front() == '+')) {
    negative = p.front() == '-';
    p.remove_prefix(1);
  }
  if (!all_digits(p) || !all_digits(q)) throw bad();
  BigInt num{std::string(p)};
  BigInt den{std::string(q)};
  if (den.is_zero()) throw ParseError("zero denominator in '" +
                                      std::string(text) + "'");
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
  return num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_.is_zero()) throw DomainError("division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational operator-(const Rational& a) {
  return Rational(-a.num_, a.den_, Rational::Normalized{});
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

// ---------------------------------------------------------------------------
// floor_sum

BigInt floor_sum(const BigInt& n, const Rational& x) {
  if (n.sign() < 0) throw DomainError("floor_sum: negative n");
  if (x.sign() < 0) throw DomainError("floor_sum: negative slope");
  if (n.is_zero() || x.sign() == 0) return 0;
  const BigInt& p = x.num();
  const BigInt& q = x.den();
  // sum_{b=1}^{n} floor(b p / q) = sum_{i=0}^{n-1} floor((p i + p) / q).
  // In the 128-bit path every a*n + b stays below n*q and every partial
  // sum below the final result, which is at most n(n+1)/2 * ceil(x).
  std::size_t bn = boost::multiprecision::msb(n) + 1;
  std::size_t bp = boost::multiprecision::msb(p) + 1;
  std::size_t bq = boost::multiprecision::msb(q) + 1;
  std::size_t result_bits = 2 * bn + (bp > bq ? bp - bq + 1 : 0) + 1;
  if (bn + bq <= 124 && result_bits <= 125) {
    Int128 r = floor_sum_linear<Int128>(to_int128(n), to_int128(p),
                                        to_int128(p), to_int128(q));
    return from_int128(r);
  }
  return floor_sum_linear<BigInt>(n, p, p, q);
}

// ---------------------------------------------------------------------------
// best_approximation_in

namespace {

// Simplest fraction in the interval with the given endpoint closedness.
// An absent upper bound means +infinity. The interval must be non-empty.
Rational simplest_between(const Rational& lo, bool lo_closed,
                          const std::optional<Rational>& hi, bool hi_closed) {
  BigInt candidate = lo_closed ? lo.ceil() : lo.floor() + 1;
  if (!hi || Rational(candidate) < *hi ||
      (hi_closed && Rational(candidate) == *hi)) {
    return Rational(candidate);
  }
  // No integer inside, so the interval sits within [fl, fl + 1].
  BigInt fl = lo.floor();
  Rational lo_frac = lo - Rational(fl);
  Rational hi_frac = *hi - Rational(fl);
  // t in (lo_frac, hi_frac] <=> 1/t in [1/hi_frac, 1/lo_frac).
  std::optional<Rational> inv_hi;
  if (lo_frac.sign() != 0) inv_hi = Rational(1) / lo_frac;
  Rational inner =
      simplest_between(Rational(1) / hi_frac, hi_closed, inv_hi, lo_closed);
  return Rational(fl) + Rational(1) / inner;
}

}  // namespace

Rational best_approximation_in(const Rational& lo, const Rational& hi,
                               const BigInt& qmax) {
  if (!(lo < hi)) {
    throw NotFoundError("best_approximation_in: empty interval (" + lo.str() +
                        ", " + hi.str() + "]");
  }
  Rational best = simplest_between(lo, false, hi, true);
  if (best.den() > qmax) {
    throw NotFoundError("no fraction with denominator <= " + qmax.str() +
                        " in (" + lo.str() + ", " + hi.str() + "]");
  }
  return best;
}

}  // namespace farey::math
