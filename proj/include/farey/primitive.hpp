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

// Counting primitive lattice points (gcd(x, y) = 1, origin excluded) in a
// star-shaped polygon P through
//
//   S(P) = A(P) - 1 - sum_{d>=2} S(P/d).
//
// Scales i >= tau are answered from an implicit tail: every primitive point
// of P/tau tagged with phi = min{ i : point not in P/i }, so that
// S(P/i) = #{ phi > i }. Scales below tau are filled by a dynamic program
// from tau - 1 down to 1; inside each term, tail values at scales >= delta
// are summed in runs of equal value.

#ifndef FAREY_PRIMITIVE_HPP_
#define FAREY_PRIMITIVE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "farey/geometry.hpp"

namespace farey::prim {

using geom::Polygon;
using math::BigInt;

// Counts are held in int64, which covers (2D + 1)^2 for D up to this.
inline constexpr std::int64_t kMaxDiameter = 1'000'000'000;
inline constexpr std::int64_t kBruteDiameterLimit = 5000;

struct ImplicitTail {
  std::int64_t tau = 1;
  std::vector<std::int64_t> phis;  // non-increasing
};

struct PrimitiveRun {
  std::int64_t diameter = 1;
  std::int64_t tau = 1;
  // small[i] = S(P/i) for 1 <= i < tau; -1 until filled.
  std::vector<std::int64_t> small;
};

struct PrimitiveOptions {
  std::optional<std::int64_t> tau;  // default: round(D^(4/7))
  bool grouping = true;             // false: sum tail terms one by one
};

// round(D^(4/7)) clamped to [1, D].
std::int64_t default_tau(std::int64_t diameter);
// round(D^(2/3) * i^(1/3)), at least 1.
std::int64_t split_point(std::int64_t diameter, std::int64_t i);

// min{ i >= 1 : (x, y) not in P/i }, by binary search over [1, D + 2].
// The point must be a non-origin point of P.
std::int64_t phi_value(const Polygon& p, std::int64_t x, std::int64_t y,
                       std::int64_t diameter);

ImplicitTail precompute_tail(const Polygon& p, std::int64_t tau);

// S(P/i) for i >= tail.tau.
std::int64_t tail_query(const ImplicitTail& tail, std::int64_t i);

// S(P/i), reading run.small[j] for i < j < tau and the tail beyond.
std::int64_t dp_term(std::int64_t i, const ImplicitTail& tail,
                     const PrimitiveRun& run, const Polygon& p,
                     bool grouping = true);

BigInt primitive_count(const Polygon& p, const PrimitiveOptions& opts = {});

// Bounding-box scan with contains() and a gcd filter; oracle only.
BigInt primitive_brute(const Polygon& p);

}  // namespace farey::prim

#endif  // FAREY_PRIMITIVE_HPP_
