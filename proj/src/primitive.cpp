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

#include "farey/primitive.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace farey::prim {

namespace {

std::int64_t checked_diameter(const Polygon& p) {
  if (p.diameter() > kMaxDiameter) {
    throw DomainError("polygon diameter " + p.diameter().str() +
                      " exceeds the supported maximum " +
                      std::to_string(kMaxDiameter));
  }
  return static_cast<std::int64_t>(p.diameter());
}

struct Box {
  std::int64_t x0, x1, y0, y1;
};

Box lattice_box(const Polygon& p) {
  const auto& v = p.vertices();
  math::Rational min_x = v[0].x, max_x = v[0].x;
  math::Rational min_y = v[0].y, max_y = v[0].y;
  for (const auto& q : v) {
    min_x = std::min(min_x, q.x);
    max_x = std::max(max_x, q.x);
    min_y = std::min(min_y, q.y);
    max_y = std::max(max_y, q.y);
  }
  return {static_cast<std::int64_t>(min_x.ceil()),
          static_cast<std::int64_t>(max_x.floor()),
          static_cast<std::int64_t>(min_y.ceil()),
          static_cast<std::int64_t>(max_y.floor())};
}

bool primitive(std::int64_t x, std::int64_t y) {
  return std::gcd(x, y) == 1;  // std::gcd takes |x|, |y|; gcd(0, 0) = 0
}

}  // namespace

std::int64_t default_tau(std::int64_t diameter) {
  using U128 = unsigned __int128;
  U128 d = static_cast<U128>(diameter);
  auto tau = static_cast<std::int64_t>(math::nearest_root(d * d * d * d, 7));
  return std::clamp<std::int64_t>(tau, 1, std::max<std::int64_t>(diameter, 1));
}

std::int64_t split_point(std::int64_t diameter, std::int64_t i) {
  using U128 = unsigned __int128;
  U128 v = static_cast<U128>(diameter) * static_cast<U128>(diameter) *
           static_cast<U128>(i);
  return std::max<std::int64_t>(
      1, static_cast<std::int64_t>(math::nearest_root(v, 3)));
}

std::int64_t phi_value(const Polygon& p, std::int64_t x, std::int64_t y,
                       std::int64_t diameter) {
  if (x == 0 && y == 0) throw DomainError("phi_value: the origin has no phi");
  if (!p.contains(x, y)) {
    throw DomainError("phi_value: point (" + std::to_string(x) + ", " +
                      std::to_string(y) + ") is not in the polygon");
  }
  // (x, y) in P/i  <=>  (i x, i y) in P. In at i = 1, out at i = D + 2.
  std::int64_t in = 1;
  std::int64_t out = diameter + 2;
  while (out - in > 1) {
    std::int64_t mid = in + (out - in) / 2;
    if (p.contains(mid * x, mid * y)) {
      in = mid;
    } else {
      out = mid;
    }
  }
  return out;
}

ImplicitTail precompute_tail(const Polygon& p, std::int64_t tau) {
  const std::int64_t diameter = checked_diameter(p);
  if (tau < 1) throw DomainError("tau must be >= 1");
  ImplicitTail tail;
  tail.tau = tau;
  const Polygon shrunk = p.scale_down(BigInt(tau));
  const Box box = lattice_box(shrunk);
  for (std::int64_t x = box.x0; x <= box.x1; ++x) {
    for (std::int64_t y = box.y0; y <= box.y1; ++y) {
      if (!primitive(x, y) || !shrunk.contains(x, y)) continue;
      tail.phis.push_back(phi_value(p, x, y, diameter));
    }
  }
  std::sort(tail.phis.begin(), tail.phis.end(), std::greater<>());
  return tail;
}

std::int64_t tail_query(const ImplicitTail& tail, std::int64_t i) {
  if (i < tail.tau) {
    throw DomainError("tail_query: scale " + std::to_string(i) +
                      " is below tau = " + std::to_string(tail.tau));
  }
  auto first_not_above = std::partition_point(
      tail.phis.begin(), tail.phis.end(),
      [i](std::int64_t phi) { return phi > i; });
  return first_not_above - tail.phis.begin();
}

std::int64_t dp_term(std::int64_t i, const ImplicitTail& tail,
                     const PrimitiveRun& run, const Polygon& p,
                     bool grouping) {
  if (i < 1) throw DomainError("dp_term: scale must be >= 1");
  const std::int64_t diameter = run.diameter;
  const std::int64_t tau = tail.tau;
  // S(P/j) = 0 once j > D + 1.
  const std::int64_t d_max = (diameter + 1) / i;
  std::int64_t sum = 0;
  std::int64_t d = 2;
  for (; d <= d_max && i * d < tau; ++d) {
    std::int64_t j = i * d;
    if (j >= static_cast<std::int64_t>(run.small.size()) || run.small[j] < 0) {
      throw InternalError("dp_term(" + std::to_string(i) +
                          "): S(P/" + std::to_string(j) + ") not computed");
    }
    sum += run.small[j];
  }
  if (grouping) {
    const std::int64_t delta = split_point(diameter, i);
    for (; d <= d_max && i * d < delta; ++d) sum += tail_query(tail, i * d);
    // Runs of equal tail value: find where the value first drops, add
    // value * run length, continue from there.
    while (d <= d_max) {
      const std::int64_t value = tail_query(tail, i * d);
      if (value == 0) break;
      std::int64_t same = d;        // tail(i * same) == value
      std::int64_t lower = d_max + 1;  // tail(i * lower) < value (it is 0)
      while (lower - same > 1) {
        std::int64_t mid = same + (lower - same) / 2;
        if (tail_query(tail, i * mid) < value) {
          lower = mid;
        } else {
          same = mid;
        }
      }
      sum += value * (lower - d);
      d = lower;
    }
  } else {
    for (; d <= d_max; ++d) sum += tail_query(tail, i * d);
  }
  const BigInt lattice = geom::count_lattice(p.scale_down(BigInt(i)));
  return static_cast<std::int64_t>(lattice) - 1 - sum;
}

BigInt primitive_count(const Polygon& p, const PrimitiveOptions& opts) {
  const std::int64_t diameter = checked_diameter(p);
  const std::int64_t tau = opts.tau.value_or(default_tau(diameter));
  if (tau < 1 || tau > diameter + 1) {
    throw DomainError("tau = " + std::to_string(tau) + " outside [1, " +
                      std::to_string(diameter + 1) + "]");
  }
  const ImplicitTail tail = precompute_tail(p, tau);
  PrimitiveRun run;
  run.diameter = diameter;
  run.tau = tau;
  run.small.assign(static_cast<std::size_t>(tau), -1);
  for (std::int64_t i = tau - 1; i >= 1; --i) {
    run.small[i] = dp_term(i, tail, run, p, opts.grouping);
  }
  return tau == 1 ? tail_query(tail, 1) : run.small[1];
}

BigInt primitive_brute(const Polygon& p) {
  if (p.diameter() > kBruteDiameterLimit) {
    throw DomainError("primitive_brute refuses diameter " +
                      p.diameter().str());
  }
  const Box box = lattice_box(p);
  std::int64_t count = 0;
  for (std::int64_t x = box.x0; x <= box.x1; ++x) {
    for (std::int64_t y = box.y0; y <= box.y1; ++y) {
      if (p.contains(x, y) && primitive(x, y)) ++count;
    }
  }
  return count;
}

}  // namespace farey::prim
