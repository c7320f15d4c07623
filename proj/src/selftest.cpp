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

#include <functional>
#include <ostream>
#include <random>
#include <string>

#include "farey/cli.hpp"
#include "farey/errors.hpp"
#include "farey/exactmath.hpp"
#include "farey/farey.hpp"
#include "farey/generators.hpp"
#include "farey/geometry.hpp"
#include "farey/primitive.hpp"

namespace farey::cli {

namespace {

using math::BigInt;
using math::Rational;

struct Limits {
  std::int64_t farey_order;     // tier agreement over n, x in F_order
  std::int64_t roundtrip_order;
  int polygons;
  std::int64_t lattice_diameter;
  std::int64_t primitive_diameter;
};

Limits limits_for(SelftestScale scale) {
  if (scale == SelftestScale::kMedium) return {120, 50, 120, 150, 1000};
  return {40, 20, 30, 60, 200};
}

// Members of F_n in increasing order, by the next-term recurrence.
std::vector<Rational> farey_members(std::int64_t n) {
  std::vector<Rational> out{Rational(0)};
  std::int64_t a = 0, b = 1, c = 1, d = n;
  while (c <= n) {
    std::int64_t k = (n + b) / d;
    std::int64_t e = k * c - a, f = k * d - b;
    a = c;
    b = d;
    c = e;
    d = f;
    out.emplace_back(BigInt(a), BigInt(b));
  }
  return out;
}

// Returns an empty string on success, else a description of the mismatch.
using Suite = std::function<std::string(std::mt19937_64&, const Limits&)>;

std::string floor_sum_suite(std::mt19937_64& rng, const Limits&) {
  std::uniform_int_distribution<std::int64_t> n_dist(0, 1000);
  std::uniform_int_distribution<std::int64_t> v_dist(1, 1'000'000);
  for (int t = 0; t < 200; ++t) {
    std::int64_t n = n_dist(rng);
    Rational x(BigInt(v_dist(rng)), BigInt(v_dist(rng)));
    BigInt expect = 0;
    for (std::int64_t b = 1; b <= n; ++b) expect += (x * Rational(b)).floor();
    if (math::floor_sum(n, x) != expect) {
      return "floor_sum(" + std::to_string(n) + ", " + x.str() + ")";
    }
  }
  return {};
}

std::string rank_tiers_suite(std::mt19937_64&, const Limits& lim) {
  auto members = farey_members(lim.farey_order);
  for (std::int64_t n = 1; n <= lim.farey_order; ++n) {
    for (const Rational& x : members) {
      BigInt brute = seq::rank_brute(x, n);
      if (seq::rank_pawlewicz(x, n) != brute ||
          seq::rank_improved(x, n) != brute) {
        return "rank(" + x.str() + ", " + std::to_string(n) + ")";
      }
    }
  }
  return {};
}

std::string roundtrip_suite(std::mt19937_64&, const Limits& lim) {
  for (std::int64_t n = 1; n <= lim.roundtrip_order; ++n) {
    auto members = farey_members(n);
    for (std::size_t i = 0; i < members.size(); ++i) {
      BigInt k(i + 1);
      if (seq::statistic(k, n) != members[i] ||
          seq::rank_improved(members[i], n) != k) {
        return "statistic(" + k.str() + ", " + std::to_string(n) + ")";
      }
    }
  }
  return {};
}

std::string lattice_suite(std::mt19937_64& rng, const Limits& lim) {
  for (int t = 0; t < lim.polygons; ++t) {
    geom::Polygon p = geom::random_polygon(rng, lim.lattice_diameter);
    if (geom::count_lattice(p) != geom::count_lattice_brute(p)) {
      return "count_lattice on polygon #" + std::to_string(t);
    }
  }
  return {};
}

std::string primitive_suite(std::mt19937_64& rng, const Limits& lim) {
  for (int t = 0; t < lim.polygons; ++t) {
    geom::Polygon p = geom::random_polygon(rng, lim.primitive_diameter);
    BigInt brute = prim::primitive_brute(p);
    prim::PrimitiveOptions ungrouped;
    ungrouped.grouping = false;
    if (prim::primitive_count(p) != brute ||
        prim::primitive_count(p, ungrouped) != brute) {
      return "primitive_count on polygon #" + std::to_string(t);
    }
  }
  return {};
}

std::string triangle_suite(std::mt19937_64&, const Limits& lim) {
  const Rational xs[] = {Rational(BigInt(1), BigInt(3)),
                         Rational(BigInt(1), BigInt(2)),
                         Rational(BigInt(2), BigInt(3)), Rational(1)};
  for (std::int64_t n = 1; n <= lim.roundtrip_order; ++n) {
    for (const Rational& x : xs) {
      auto tri = geom::farey_triangle(n, x);
      if (prim::primitive_count(tri) != seq::rank_improved(x, n)) {
        return "triangle(" + std::to_string(n) + ", " + x.str() + ")";
      }
    }
  }
  return {};
}

}  // namespace

int run_selftest(std::uint64_t seed, SelftestScale scale, std::ostream& out) {
  const Limits lim = limits_for(scale);
  const std::pair<const char*, Suite> suites[] = {
      {"floor_sum-vs-loop", floor_sum_suite},
      {"rank-tiers", rank_tiers_suite},
      {"statistic-roundtrip", roundtrip_suite},
      {"lattice-vs-scan", lattice_suite},
      {"primitive-vs-scan", primitive_suite},
      {"farey-triangle", triangle_suite},
  };
  int failed = 0;
  int passed = 0;
  for (const auto& [name, suite] : suites) {
    std::mt19937_64 rng(seed);
    std::string problem;
    try {
      problem = suite(rng, lim);
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (problem.empty()) {
      ++passed;
      out << "PASS " << name << "\n";
    } else {
      ++failed;
      out << "FAIL " << name << ": " << problem << "\n";
    }
  }
  out << "selftest seed=" << seed << ": " << passed << " passed, " << failed
      << " failed\n";
  return failed == 0 ? kOk : kInternal;
}

}  // namespace farey::cli
