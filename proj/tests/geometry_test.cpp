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

#include "farey/geometry.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "farey/generators.hpp"

namespace farey::geom {
namespace {

Rational frac(std::int64_t p, std::int64_t q) {
  return Rational(BigInt(p), BigInt(q));
}

Point pt(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

std::vector<Point> pts(std::initializer_list<std::pair<int, int>> xy) {
  std::vector<Point> out;
  for (auto [x, y] : xy) out.push_back(pt(x, y));
  return out;
}

std::optional<ViolationKind> kind_of(std::vector<Point> v) {
  auto violation = validate(v);
  if (!violation) return std::nullopt;
  return violation->kind;
}

Polygon square2() { return centered_square(Rational(2)); }

Polygon triangle42() { return Polygon::create(pts({{0, 0}, {4, 0}, {4, 2}})); }

TEST(Validate, AcceptsExamples) {
  EXPECT_EQ(kind_of(pts({{-2, -2}, {2, -2}, {2, 2}, {-2, 2}})), std::nullopt);
  EXPECT_EQ(kind_of(pts({{0, 0}, {4, 0}, {4, 2}})), std::nullopt);
  // Collinear middle vertex is fine.
  EXPECT_EQ(kind_of(pts({{-2, -2}, {0, -2}, {2, -2}, {0, 2}})), std::nullopt);
}

TEST(Validate, NamesEachViolation) {
  EXPECT_EQ(kind_of(pts({{0, 0}, {1, 0}})), ViolationKind::kTooFewVertices);
  EXPECT_EQ(kind_of(pts({{-1, -1}, {1, -1}, {1, -1}, {0, 1}})),
            ViolationKind::kRepeatedVertex);
  EXPECT_EQ(kind_of(pts({{-1, 0}, {0, 0}, {1, 0}})), ViolationKind::kZeroArea);
  EXPECT_EQ(kind_of(pts({{-2, -2}, {3, 3}, {3, -2}, {-2, 2}})),
            ViolationKind::kSelfIntersection);
  // Spike folding back along the previous edge.
  EXPECT_EQ(kind_of(pts({{-2, -2}, {2, -2}, {2, 2}, {2, 0}, {-2, 2}})),
            ViolationKind::kSelfIntersection);
  EXPECT_EQ(kind_of(pts({{1, 1}, {3, 1}, {3, 3}})),
            ViolationKind::kOriginOutside);
  // Square with a slot cut down from the top, right of the origin.
  EXPECT_EQ(kind_of(pts({{-4, -4}, {4, -4}, {4, 4}, {2, 4}, {2, -2},
                         {1, -2}, {1, 4}, {-4, 4}})),
            ViolationKind::kNotStarShaped);
}

TEST(Validate, ReversesClockwiseInput) {
  auto v = pts({{-2, 2}, {2, 2}, {2, -2}, {-2, -2}});
  ASSERT_EQ(validate(v), std::nullopt);
  EXPECT_EQ(v.front(), pt(-2, -2));
  Polygon p = Polygon::create(pts({{-2, 2}, {2, 2}, {2, -2}, {-2, -2}}));
  EXPECT_EQ(count_lattice(p), 25);
  EXPECT_THROW(Polygon::create(pts({{1, 1}, {3, 1}, {3, 3}})),
               ValidationError);
}

TEST(Contains, Examples) {
  Polygon sq = square2();
  EXPECT_TRUE(contains(sq, pt(0, 0)));
  EXPECT_TRUE(contains(sq, pt(2, 2)));
  EXPECT_TRUE(contains(sq, pt(2, 0)));
  EXPECT_TRUE(contains(sq, {frac(-3, 2), frac(2, 1)}));
  EXPECT_FALSE(contains(sq, pt(3, 0)));
  EXPECT_FALSE(contains(sq, {frac(2001, 1000), Rational(0)}));
  EXPECT_TRUE(sq.contains(BigInt(-2), BigInt(1)));
  EXPECT_FALSE(sq.contains(std::int64_t{-3}, std::int64_t{1}));
}

double to_d(const Rational& r) {
  return static_cast<double>(r.num()) / static_cast<double>(r.den());
}

// Float ray caster for the cross-check.
bool float_contains(const Polygon& p, double x, double y) {
  bool inside = false;
  const auto& v = p.vertices();
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    double xi = to_d(v[i].x), yi = to_d(v[i].y);
    double xj = to_d(v[j].x), yj = to_d(v[j].y);
    if ((yi > y) != (yj > y) && x < (xj - xi) * (y - yi) / (yj - yi) + xi) {
      inside = !inside;
    }
  }
  return inside;
}

double boundary_distance(const Polygon& p, double x, double y) {
  double best = 1e300;
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    double ax = to_d(a.x), ay = to_d(a.y), bx = to_d(b.x), by = to_d(b.y);
    double dx = bx - ax, dy = by - ay;
    double t = ((x - ax) * dx + (y - ay) * dy) / (dx * dx + dy * dy);
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, std::hypot(ax + t * dx - x, ay + t * dy - y));
  }
  return best;
}

TEST(Contains, AgreesWithFloatRayCasterAwayFromBoundary) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    Polygon p = random_polygon(rng, 40);
    std::uniform_real_distribution<double> u(-25.0, 25.0);
    for (int s = 0; s < 200; ++s) {
      double x = u(rng), y = u(rng);
      if (boundary_distance(p, x, y) <= 1e-3) continue;
      // Exact rationals for the same query point.
      Point q{Rational(BigInt(std::llround(x * 4096)), BigInt(4096)),
              Rational(BigInt(std::llround(y * 4096)), BigInt(4096))};
      double qx = std::llround(x * 4096) / 4096.0;
      double qy = std::llround(y * 4096) / 4096.0;
      EXPECT_EQ(contains(p, q), float_contains(p, qx, qy));
    }
  }
}

TEST(ScaleDown, Examples) {
  Polygon sq = square2();
  EXPECT_EQ(scale_down(sq, 1).vertices(), sq.vertices());
  EXPECT_EQ(scale_down(sq, 2).vertices(),
            centered_square(Rational(1)).vertices());
  EXPECT_THROW(scale_down(sq, 0), DomainError);
  Polygon p = triangle42();
  for (std::int64_t d = 1; d <= 12; ++d) {
    // Distances scale linearly; the ceiling may drop by at most one extra.
    BigInt dd = diameter_bound(scale_down(p, d));
    BigInt expect = math::ceil_div(diameter_bound(p), BigInt(d));
    EXPECT_LE(dd, expect);
    EXPECT_GE(dd + 1, expect);
  }
}

TEST(ScaleDown, MembershipMatchesMultipliedPoint) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    Polygon p = random_polygon(rng, 60);
    for (std::int64_t d : {2, 3, 7}) {
      Polygon s = scale_down(p, d);
      for (std::int64_t x = -10; x <= 10; ++x) {
        for (std::int64_t y = -10; y <= 10; ++y) {
          ASSERT_EQ(s.contains(x, y), p.contains(x * d, y * d));
        }
      }
    }
  }
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter_bound(square2()), 6);    // ceil(sqrt(32))
  EXPECT_EQ(diameter_bound(triangle42()), 5);  // ceil(sqrt(20))
  Polygon tiny = Polygon::create({{frac(-1, 3), frac(-1, 3)},
                                  {frac(1, 3), frac(-1, 3)},
                                  {Rational(0), frac(1, 3)}});
  EXPECT_EQ(diameter_bound(tiny), 1);
  EXPECT_EQ(diameter_bound(centered_square(Rational(3))), 9);  // sqrt(72)
}

TEST(CountLattice, Examples) {
  EXPECT_EQ(count_lattice(square2()), 25);
  EXPECT_EQ(count_lattice(triangle42()), 9);
  Polygon tiny = Polygon::create({{frac(-2, 5), frac(-2, 5)},
                                  {frac(2, 5), frac(-1, 5)},
                                  {frac(1, 7), frac(3, 7)}});
  EXPECT_EQ(count_lattice(tiny), 1);
}

TEST(CountLattice, MatchesBoundingBoxScan) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 150; ++t) {
    Polygon p = random_polygon(rng, 120);
    ASSERT_EQ(count_lattice(p), count_lattice_brute(p)) << "polygon " << t;
  }
}

TEST(CountLattice, HugeDenominators) {
  const Rational tiny(BigInt(1), BigInt(1) << 80);
  EXPECT_EQ(count_lattice(centered_square(frac(5, 2) + tiny)), 25);
  EXPECT_EQ(count_lattice(centered_square(Rational(3) - tiny)), 25);
  EXPECT_EQ(count_lattice(centered_square(Rational(3))), 49);
  Polygon skew = Polygon::create({{Rational(-7) + tiny, Rational(-3)},
                                  {Rational(9), frac(-11, 3) - tiny},
                                  {frac(17, 5), Rational(8) + tiny},
                                  {Rational(-4), Rational(5) - tiny}});
  EXPECT_EQ(count_lattice(skew), count_lattice_brute(skew));
}

TEST(CountLattice, NestedScalesAreMonotone) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    Polygon p = random_polygon(rng, 150);
    BigInt prev = count_lattice(p);
    const auto d_end = static_cast<std::int64_t>(p.diameter()) + 1;
    for (std::int64_t d = 2; d <= d_end; ++d) {
      BigInt cur = count_lattice(scale_down(p, d));
      ASSERT_LE(cur, prev);
      prev = cur;
    }
    EXPECT_EQ(prev, 1);  // P/(D+1) holds only the origin
  }
}

TEST(ColumnIntervals, SplitsAroundNotches) {
  // Notch at the origin: the top of column 2 lies on the edge y = x.
  Polygon p = Polygon::create(
      pts({{-3, -3}, {3, -3}, {3, 3}, {0, 0}, {-3, 3}}));
  auto runs = column_intervals(p, 2);
  ASSERT_EQ(runs.size(), 1u);
  EXPECT_EQ(runs[0].first, Rational(-3));
  EXPECT_EQ(runs[0].second, Rational(2));
  Polygon w = Polygon::create(pts({{-4, -4}, {4, -4}, {4, 4}, {0, 1},
                                   {-4, 4}}));
  auto edge = column_intervals(w, 4);
  ASSERT_EQ(edge.size(), 1u);
  EXPECT_EQ(edge[0], YInterval(Rational(-4), Rational(4)));
  EXPECT_TRUE(column_intervals(w, 5).empty());
}

TEST(ParsePolygon, Format) {
  auto v = parse_polygon_text(
      "# square\n-2/1 -2\n2 -2/1\n\n  # indented comment\n2 2\r\n-4/2 6/3\n");
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[3], pt(-2, 2));
  EXPECT_EQ(Polygon::create(v).vertices().size(), 4u);
  EXPECT_THROW(parse_polygon_text("0.5 1\n"), ParseError);
  EXPECT_THROW(parse_polygon_text("NaN 1\n"), ParseError);
  EXPECT_THROW(parse_polygon_text("1 2 3\n"), ParseError);
  EXPECT_THROW(parse_polygon_text("1\n"), ParseError);
  EXPECT_THROW(parse_polygon_text("1/0 2\n"), ParseError);
  EXPECT_THROW(load_polygon("/nonexistent/file.poly"), ParseError);
}

}  // namespace
}  // namespace farey::geom
