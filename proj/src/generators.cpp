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

#include "farey/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

namespace farey::geom {

namespace {

constexpr int kMaxAttempts = 1000;

// A random rational close to v with a small denominator.
Rational jitter_rational(std::mt19937_64& rng, double v) {
  std::uniform_int_distribution<int> den_dist(1, 8);
  int den = den_dist(rng);
  auto num = static_cast<std::int64_t>(std::llround(v * den));
  return Rational(BigInt(num), BigInt(den));
}

double random_radius(std::mt19937_64& rng, std::int64_t max_diameter) {
  // Log-uniform so that small and large polygons are both common.
  const double hi = std::max(0.75, static_cast<double>(max_diameter) / 2.0);
  std::uniform_real_distribution<double> u(std::log(0.75), std::log(hi));
  return std::exp(u(rng));
}

std::optional<Polygon> try_create(std::vector<Point> vertices,
                                  std::int64_t max_diameter) {
  if (validate(vertices)) return std::nullopt;
  Polygon p = Polygon::create(std::move(vertices));
  if (p.diameter() > max_diameter) return std::nullopt;
  return p;
}

std::vector<double> sorted_angles(std::mt19937_64& rng, int count,
                                  double start, double span) {
  std::uniform_real_distribution<double> u(0.0, span);
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(start + u(rng));
  std::sort(out.begin(), out.end());
  return out;
}

bool max_gap_below_pi(const std::vector<double>& angles) {
  for (std::size_t i = 0; i < angles.size(); ++i) {
    double next = i + 1 < angles.size()
                      ? angles[i + 1]
                      : angles[0] + 2.0 * std::numbers::pi;
    if (next - angles[i] >= std::numbers::pi * 0.98) return false;
  }
  return true;
}

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain, strictly convex output in CCW order.
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

Polygon random_star_polygon(std::mt19937_64& rng, std::int64_t max_diameter) {
  std::uniform_int_distribution<int> count_dist(3, 10);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const double radius = random_radius(rng, max_diameter);
    const int count = count_dist(rng);
    auto angles = sorted_angles(rng, count, 0.0, 2.0 * std::numbers::pi);
    if (!max_gap_below_pi(angles)) continue;
    std::uniform_real_distribution<double> r_dist(0.35 * radius, radius);
    std::vector<Point> vertices;
    for (double a : angles) {
      double r = r_dist(rng);
      vertices.push_back({jitter_rational(rng, r * std::cos(a)),
                          jitter_rational(rng, r * std::sin(a))});
    }
    if (auto p = try_create(std::move(vertices), max_diameter)) return *p;
  }
  throw InternalError("random_star_polygon: no valid polygon generated");
}

Polygon random_convex_polygon(std::mt19937_64& rng,
                              std::int64_t max_diameter) {
  std::uniform_int_distribution<int> count_dist(3, 14);
  std::uniform_real_distribution<double> angle_dist(0.0,
                                                    2.0 * std::numbers::pi);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const double radius = random_radius(rng, max_diameter);
    std::uniform_real_distribution<double> r_dist(0.5 * radius, radius);
    std::vector<Point> pts;
    const int count = count_dist(rng);
    for (int i = 0; i < count; ++i) {
      double a = angle_dist(rng);
      double r = r_dist(rng);
      pts.push_back({jitter_rational(rng, r * std::cos(a)),
                     jitter_rational(rng, r * std::sin(a))});
    }
    if (auto p = try_create(convex_hull(std::move(pts)), max_diameter)) {
      return *p;
    }
  }
  throw InternalError("random_convex_polygon: no valid polygon generated");
}

Polygon random_fan_polygon(std::mt19937_64& rng, std::int64_t max_diameter) {
  std::uniform_int_distribution<int> count_dist(2, 7);
  std::uniform_real_distribution<double> start_dist(0.0,
                                                    2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> span_dist(0.2, 0.95 * std::numbers::pi);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const double radius = random_radius(rng, max_diameter);
    auto angles =
        sorted_angles(rng, count_dist(rng), start_dist(rng), span_dist(rng));
    std::uniform_real_distribution<double> r_dist(0.4 * radius, radius);
    std::vector<Point> vertices{{Rational(0), Rational(0)}};
    for (double a : angles) {
      double r = r_dist(rng);
      vertices.push_back({jitter_rational(rng, r * std::cos(a)),
                          jitter_rational(rng, r * std::sin(a))});
    }
    if (auto p = try_create(std::move(vertices), max_diameter)) return *p;
  }
  throw InternalError("random_fan_polygon: no valid polygon generated");
}

Polygon random_polygon(std::mt19937_64& rng, std::int64_t max_diameter) {
  std::uniform_int_distribution<int> pick(0, 2);
  switch (pick(rng)) {
    case 0: return random_star_polygon(rng, max_diameter);
    case 1: return random_convex_polygon(rng, max_diameter);
    default: return random_fan_polygon(rng, max_diameter);
  }
}

Polygon farey_triangle(std::int64_t n, const Rational& x) {
  const Rational side(BigInt{n});
  return Polygon::create({{Rational(0), Rational(0)},
                          {side, Rational(0)},
                          {side, x * side}});
}

Polygon centered_square(const Rational& h) {
  return Polygon::create({{-h, -h}, {h, -h}, {h, h}, {-h, h}});
}

}  // namespace farey::geom
