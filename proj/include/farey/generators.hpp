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

// Seeded random polygons that always pass validation. Used by the selftest
// subcommand, the test suites and the benchmarks.

#ifndef FAREY_GENERATORS_HPP_
#define FAREY_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "farey/geometry.hpp"

namespace farey::geom {

// Vertices at sorted random angles (no gap of pi or more) and random radii
// in an annulus; star-shaped about the origin, often non-convex.
Polygon random_star_polygon(std::mt19937_64& rng, std::int64_t max_diameter);

// Convex hull of random rational points in an annulus around the origin.
Polygon random_convex_polygon(std::mt19937_64& rng,
                              std::int64_t max_diameter);

// The origin is a vertex; the other vertices fan out over less than pi.
Polygon random_fan_polygon(std::mt19937_64& rng, std::int64_t max_diameter);

// One of the three shapes above, picked at random.
Polygon random_polygon(std::mt19937_64& rng, std::int64_t max_diameter);

// Triangle (0,0), (n,0), (n, x*n): its primitive points are the nonzero
// members of F_n up to x, as (b, a) for a/b.
Polygon farey_triangle(std::int64_t n, const Rational& x);

// Axis-aligned square with corners (+-h, +-h).
Polygon centered_square(const Rational& half_side);

}  // namespace farey::geom

#endif  // FAREY_GENERATORS_HPP_
