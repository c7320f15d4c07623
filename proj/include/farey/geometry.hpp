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

// Exact rational polygons that are star-shaped about the origin.
//
// Regions are closed: boundary points count as inside. Every predicate is
// evaluated in exact integer arithmetic on a common-denominator copy of the
// vertices.

#ifndef FAREY_GEOMETRY_HPP_
#define FAREY_GEOMETRY_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "farey/exactmath.hpp"

namespace farey::geom {

using math::BigInt;
using math::Int128;
using math::Rational;

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class ViolationKind {
  kTooFewVertices,
  kRepeatedVertex,
  kZeroArea,
  kSelfIntersection,
  kOriginOutside,
  kNotStarShaped,
};

std::string_view violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

class ValidationError : public DomainError {
 public:
  explicit ValidationError(Violation v);
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

// Checks, in order: vertex count, repeated vertices, non-zero area,
// simplicity, origin membership, star-shapedness about the origin. A
// clockwise list is reversed in place. Returns the first violation.
std::optional<Violation> validate(std::vector<Point>& vertices);

class Polygon {
 public:
  // Validates (reorienting clockwise input); throws ValidationError.
  static Polygon create(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  // Largest bit length among all vertex numerators and denominators.
  std::size_t bit_size() const;
  // Smallest integer >= the largest vertex-to-vertex distance (at least 1).
  const BigInt& diameter() const { return diameter_; }

  // Closed-region membership.
  bool contains(const Point& q) const;
  bool contains(const BigInt& x, const BigInt& y) const;
  bool contains(std::int64_t x, std::int64_t y) const;

  // Every coordinate divided by d >= 1.
  Polygon scale_down(const BigInt& d) const;

  // Vertex i is (scaled_x()[i] / scale(), scaled_y()[i] / scale()).
  const std::vector<BigInt>& scaled_x() const { return sx_; }
  const std::vector<BigInt>& scaled_y() const { return sy_; }
  const BigInt& scale() const { return scale_; }

 private:
  Polygon(std::vector<Point> ccw_vertices, std::vector<BigInt> sx,
          std::vector<BigInt> sy, BigInt scale);
  static Polygon build(std::vector<Point> ccw_vertices);

  bool contains_scaled(const BigInt& qx, const BigInt& qy,
                       const BigInt& qd) const;

  std::vector<Point> vertices_;
  std::vector<BigInt> sx_;
  std::vector<BigInt> sy_;
  BigInt scale_;
  BigInt diameter_;
  // 128-bit copies for the fast containment path.
  std::vector<Int128> fx_;
  std::vector<Int128> fy_;
  Int128 fscale_ = 0;
  std::size_t coord_bits_ = 0;
  std::size_t scale_bits_ = 0;
};

bool contains(const Polygon& p, const Point& q);
Polygon scale_down(const Polygon& p, const BigInt& d);
BigInt diameter_bound(const Polygon& p);

// A closed vertical interval [lo, hi] (lo == hi for isolated points).
using YInterval = std::pair<Rational, Rational>;

// Intersection of the closed polygon with the vertical line x = column, as
// disjoint closed intervals in increasing order.
std::vector<YInterval> column_intervals(const Polygon& p,
                                        const BigInt& column);

// A(P): lattice points in the closed polygon, O(k^2) floor sums.
BigInt count_lattice(const Polygon& p);

// Bounding-box scan with contains(); oracle only.
inline constexpr std::int64_t kBruteDiameterLimit = 5000;
BigInt count_lattice_brute(const Polygon& p);

// Text format: one `PX/QX PY/QY` vertex per line, `#` comment lines,
// blank lines ignored. Throws ParseError.
std::vector<Point> parse_polygon(std::istream& in);
std::vector<Point> parse_polygon_text(std::string_view text);
Polygon load_polygon(const std::string& path);

}  // namespace farey::geom

#endif  // FAREY_GEOMETRY_HPP_
