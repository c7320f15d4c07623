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

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace farey::geom {

namespace {

using math::ceil_div;
using math::floor_div;

// Sign of (b - a) x (c - a).
int orient(const Point& a, const Point& b, const Point& c) {
  Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v.sign();
}

// For c collinear with a and b: is c on the closed segment?
bool within_box(const Point& a, const Point& b, const Point& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

bool segments_touch(const Point& p1, const Point& p2, const Point& p3,
                    const Point& p4) {
  int d1 = orient(p3, p4, p1);
  int d2 = orient(p3, p4, p2);
  int d3 = orient(p1, p2, p3);
  int d4 = orient(p1, p2, p4);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && within_box(p3, p4, p1)) return true;
  if (d2 == 0 && within_box(p3, p4, p2)) return true;
  if (d3 == 0 && within_box(p1, p2, p3)) return true;
  if (d4 == 0 && within_box(p1, p2, p4)) return true;
  return false;
}

std::string point_str(const Point& p) {
  return "(" + p.x.str() + ", " + p.y.str() + ")";
}

BigInt lcm(const BigInt& a, const BigInt& b) { return a / math::gcd(a, b) * b; }

std::size_t bits_of(const BigInt& v) {
  return v.is_zero() ? 0 : boost::multiprecision::msb(abs(v)) + 1;
}

std::size_t bits_of(std::int64_t v) {
  std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1
                          : static_cast<std::uint64_t>(v);
  return u == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(u));
}

// Closed point-in-polygon (boundary test, then winding number) on
// common-denominator coordinates. The query is (qx/qd, qy/qd); every
// quantity below is in units of 1/(scale*qd).
template <typename I>
bool closed_contains(const std::vector<I>& xs, const std::vector<I>& ys,
                     const I& scale, const I& qx, const I& qy, const I& qd) {
  const std::size_t k = xs.size();
  const I px = qx * scale;
  const I py = qy * scale;
  int winding = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + 1 == k ? 0 : i + 1;
    const I ax = xs[i] * qd;
    const I ay = ys[i] * qd;
    const I bx = xs[j] * qd;
    const I by = ys[j] * qd;
    const I cross = (bx - ax) * (py - ay) - (by - ay) * (px - ax);
    if (cross == 0 && std::min(ax, bx) <= px && px <= std::max(ax, bx) &&
        std::min(ay, by) <= py && py <= std::max(ay, by)) {
      return true;
    }
    if (ay <= py) {
      if (by > py && cross > 0) ++winding;
    } else if (by <= py && cross < 0) {
      --winding;
    }
  }
  return winding != 0;
}

bool contains_raw(const std::vector<Point>& v, const Point& q) {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (const Point& p : v) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  return closed_contains<Rational>(xs, ys, Rational(1), q.x, q.y, Rational(1));
}

BigInt integers_in(const YInterval& iv) {
  BigInt count = iv.second.floor() - iv.first.ceil() + 1;
  return count.sign() > 0 ? count : BigInt(0);
}

}  // namespace

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kTooFewVertices: return "too-few-vertices";
    case ViolationKind::kRepeatedVertex: return "repeated-vertex";
    case ViolationKind::kZeroArea: return "zero-area";
    case ViolationKind::kSelfIntersection: return "self-intersection";
    case ViolationKind::kOriginOutside: return "origin-outside";
    case ViolationKind::kNotStarShaped: return "not-star-shaped";
  }
  return "unknown";
}

ValidationError::ValidationError(Violation v)
    : DomainError(std::string(violation_name(v.kind)) + ": " + v.detail),
      violation_(std::move(v)) {}

std::optional<Violation> validate(std::vector<Point>& v) {
  const std::size_t k = v.size();
  if (k < 3) {
    return Violation{ViolationKind::kTooFewVertices,
                     "need at least 3 vertices, got " + std::to_string(k)};
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (v[i] == v[j]) {
        return Violation{ViolationKind::kRepeatedVertex,
                         "vertex " + point_str(v[i]) + " appears twice"};
      }
    }
  }
  Rational twice_area;
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % k];
    twice_area += a.x * b.y - a.y * b.x;
  }
  if (twice_area.sign() == 0) {
    return Violation{ViolationKind::kZeroArea, "polygon has zero area"};
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % k];
    // The next edge must not fold back over this one.
    const Point& c = v[(i + 2) % k];
    if (orient(a, b, c) == 0) {
      Rational dot = (a.x - b.x) * (c.x - b.x) + (a.y - b.y) * (c.y - b.y);
      if (dot.sign() > 0) {
        return Violation{ViolationKind::kSelfIntersection,
                         "edges fold back at " + point_str(b)};
      }
    }
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;  // adjacent through vertex 0
      if (segments_touch(a, b, v[j], v[(j + 1) % k])) {
        return Violation{ViolationKind::kSelfIntersection,
                         "edge " + std::to_string(i) + " meets edge " +
                             std::to_string(j)};
      }
    }
  }
  if (twice_area.sign() < 0) std::reverse(v.begin(), v.end());

  const Point origin{Rational(0), Rational(0)};
  if (!contains_raw(v, origin)) {
    return Violation{ViolationKind::kOriginOutside,
                     "the origin is not in the closed region"};
  }
  // The kernel of a simple polygon is the intersection of the inner
  // half-planes of its edges.
  for (std::size_t i = 0; i < k; ++i) {
    if (orient(v[i], v[(i + 1) % k], origin) < 0) {
      return Violation{ViolationKind::kNotStarShaped,
                       "origin is on the outer side of edge " +
                           point_str(v[i]) + " -> " +
                           point_str(v[(i + 1) % k])};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Polygon

Polygon Polygon::create(std::vector<Point> vertices) {
  if (auto violation = validate(vertices)) {
    throw ValidationError(std::move(*violation));
  }
  return build(std::move(vertices));
}

Polygon Polygon::build(std::vector<Point> ccw_vertices) {
  BigInt scale = 1;
  for (const Point& p : ccw_vertices) {
    scale = lcm(scale, p.x.den());
    scale = lcm(scale, p.y.den());
  }
  std::vector<BigInt> sx;
  std::vector<BigInt> sy;
  for (const Point& p : ccw_vertices) {
    sx.push_back(p.x.num() * (scale / p.x.den()));
    sy.push_back(p.y.num() * (scale / p.y.den()));
  }
  return Polygon(std::move(ccw_vertices), std::move(sx), std::move(sy),
                 std::move(scale));
}

Polygon::Polygon(std::vector<Point> ccw_vertices, std::vector<BigInt> sx,
                 std::vector<BigInt> sy, BigInt scale)
    : vertices_(std::move(ccw_vertices)),
      sx_(std::move(sx)),
      sy_(std::move(sy)),
      scale_(std::move(scale)) {
  BigInt widest = 0;
  for (std::size_t i = 0; i < sx_.size(); ++i) {
    for (std::size_t j = i + 1; j < sx_.size(); ++j) {
      BigInt dx = sx_[i] - sx_[j];
      BigInt dy = sy_[i] - sy_[j];
      BigInt d2 = dx * dx + dy * dy;
      if (d2 > widest) widest = d2;
    }
  }
  // D^2 >= widest / scale^2  <=>  D^2 >= ceil(widest / scale^2).
  diameter_ = math::ceil_sqrt(ceil_div(widest, scale_ * scale_));
  if (diameter_ < 1) diameter_ = 1;

  for (std::size_t i = 0; i < sx_.size(); ++i) {
    coord_bits_ = std::max({coord_bits_, bits_of(sx_[i]), bits_of(sy_[i])});
  }
  scale_bits_ = bits_of(scale_);
  if (coord_bits_ <= 60 && scale_bits_ <= 60) {
    for (std::size_t i = 0; i < sx_.size(); ++i) {
      fx_.push_back(math::to_int128(sx_[i]));
      fy_.push_back(math::to_int128(sy_[i]));
    }
    fscale_ = math::to_int128(scale_);
  }
}

std::size_t Polygon::bit_size() const {
  std::size_t b = 0;
  for (const Point& p : vertices_) {
    b = std::max({b, bits_of(p.x.num()), bits_of(p.x.den()),
                  bits_of(p.y.num()), bits_of(p.y.den())});
  }
  return b;
}

bool Polygon::contains_scaled(const BigInt& qx, const BigInt& qy,
                              const BigInt& qd) const {
  // 128-bit path: every term of the cross product stays below 2^62.
  if (!fx_.empty() && coord_bits_ + bits_of(qd) <= 60 &&
      scale_bits_ + std::max(bits_of(qx), bits_of(qy)) <= 60) {
    return closed_contains<Int128>(fx_, fy_, fscale_, math::to_int128(qx),
                                   math::to_int128(qy), math::to_int128(qd));
  }
  return closed_contains<BigInt>(sx_, sy_, scale_, qx, qy, qd);
}

bool Polygon::contains(const Point& q) const {
  BigInt qd = lcm(q.x.den(), q.y.den());
  return contains_scaled(q.x.num() * (qd / q.x.den()),
                         q.y.num() * (qd / q.y.den()), qd);
}

bool Polygon::contains(const BigInt& x, const BigInt& y) const {
  return contains_scaled(x, y, BigInt(1));
}

bool Polygon::contains(std::int64_t x, std::int64_t y) const {
  if (!fx_.empty() && coord_bits_ <= 60 &&
      scale_bits_ + std::max(bits_of(x), bits_of(y)) <= 60) {
    return closed_contains<Int128>(fx_, fy_, fscale_, x, y, Int128{1});
  }
  return contains_scaled(BigInt(x), BigInt(y), BigInt(1));
}

Polygon Polygon::scale_down(const BigInt& d) const {
  if (d < 1) throw DomainError("scale_down needs d >= 1, got " + d.str());
  if (d == 1) return *this;
  std::vector<Point> shrunk;
  shrunk.reserve(vertices_.size());
  const Rational divisor(d);
  for (const Point& p : vertices_) {
    shrunk.push_back({p.x / divisor, p.y / divisor});
  }
  return Polygon(std::move(shrunk), sx_, sy_, scale_ * d);
}

bool contains(const Polygon& p, const Point& q) { return p.contains(q); }

Polygon scale_down(const Polygon& p, const BigInt& d) {
  return p.scale_down(d);
}

BigInt diameter_bound(const Polygon& p) { return p.diameter(); }

// ---------------------------------------------------------------------------
// Lattice counting

std::vector<YInterval> column_intervals(const Polygon& p,
                                        const BigInt& column) {
  const auto& xs = p.scaled_x();
  const auto& ys = p.scaled_y();
  const BigInt& scale = p.scale();
  const BigInt at = column * scale;
  const std::size_t k = xs.size();

  std::vector<Rational> hits;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = (i + 1) % k;
    const BigInt& ax = xs[i];
    const BigInt& bx = xs[j];
    if (ax == bx) {
      if (ax == at) {
        hits.emplace_back(ys[i], scale);
        hits.emplace_back(ys[j], scale);
      }
      continue;
    }
    if (std::min(ax, bx) <= at && at <= std::max(ax, bx)) {
      hits.emplace_back(ys[i] * (bx - at) + ys[j] * (at - ax),
                        (bx - ax) * scale);
    }
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());

  std::vector<YInterval> out;
  if (hits.empty()) return out;
  const Rational x(column);
  YInterval current{hits[0], hits[0]};
  for (std::size_t i = 0; i + 1 < hits.size(); ++i) {
    Rational mid = (hits[i] + hits[i + 1]) / Rational(2);
    if (p.contains(Point{x, mid})) {
      current.second = hits[i + 1];
    } else {
      out.push_back(current);
      current = {hits[i + 1], hits[i + 1]};
    }
  }
  out.push_back(current);
  return out;
}

BigInt count_lattice(const Polygon& p) {
  const auto& xs = p.scaled_x();
  const auto& ys = p.scaled_y();
  const BigInt& scale = p.scale();
  const std::size_t k = xs.size();

  // Columns through a vertex are counted directly; every other column only
  // meets edges transversally and splits into closed runs [lower, upper].
  std::vector<BigInt> vertex_columns;
  for (const BigInt& x : xs) {
    if ((x % scale).is_zero()) vertex_columns.push_back(x / scale);
  }
  std::sort(vertex_columns.begin(), vertex_columns.end());
  vertex_columns.erase(
      std::unique(vertex_columns.begin(), vertex_columns.end()),
      vertex_columns.end());

  BigInt total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = (i + 1) % k;
    if (xs[i] == xs[j]) continue;
    // Along the edge, y(X) = (a X + c) / m.
    BigInt a = scale * (ys[j] - ys[i]);
    BigInt c = ys[i] * xs[j] - xs[i] * ys[j];
    BigInt m = scale * (xs[j] - xs[i]);
    // CCW: edges heading left bound the region from above, edges heading
    // right from below. Above: #{Y <= y} = floor(y) + const; below:
    // #{Y < y} = floor((a X + c - 1) / m) + const. The constants cancel.
    const bool upper = xs[j] < xs[i];
    if (m.sign() < 0) {
      a = -a;
      c = -c;
      m = -m;
    }
    if (!upper) c -= 1;
    BigInt lo = floor_div(std::min(xs[i], xs[j]), scale) + 1;
    BigInt hi = ceil_div(std::max(xs[i], xs[j]), scale) - 1;
    if (lo > hi) continue;
    BigInt sum = math::floor_sum_linear<BigInt>(hi - lo + 1, a, a * lo + c, m);
    for (const BigInt& v : vertex_columns) {
      if (v >= lo && v <= hi) sum -= floor_div(a * v + c, m);
    }
    if (upper) {
      total += sum;
    } else {
      total -= sum;
    }
  }
  for (const BigInt& v : vertex_columns) {
    for (const YInterval& iv : column_intervals(p, v)) total += integers_in(iv);
  }
  return total;
}

BigInt count_lattice_brute(const Polygon& p) {
  if (p.diameter() > kBruteDiameterLimit) {
    throw DomainError("count_lattice_brute refuses diameter " +
                      p.diameter().str());
  }
  Rational min_x = p.vertices()[0].x;
  Rational max_x = min_x;
  Rational min_y = p.vertices()[0].y;
  Rational max_y = min_y;
  for (const Point& v : p.vertices()) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  auto x0 = static_cast<std::int64_t>(min_x.ceil());
  auto x1 = static_cast<std::int64_t>(max_x.floor());
  auto y0 = static_cast<std::int64_t>(min_y.ceil());
  auto y1 = static_cast<std::int64_t>(max_y.floor());
  std::int64_t count = 0;
  for (std::int64_t x = x0; x <= x1; ++x) {
    for (std::int64_t y = y0; y <= y1; ++y) {
      if (p.contains(x, y)) ++count;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// Text format

std::vector<Point> parse_polygon(std::istream& in) {
  std::vector<Point> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string px;
    std::string py;
    std::string extra;
    if (!(fields >> px >> py) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected two coordinates, got '" + line + "'");
    }
    try {
      out.push_back({Rational::parse(px), Rational::parse(py)});
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Point> parse_polygon_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_polygon(in);
}

Polygon load_polygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open polygon file '" + path + "'");
  return Polygon::create(parse_polygon(in));
}

}  // namespace farey::geom
