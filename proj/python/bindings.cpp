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

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "farey/errors.hpp"
#include "farey/exactmath.hpp"
#include "farey/farey.hpp"
#include "farey/geometry.hpp"
#include "farey/primitive.hpp"

namespace py = pybind11;

namespace {

using farey::math::BigInt;
using farey::math::Rational;

// Python ints cross the boundary as decimal strings.
BigInt to_big(const py::handle& obj) {
  if (!py::isinstance<py::int_>(obj) || py::isinstance<py::bool_>(obj)) {
    throw py::type_error("expected an int");
  }
  return BigInt{py::str(obj).cast<std::string>()};
}

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

// int, "p/q" string, or anything with numerator/denominator (Fraction).
Rational to_rational(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) {
    return Rational::parse(obj.cast<std::string>());
  }
  if (py::isinstance<py::int_>(obj) && !py::isinstance<py::bool_>(obj)) {
    return Rational(to_big(obj));
  }
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator") &&
      !py::isinstance<py::float_>(obj)) {
    return Rational(to_big(obj.attr("numerator")),
                    to_big(obj.attr("denominator")));
  }
  throw py::type_error("expected an int, a 'p/q' string or a Fraction");
}

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(r.num()), to_py(r.den()));
}

std::int64_t to_order(const py::handle& obj) {
  BigInt n = to_big(obj);
  if (n < 1 || n > std::numeric_limits<std::int64_t>::max()) {
    throw farey::DomainError("order must be in [1, 2^63)");
  }
  return static_cast<std::int64_t>(n);
}

farey::geom::Polygon to_polygon(const py::sequence& vertices) {
  std::vector<farey::geom::Point> pts;
  for (const py::handle& v : vertices) {
    auto pair = py::reinterpret_borrow<py::sequence>(v);
    if (pair.size() != 2) throw py::value_error("vertices are (x, y) pairs");
    pts.push_back({to_rational(pair[0]), to_rational(pair[1])});
  }
  return farey::geom::Polygon::create(std::move(pts));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Farey-sequence ranks and primitive lattice point counts.";

  py::register_local_exception<farey::NotFoundError>(m, "NotFoundError",
                                                     PyExc_LookupError);

  m.def(
      "floor_sum",
      [](const py::object& n, const py::object& x) {
        return to_py(farey::math::floor_sum(to_big(n), to_rational(x)));
      },
      py::arg("n"), py::arg("x"), "sum of floor(b*x) for b = 1..n");

  m.def(
      "rank",
      [](const py::object& x, const py::object& n, const std::string& algo) {
        return to_py(farey::seq::rank(to_rational(x), to_order(n),
                                      farey::seq::parse_algo(algo)));
      },
      py::arg("x"), py::arg("n"), py::arg("algo") = "improved",
      "number of members of F_n that are <= x");

  m.def(
      "statistic",
      [](const py::object& k, const py::object& n) {
        return to_fraction(farey::seq::statistic(to_big(k), to_order(n)));
      },
      py::arg("k"), py::arg("n"), "k-th smallest member of F_n (1-based)");

  m.def(
      "totient_sum",
      [](const py::object& n) {
        return to_py(farey::seq::totient_sum(to_order(n)));
      },
      py::arg("n"), "sum of Euler phi(b) for b = 1..n");

  m.def(
      "best_approximation_in",
      [](const py::object& lo, const py::object& hi, const py::object& qmax) {
        return to_fraction(farey::math::best_approximation_in(
            to_rational(lo), to_rational(hi), to_big(qmax)));
      },
      py::arg("lo"), py::arg("hi"), py::arg("qmax"),
      "fraction with the smallest denominator in (lo, hi]");

  m.def(
      "count_lattice",
      [](const py::sequence& vertices) {
        return to_py(farey::geom::count_lattice(to_polygon(vertices)));
      },
      py::arg("vertices"), "lattice points in the closed polygon");

  m.def(
      "primitive_count",
      [](const py::sequence& vertices, std::optional<std::int64_t> tau,
         bool grouping) {
        farey::prim::PrimitiveOptions opts;
        opts.tau = tau;
        opts.grouping = grouping;
        return to_py(farey::prim::primitive_count(to_polygon(vertices), opts));
      },
      py::arg("vertices"), py::arg("tau") = py::none(),
      py::arg("grouping") = true, "primitive lattice points in the polygon");

  m.def(
      "primitive_brute",
      [](const py::sequence& vertices) {
        return to_py(farey::prim::primitive_brute(to_polygon(vertices)));
      },
      py::arg("vertices"), "bounding-box scan for primitive points");

  m.def(
      "diameter",
      [](const py::sequence& vertices) {
        return to_py(to_polygon(vertices).diameter());
      },
      py::arg("vertices"), "integer bound on the vertex diameter");
}
