# Copyright 2026 The farey-rank Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS-IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""Exact Farey-sequence ranks and primitive lattice point counts.

Rationals may be given as ints, ``"p/q"`` strings or ``fractions.Fraction``.
Polygons are sequences of ``(x, y)`` vertex pairs.
"""

from ._core import (
    NotFoundError,
    best_approximation_in,
    count_lattice,
    diameter,
    floor_sum,
    primitive_brute,
    primitive_count,
    rank,
    statistic,
    totient_sum,
)

__all__ = [
    "NotFoundError",
    "best_approximation_in",
    "count_lattice",
    "diameter",
    "floor_sum",
    "primitive_brute",
    "primitive_count",
    "rank",
    "statistic",
    "totient_sum",
]
