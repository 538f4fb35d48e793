# Copyright 2026 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""Grades of N^r: monomial exponents and multidegrees at the same time.

A grade is a plain tuple of nonnegative integers. The componentwise product
order is the only partial order used on grades; monomial orders live in the
"orders" module.
"""

import itertools
from typing import Iterable, Iterator, List, Sequence, Tuple

from sympy.polys.monomials import monomial_divides
from sympy.polys.monomials import monomial_lcm
from sympy.polys.monomials import monomial_ldiv
from sympy.polys.monomials import monomial_mul

from .errors import DimensionError

Grade = Tuple[int, ...]


def _check_lengths(u: Sequence[int], v: Sequence[int]):
  if len(u) != len(v):
    raise DimensionError(f"grades {tuple(u)} and {tuple(v)} differ in length")


def zero_grade(r: int) -> Grade:
  return (0,) * r


def as_grade(values: Iterable[int]) -> Grade:
  """Converts an iterable of integers to a grade.

  Args:
    values: Nonnegative integers.

  Returns:
    The grade as a tuple.

  Raises:
    ValueError: A component is negative.
  """
  grade = tuple(int(v) for v in values)
  if any(v < 0 for v in grade):
    raise ValueError(f"grade {grade} has a negative component")
  return grade


def mono_lcm(u: Grade, v: Grade) -> Grade:
  """Returns the componentwise maximum of two grades.

  Raises:
    DimensionError: The grades differ in length.
  """
  _check_lengths(u, v)
  return monomial_lcm(u, v)


def mono_divides(u: Grade, v: Grade) -> bool:
  """Returns whether x^u divides x^v, i.e. u precedes v componentwise.

  Raises:
    DimensionError: The grades differ in length.
  """
  _check_lengths(u, v)
  return monomial_divides(u, v)


def mono_mul(u: Grade, v: Grade) -> Grade:
  _check_lengths(u, v)
  return monomial_mul(u, v)


def mono_quotient(u: Grade, v: Grade) -> Grade:
  """Returns u - v, the exponent of x^u / x^v.

  Raises:
    DimensionError: The grades differ in length.
    ValueError: x^v does not divide x^u.
  """
  _check_lengths(u, v)
  quotient = monomial_ldiv(u, v)
  if any(e < 0 for e in quotient):
    raise ValueError(f"x^{v} does not divide x^{u}")
  return quotient


def precedes(u: Grade, v: Grade) -> bool:
  """Product order: u precedes v iff u_i <= v_i for all i."""
  return mono_divides(u, v)


def grade_max(grades: Iterable[Grade], r: int) -> Grade:
  """Componentwise maximum of the grades; the zero grade when there are none."""
  result = zero_grade(r)
  for grade in grades:
    result = mono_lcm(result, grade)
  return result


def minimal_elements(grades: Iterable[Grade]) -> Tuple[Grade, ...]:
  """Returns the antichain of minimal grades, sorted lexicographically.

  Duplicates collapse. The input may be any finite collection of grades of
  one length.
  """
  distinct = sorted(set(grades))
  minimal: List[Grade] = []
  for grade in distinct:
    if not any(
        other != grade and precedes(other, grade) for other in distinct):
      minimal.append(grade)
  return tuple(minimal)


def grades_below(bound: Grade) -> Iterator[Grade]:
  """Yields every grade u with u preceding the bound, in lexicographic order."""
  return itertools.product(*(range(b + 1) for b in bound))
