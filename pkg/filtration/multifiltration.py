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
"""Multifiltered finite simplicial complexes.

A multifiltration lists every simplex of a complex X together with the
antichain of grades at which it enters. The subcomplex X_v at a grade v holds
the simplices with some entry grade preceding v. Simplices are kept in the
canonical order (dimension, then vertices lexicographically), which fixes the
row and column order of every matrix built downstream.
"""

import collections
import dataclasses
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from algebra.errors import DimensionError
from algebra.monomials import Grade
from algebra.monomials import as_grade
from algebra.monomials import grade_max
from algebra.monomials import minimal_elements
from algebra.monomials import precedes


class UnknownSimplexError(KeyError):
  """A simplex is not listed in the multifiltration."""


@dataclasses.dataclass(frozen=True)
class Simplex:
  """A simplex given by its strictly increasing vertex ids."""
  vertices: Tuple[int, ...]

  def __post_init__(self):
    if not self.vertices:
      raise ValueError("a simplex needs at least one vertex")
    if any(v < 0 for v in self.vertices):
      raise ValueError(f"negative vertex id in {self.vertices}")
    if any(a >= b for a, b in zip(self.vertices, self.vertices[1:])):
      raise ValueError(
          f"vertices {self.vertices} are not strictly increasing")

  @classmethod
  def of(cls, vertices: Iterable[int]) -> "Simplex":
    """Builds the canonical simplex on the given vertex ids.

    Raises:
      ValueError: A vertex repeats or is negative.
    """
    listed = [int(v) for v in vertices]
    if len(set(listed)) != len(listed):
      raise ValueError(f"repeated vertex in {listed}")
    return cls(tuple(sorted(listed)))

  @property
  def dimension(self) -> int:
    return len(self.vertices) - 1

  def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
    return (self.dimension, self.vertices)

  def faces(self) -> Tuple["Simplex", ...]:
    """Codimension one faces; face i omits vertex i and carries sign (-1)^i."""
    if self.dimension == 0:
      return ()
    return tuple(
        Simplex(self.vertices[:i] + self.vertices[i + 1:])
        for i in range(len(self.vertices)))

  def __str__(self) -> str:
    return "[" + ",".join(str(v) for v in self.vertices) + "]"


# (simplex, antichain of entry grades)
Entry = Tuple[Simplex, Tuple[Grade, ...]]


@dataclasses.dataclass(frozen=True)
class Multifiltration:
  """A multifiltration of a finite simplicial complex over N^r.

  Build instances with canonicalize() or the parser; both establish the
  canonical order and minimal antichains.

  Attributes:
    r: Number of parameters.
    entries: (simplex, entry grades) pairs in canonical order.
  """
  r: int
  entries: Tuple[Entry, ...] = ()

  def __post_init__(self):
    index = {}
    for position, (simplex, _) in enumerate(self.entries):
      index[simplex] = position
    object.__setattr__(self, "_index", index)

  def __len__(self) -> int:
    return len(self.entries)

  def __contains__(self, simplex: object) -> bool:
    return simplex in self._index

  def __iter__(self) -> Iterator[Entry]:
    return iter(self.entries)

  @property
  def dimension(self) -> int:
    """Dimension of the complex; -1 when it is empty."""
    return max((s.dimension for s, _ in self.entries), default=-1)

  def simplices(self, n: int) -> Tuple[Simplex, ...]:
    """All listed n-simplices in canonical order."""
    return tuple(s for s, _ in self.entries if s.dimension == n)

  def entry_grades(self, simplex: Simplex) -> Tuple[Grade, ...]:
    """The entry antichain of a simplex, lexicographically sorted.

    Raises:
      UnknownSimplexError: The simplex is not listed.
    """
    try:
      return self.entries[self._index[simplex]][1]
    except KeyError:
      raise UnknownSimplexError(str(simplex)) from None


def canonicalize(r: int,
                 entries: Iterable[Tuple[Simplex, Iterable[Grade]]]
                ) -> Multifiltration:
  """Builds a canonical multifiltration.

  Duplicate simplices merge their grade sets; every grade set is reduced to
  its minimal elements.

  Args:
    r: Number of parameters.
    entries: (simplex, grades) pairs in any order.

  Returns:
    The canonical Multifiltration.

  Raises:
    DimensionError: A grade does not have r components.
    ValueError: A simplex has no entry grade, or a grade is negative.
  """
  merged: Dict[Simplex, List[Grade]] = collections.defaultdict(list)
  for simplex, grades in entries:
    bucket = merged[simplex]
    for grade in grades:
      grade = as_grade(grade)
      if len(grade) != r:
        raise DimensionError(
            f"grade {grade} of {simplex} does not have {r} components")
      bucket.append(grade)
  canonical = []
  for simplex in sorted(merged, key=Simplex.sort_key):
    if not merged[simplex]:
      raise ValueError(f"simplex {simplex} has no entry grade")
    canonical.append((simplex, minimal_elements(merged[simplex])))
  return Multifiltration(r, tuple(canonical))


def from_mapping(r: int,
                 grades: Mapping[Sequence[int], Iterable[Grade]]
                ) -> Multifiltration:
  """canonicalize() over a {vertex ids: grades} mapping."""
  return canonicalize(
      r, ((Simplex.of(vertices), g) for vertices, g in grades.items()))


def stabilization_grade(mf: Multifiltration) -> Grade:
  """The componentwise maximum v' of all entry grades; X_{v'} is all of X."""
  return grade_max((g for _, grades in mf for g in grades), mf.r)


def is_one_critical(mf: Multifiltration) -> bool:
  return all(len(grades) == 1 for _, grades in mf)


def chain_basis_at(mf: Multifiltration, v: Grade,
                   n: int) -> Tuple[Simplex, ...]:
  """The n-simplices of X_v in canonical order.

  Raises:
    DimensionError: v does not have r components.
  """
  if len(v) != mf.r:
    raise DimensionError(f"grade {tuple(v)} does not have {mf.r} components")
  return tuple(
      simplex for simplex, grades in mf
      if simplex.dimension == n and any(precedes(w, v) for w in grades))
