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
"""Random valid multifiltrations for tests and benchmarks.

Vertices draw their grades uniformly from a box. Higher simplices are drawn
among the candidates whose facets are all present, and each drawn grade is
lifted above one entry grade of every facet, so the result always validates.
On request the grades of each simplex are spread into an antichain, which
keeps them all through minimalization.
"""

import itertools
from typing import Dict, List, Optional, Tuple

import numpy as np

from algebra.monomials import Grade
from .multifiltration import Multifiltration
from .multifiltration import Simplex
from .multifiltration import canonicalize


def _draw(rng: np.random.Generator, count: int, r: int,
          max_grade: int) -> List[Grade]:
  values = rng.integers(0, max_grade + 1, size=(count, r))
  return [tuple(int(v) for v in row) for row in values]


def _lift(rng: np.random.Generator, grade: Grade,
          facet_grades: List[Tuple[Grade, ...]]) -> Grade:
  lifted = np.array(grade)
  for grades in facet_grades:
    chosen = grades[int(rng.integers(len(grades)))]
    lifted = np.maximum(lifted, chosen)
  return tuple(int(v) for v in lifted)


def _antichain(rng: np.random.Generator, count: int, r: int, max_grade: int,
               facet_grades: List[Tuple[Grade, ...]]) -> List[Grade]:
  """Spreads count grades above one lifted grade along the first two axes.

  The offsets strictly increase in the first coordinate and strictly decrease
  in the second, so the grades are pairwise incomparable.
  """
  base = np.array(_lift(rng, _draw(rng, 1, r, max_grade)[0], facet_grades))
  spread = max_grade + count
  firsts = np.sort(rng.choice(spread, size=count, replace=False))
  seconds = np.sort(rng.choice(spread, size=count, replace=False))[::-1]
  result = []
  for first, second in zip(firsts, seconds):
    grade = base.copy()
    grade[0] += first
    grade[1] += second
    result.append(tuple(int(v) for v in grade))
  return result


def _grades(rng: np.random.Generator, count: int, r: int, max_grade: int,
            facet_grades: List[Tuple[Grade, ...]],
            incomparable: bool) -> Tuple[Grade, ...]:
  if incomparable and count > 1:
    return tuple(_antichain(rng, count, r, max_grade, facet_grades))
  return tuple(
      _lift(rng, g, facet_grades) for g in _draw(rng, count, r, max_grade))


def random_multifiltration(num_vertices: int,
                           r: int = 2,
                           max_dimension: int = 2,
                           grades_per_simplex: int = 1,
                           max_grade: int = 4,
                           edge_probability: float = 0.5,
                           face_probability: float = 0.5,
                           seed: Optional[int] = None,
                           incomparable: bool = False) -> Multifiltration:
  """Draws a random valid multifiltration.

  Args:
    num_vertices: Number of vertices, labelled 0..num_vertices-1.
    r: Number of parameters.
    max_dimension: Largest simplex dimension drawn.
    grades_per_simplex: Grades drawn per simplex before minimalization; 1
      gives a one-critical multifiltration.
    max_grade: Largest coordinate of a drawn grade before lifting.
    edge_probability: Chance that an edge is present.
    face_probability: Chance that a candidate of dimension two or more is
      present once all its facets are.
    seed: Seed for numpy.random.default_rng.
    incomparable: Draw the grades of every simplex as an antichain of
      exactly grades_per_simplex elements. Coordinates may then exceed
      max_grade. Needs r >= 2 when grades_per_simplex > 1.

  Returns:
    A canonical multifiltration that passes validation.

  Raises:
    ValueError: A size parameter is out of range.
  """
  if num_vertices < 0 or r < 1 or max_dimension < 0 or max_grade < 0:
    raise ValueError("sizes must be nonnegative and r positive")
  if grades_per_simplex < 1:
    raise ValueError("grades_per_simplex must be at least 1")
  if incomparable and r < 2 and grades_per_simplex > 1:
    raise ValueError("incomparable grades need at least 2 parameters")
  rng = np.random.default_rng(seed)
  grades: Dict[Simplex, Tuple[Grade, ...]] = {}
  layer = []
  for v in range(num_vertices):
    simplex = Simplex((v,))
    grades[simplex] = _grades(rng, grades_per_simplex, r, max_grade, [],
                              incomparable)
    layer.append(simplex)
  for dimension in range(1, max_dimension + 1):
    probability = edge_probability if dimension == 1 else face_probability
    next_layer = []
    for base, v in itertools.product(layer, range(num_vertices)):
      if v <= base.vertices[-1]:
        continue
      candidate = Simplex(base.vertices + (v,))
      facets = candidate.faces()
      if not all(facet in grades for facet in facets):
        continue
      if rng.random() >= probability:
        continue
      facet_grades = [grades[facet] for facet in facets]
      grades[candidate] = _grades(rng, grades_per_simplex, r, max_grade,
                                  facet_grades, incomparable)
      next_layer.append(candidate)
    if not next_layer:
      break
    layer = next_layer
  return canonicalize(r, grades.items())
