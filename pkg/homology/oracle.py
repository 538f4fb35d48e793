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
"""Degreewise linear algebra checks of the Groebner pipeline.

All modules involved are multigraded, so each degree u is a finite
dimensional vector space and membership questions become exact Gaussian
elimination with sympy's DomainMatrix. This is the independent reference
the Groebner computations are compared against.
"""

import dataclasses
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains.domain import Domain
from sympy.polys.matrices import DomainMatrix

from algebra import free_module
from algebra.free_module import FreeModule
from algebra.free_module import FreeModuleElement
from algebra.monomials import Grade
from algebra.monomials import grades_below
from algebra.monomials import mono_quotient
from algebra.monomials import precedes
from algebra.orders import ModuleMonomial
from filtration.multifiltration import Multifiltration
from filtration.multifiltration import stabilization_grade
from presentation import shifted_boundary
from . import persistence_modules

_LOGGER_ = logging.getLogger(__name__)


def default_bound(v_prime: Grade) -> Grade:
  """v' + (2, ..., 2)."""
  return tuple(v + 2 for v in v_prime)


def _shift(f: FreeModuleElement, degree: Grade) -> Optional[FreeModuleElement]:
  """x^{degree - deg f} f, or None when deg f does not precede degree."""
  if not f.terms:
    return None
  own = free_module.multidegree(f)
  if not precedes(own, degree):
    return None
  return free_module.elem_scale(f, f.module.domain.one,
                                mono_quotient(degree, own))


def _coordinates(vectors: Sequence[FreeModuleElement]
                ) -> Tuple[List[ModuleMonomial], List[List[Any]]]:
  keys = sorted({(t.monomial, t.basis) for f in vectors for t in f.terms})
  rows = {key: i for i, key in enumerate(keys)}
  columns = []
  for f in vectors:
    column = [None] * len(keys)
    for t in f.terms:
      column[rows[(t.monomial, t.basis)]] = t.coefficient
    columns.append(column)
  return keys, columns


def _matrix(columns: List[List[Any]], height: int,
            domain: Domain) -> DomainMatrix:
  rows = [[
      domain.zero if column[i] is None else column[i] for column in columns
  ] for i in range(height)]
  return DomainMatrix(rows, (height, len(columns)), domain)


def span_rank(vectors: Sequence[FreeModuleElement], domain: Domain) -> int:
  """Dimension over the field of the span of homogeneous vectors."""
  vectors = [f for f in vectors if f.terms]
  if not vectors:
    return 0
  keys, columns = _coordinates(vectors)
  return _matrix(columns, len(keys), domain).rank()


def degree_piece(generators: Sequence[FreeModuleElement],
                 degree: Grade) -> List[FreeModuleElement]:
  """Spanning vectors of the degree piece of <generators>.

  The generators must be homogeneous.
  """
  piece = []
  for g in generators:
    shifted = _shift(g, degree)
    if shifted is not None:
      piece.append(shifted)
  return piece


def _kernel(columns: List[List[Any]], height: int,
            domain: Domain) -> List[List[Any]]:
  width = len(columns)
  if height == 0:
    pivots: Tuple[int, ...] = ()
    reduced: List[List[Any]] = []
  else:
    echelon, pivots = _matrix(columns, height, domain).rref()
    reduced = [[domain.from_sympy(entry)
                for entry in row]
               for row in echelon.to_Matrix().tolist()]
  kernel = []
  for free in range(width):
    if free in pivots:
      continue
    vector = [domain.zero] * width
    vector[free] = domain.one
    for row, pivot in enumerate(pivots):
      vector[pivot] = -reduced[row][free]
    kernel.append(vector)
  return kernel


@dataclasses.dataclass(frozen=True)
class DegreeKernel:
  """Kernel of the columns in one degree.

  Attributes:
    degree: The degree u.
    active: Indices of the columns whose degree precedes u.
    basis: Kernel basis as homogeneous elements of the source module.
  """
  degree: Grade
  active: Tuple[int, ...]
  basis: Tuple[FreeModuleElement, ...]


def oracle_syzygy_degreewise(columns: Sequence[FreeModuleElement],
                             source: FreeModule,
                             bound: Grade) -> Dict[Grade, DegreeKernel]:
  """Kernel bases of the map e_tau -> columns[tau], degree by degree.

  Args:
    columns: Homogeneous images of the source generators.
    source: Graded source module; basis element tau sits in deg tau.
    bound: Degrees u preceding the bound are computed.

  Returns:
    For each u, a basis of the coefficient vectors c with
    sum_tau c_tau x^{u - deg tau} columns[tau] = 0 over the active tau.
  """
  domain = source.domain
  kernels = {}
  for u in grades_below(bound):
    active = tuple(
        tau for tau in range(source.rank) if precedes(source.degree(tau), u))
    images = []
    for tau in active:
      shift = mono_quotient(u, source.degree(tau))
      images.append(
          free_module.elem_scale(columns[tau], domain.one, shift)
          if columns[tau].terms else columns[tau])
    keys, coordinates = _coordinates(images)
    basis = []
    for vector in _kernel(coordinates, len(keys), domain):
      basis.append(
          source.element((c, mono_quotient(u, source.degree(tau)), tau)
                         for c, tau in zip(vector, active)))
    kernels[u] = DegreeKernel(u, active, tuple(basis))
  return kernels


@dataclasses.dataclass(frozen=True)
class Mismatch:
  """A degree where a computed module and the reference disagree."""
  module: str
  degree: Grade
  expected_dimension: int
  computed_dimension: int
  combined_dimension: int

  def __str__(self) -> str:
    grade = ",".join(str(g) for g in self.degree)
    return (f"{self.module} at ({grade}): reference dimension "
            f"{self.expected_dimension}, computed {self.computed_dimension}, "
            f"together {self.combined_dimension}")


@dataclasses.dataclass(frozen=True)
class OracleReport:
  n: int
  bound: Grade
  degrees_checked: int
  mismatches: Tuple[Mismatch, ...] = ()

  @property
  def ok(self) -> bool:
    return not self.mismatches

  def __bool__(self) -> bool:
    return self.ok


def _compare(name: str, degree: Grade,
             reference: Sequence[FreeModuleElement],
             computed: Sequence[FreeModuleElement],
             domain: Domain) -> Optional[Mismatch]:
  expected = span_rank(reference, domain)
  actual = span_rank(computed, domain)
  combined = span_rank(list(reference) + list(computed), domain)
  if expected == actual == combined:
    return None
  return Mismatch(name, degree, expected, actual, combined)


def compare_with_oracle(mf: Multifiltration,
                        modules: persistence_modules.DimensionModules,
                        bound: Optional[Grade] = None) -> OracleReport:
  """Compares one dimension's modules with degreewise linear algebra.

  In every degree u preceding the bound the spans of the syzygies, the
  cycles and the boundaries must equal those of the reference kernel, the
  embedded reference kernel and the shifted boundary columns.

  Args:
    mf: The multifiltration the modules were computed from.
    modules: Results of one dimension.
    bound: Largest degree checked; v' + (2, ..., 2) by default.

  Returns:
    An OracleReport listing every disagreement.
  """
  n = modules.n
  d_n = modules.chain_module
  domain = d_n.domain
  if bound is None:
    bound = default_bound(stabilization_grade(mf))
  presentation = shifted_boundary.build_shifted_boundary(
      mf, n, domain, d_n.order)
  above = shifted_boundary.build_shifted_boundary(mf, n + 1, domain,
                                                  d_n.order)
  kernels = oracle_syzygy_degreewise(presentation.columns,
                                     modules.syzygies.source, bound)
  mismatches = []
  for u, kernel in kernels.items():
    checks = [
        ("syzygies", kernel.basis,
         degree_piece(modules.syzygies.generators, u)),
        ("cycles",
         [shifted_boundary.embed_into_D(mf, n, s, d_n) for s in kernel.basis],
         degree_piece(modules.cycles.generators, u)),
        ("boundaries", degree_piece(above.columns, u),
         degree_piece(modules.boundaries.generators, u)),
    ]
    for name, reference, computed in checks:
      mismatch = _compare(name, u, reference, computed, domain)
      if mismatch:
        mismatches.append(mismatch)
  _LOGGER_.debug("Oracle checked %d degrees in dimension %d: %d mismatches",
                 len(kernels), n, len(mismatches))
  return OracleReport(n, tuple(bound), len(kernels), tuple(mismatches))
