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
"""Shifted boundary matrices and the embedding of syzygies into D_n.

D_n is the free module on the n-simplices of X_{v'}, every generator in
degree zero. The shifted boundary of dimension n maps the graded source
R^{|F_n|} into D_{n-1}: the column of the fundamental element (simplex, v) is
x^v times the simplicial boundary of the simplex. Its image is the boundary
module B_{n-1} and its syzygies, pushed into D_n, are the cycles Z_n.
"""

import dataclasses
import logging
from typing import Dict, Iterable, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.domains.domain import Domain

from algebra.errors import BasisMismatchError
from algebra.free_module import FreeModule
from algebra.free_module import FreeModuleElement
from algebra.free_module import GradedBasisElement
from algebra.monomials import Grade
from algebra.monomials import mono_mul
from algebra.monomials import zero_grade
from algebra.orders import DEFAULT_ORDER
from algebra.orders import MonomialOrder
from filtration.multifiltration import Multifiltration
from filtration.multifiltration import Simplex
from .fundamental_elements import FundamentalElement
from .fundamental_elements import fundamental_module

_LOGGER_ = logging.getLogger(__name__)


def chain_module(mf: Multifiltration,
                 n: int,
                 domain: Domain = QQ,
                 order: MonomialOrder = DEFAULT_ORDER) -> FreeModule:
  """D_n: one degree zero generator per n-simplex, labelled by the simplex.

  For n < 0 or n above the dimension of the complex the module has rank 0.
  """
  zero = zero_grade(mf.r)
  return FreeModule(
      mf.r,
      tuple(GradedBasisElement(simplex, zero) for simplex in mf.simplices(n)),
      domain, order)


def _positions(simplices: Iterable[Simplex]) -> Dict[Simplex, int]:
  return {simplex: index for index, simplex in enumerate(simplices)}


@dataclasses.dataclass(frozen=True)
class IncidenceMatrix:
  """The scalar simplicial boundary of X_{v'} in dimension n.

  Attributes:
    n: Dimension of the column simplices.
    rows: The (n-1)-simplices.
    columns: The n-simplices.
    entries: Column-major; entries[j][i] is the incidence of rows[i] in the
      boundary of columns[j].
  """
  n: int
  rows: Tuple[Simplex, ...]
  columns: Tuple[Simplex, ...]
  entries: Tuple[Tuple[int, ...], ...]

  @property
  def shape(self) -> Tuple[int, int]:
    return (len(self.rows), len(self.columns))

  def column(self, j: int) -> Tuple[int, ...]:
    return self.entries[j]

  def to_rows(self) -> Tuple[Tuple[int, ...], ...]:
    """Row-major entries, one tuple per row simplex."""
    return tuple(
        tuple(column[i] for column in self.entries)
        for i in range(len(self.rows)))


def top_boundary(mf: Multifiltration, n: int) -> IncidenceMatrix:
  """The simplicial boundary with alternating signs over X_{v'}.

  The face omitting vertex i of a simplex gets the sign (-1)^i. For n = 0 the
  map goes to the zero module and has no rows.
  """
  rows = mf.simplices(n - 1)
  columns = mf.simplices(n)
  positions = _positions(rows)
  entries = []
  for simplex in columns:
    column = [0] * len(rows)
    for i, face in enumerate(simplex.faces()):
      column[positions[face]] = (-1)**i
    entries.append(tuple(column))
  return IncidenceMatrix(n, rows, columns, tuple(entries))


@dataclasses.dataclass(frozen=True)
class PresentationMatrix:
  """The shifted boundary of dimension n.

  Attributes:
    n: Dimension of the source simplices.
    source: The graded module R^{|F_n|}, labelled by fundamental elements.
    target: D_{n-1}.
    columns: One homogeneous element of the target per source generator.
  """
  n: int
  source: FreeModule
  target: FreeModule
  columns: Tuple[FreeModuleElement, ...]

  def __len__(self) -> int:
    return len(self.columns)

  @property
  def fundamental(self) -> Tuple[FundamentalElement, ...]:
    return tuple(element.label for element in self.source.basis)

  @property
  def column_degrees(self) -> Tuple[Grade, ...]:
    return tuple(element.degree for element in self.source.basis)


def build_shifted_boundary(mf: Multifiltration,
                           n: int,
                           domain: Domain = QQ,
                           order: MonomialOrder = DEFAULT_ORDER
                          ) -> PresentationMatrix:
  """Builds the shifted boundary of dimension n.

  The column of (simplex, v) is sum_i (-1)^i x^v e_{face_i}, an element of
  D_{n-1}. For n = 0 every column is zero in the rank 0 module D_{-1}.

  Args:
    mf: A validated multifiltration.
    n: Dimension of the source simplices.
    domain: Coefficient field.
    order: Monomial order of both modules.

  Returns:
    The PresentationMatrix with columns in canonical fundamental order.
  """
  source = fundamental_module(mf, n, domain, order)
  target = chain_module(mf, n - 1, domain, order)
  positions = _positions(mf.simplices(n - 1))
  columns = []
  for basis_element in source.basis:
    element: FundamentalElement = basis_element.label
    columns.append(
        target.element(((-1)**i, element.grade, positions[face])
                       for i, face in enumerate(element.simplex.faces())))
  _LOGGER_.debug("Shifted boundary in dimension %d: %d x %d", n, target.rank,
                 source.rank)
  return PresentationMatrix(n, source, target, tuple(columns))


def embed_into_D(mf: Multifiltration,  # pylint: disable=invalid-name
                 n: int,
                 s: FreeModuleElement,
                 target: Optional[FreeModule] = None) -> FreeModuleElement:
  """Maps an element of R^{|F_n|} into D_n.

  Each term c x^u e_{(simplex, v)} becomes c x^{u+v} e_simplex.

  Args:
    mf: The multifiltration the source module was built from.
    n: Dimension.
    s: Element over the fundamental module of dimension n.
    target: D_n to land in; built from mf with the field and order of s
      when omitted.

  Returns:
    The image of s; homogeneous whenever s is.

  Raises:
    BasisMismatchError: s does not live over the fundamental basis of
      dimension n, or the target is not D_n.
  """
  if target is None:
    target = chain_module(mf, n, s.module.domain, s.module.order)
  expected = fundamental_module(mf, n, s.module.domain, s.module.order)
  if s.module.basis != expected.basis:
    raise BasisMismatchError(
        f"element is not over the fundamental basis of dimension {n}")
  if tuple(element.label for element in target.basis) != mf.simplices(n):
    raise BasisMismatchError(f"target is not the chain module D_{n}")
  positions = _positions(mf.simplices(n))
  return target.element(
      (term.coefficient,
       mono_mul(term.monomial, s.module.degree(term.basis)),
       positions[s.module.label(term.basis).simplex]) for term in s.terms)


def embed_all(mf: Multifiltration, n: int,
              elements: Sequence[FreeModuleElement],
              target: FreeModule) -> Tuple[FreeModuleElement, ...]:
  return tuple(embed_into_D(mf, n, s, target) for s in elements)


def apply_boundary(mf: Multifiltration,
                   n: int,
                   f: FreeModuleElement,
                   target: Optional[FreeModule] = None) -> FreeModuleElement:
  """The differential of D_*: maps f in D_n to its boundary in D_{n-1}.

  Raises:
    BasisMismatchError: f does not live over the n-simplices of mf.
  """
  if tuple(element.label for element in f.module.basis) != mf.simplices(n):
    raise BasisMismatchError(f"element is not in the chain module D_{n}")
  if target is None:
    target = chain_module(mf, n - 1, f.module.domain, f.module.order)
  positions = _positions(target.label(i) for i in range(target.rank))
  return target.element(
      ((-1)**i * term.coefficient, term.monomial, positions[face])
      for term in f.terms
      for i, face in enumerate(f.module.label(term.basis).faces()))
