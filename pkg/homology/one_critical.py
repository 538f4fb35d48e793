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
"""The classical algorithm for one-critical multifiltrations.

When every simplex has a single entry grade, C_n is free on the n-simplices
with e_simplex in the degree of the simplex, and the boundary is a matrix of
signed monomials x^{deg simplex - deg face}. Boundaries, cycles and homology
are computed on these matrices directly and then moved into D_n by
e_simplex -> x^{deg simplex} e_simplex, so that they can be compared with the
general pipeline.
"""

import dataclasses
from typing import Tuple

from sympy.polys.domains import QQ
from sympy.polys.domains.domain import Domain

from algebra.free_module import FreeModule
from algebra.free_module import FreeModuleElement
from algebra.free_module import GradedBasisElement
from algebra.monomials import mono_mul
from algebra.monomials import mono_quotient
from algebra.orders import DEFAULT_ORDER
from algebra.orders import MonomialOrder
from filtration.multifiltration import Multifiltration
from filtration.multifiltration import is_one_critical
from groebner import buchberger
from groebner import syzygy
from groebner.buchberger import GroebnerBasis
from presentation import shifted_boundary
from . import persistence_modules


class NotOneCriticalError(ValueError):
  """A simplex has more than one entry grade."""


def graded_chain_module(mf: Multifiltration,
                        n: int,
                        domain: Domain = QQ,
                        order: MonomialOrder = DEFAULT_ORDER) -> FreeModule:
  """C_n with e_simplex in the unique entry grade of the simplex."""
  return FreeModule(
      mf.r,
      tuple(
          GradedBasisElement(simplex, mf.entry_grades(simplex)[0])
          for simplex in mf.simplices(n)), domain, order)


def boundary_columns(mf: Multifiltration, source: FreeModule,
                     target: FreeModule) -> Tuple[FreeModuleElement, ...]:
  """Columns of the boundary C_n -> C_{n-1} as signed monomial vectors."""
  positions = {target.label(i): i for i in range(target.rank)}
  columns = []
  for index in range(source.rank):
    simplex = source.label(index)
    degree = source.degree(index)
    columns.append(
        target.element(((-1)**i,
                         mono_quotient(degree, target.degree(positions[face])),
                         positions[face])
                       for i, face in enumerate(simplex.faces())))
  return tuple(columns)


def to_chain_module(f: FreeModuleElement,
                    target: FreeModule) -> FreeModuleElement:
  """Maps C_n into D_n by e_simplex -> x^{deg simplex} e_simplex."""
  module = f.module
  return target.element((t.coefficient, mono_mul(t.monomial,
                                                  module.degree(t.basis)),
                         t.basis) for t in f.terms)


@dataclasses.dataclass(frozen=True)
class OneCriticalModules:
  """Results of one dimension, moved into D_n.

  Attributes:
    n: Dimension.
    boundaries: Reduced Groebner basis of the boundaries in D_n.
    cycles: Reduced Groebner basis of the cycles in D_n.
    homology: Normal forms of the cycles modulo the boundaries.
  """
  n: int
  boundaries: GroebnerBasis
  cycles: GroebnerBasis
  homology: Tuple[FreeModuleElement, ...]


def one_critical_dimension(mf: Multifiltration,
                           n: int,
                           domain: Domain = QQ,
                           order: MonomialOrder = DEFAULT_ORDER,
                           check_homogeneity: bool = False
                          ) -> OneCriticalModules:
  """Runs the one-critical algorithm in dimension n.

  Raises:
    NotOneCriticalError: Some simplex has several entry grades.
  """
  if not is_one_critical(mf):
    raise NotOneCriticalError("the multifiltration is not one-critical")
  c_n = graded_chain_module(mf, n, domain, order)
  d_n = shifted_boundary.chain_module(mf, n, domain, order)

  above = graded_chain_module(mf, n + 1, domain, order)
  basis = buchberger.buchberger(
      boundary_columns(mf, above, c_n), module=c_n,
      check_homogeneity=check_homogeneity)
  boundaries = buchberger.buchberger(
      [to_chain_module(g, d_n) for g in basis.generators], module=d_n)

  if n == 0:
    cycles_c = [c_n.basis_vector(i) for i in range(c_n.rank)]
  else:
    below = graded_chain_module(mf, n - 1, domain, order)
    _, syzygies = syzygy.buchberger_with_syzygy(
        boundary_columns(mf, c_n, below), module=below, source=c_n,
        check_homogeneity=check_homogeneity)
    cycles_c = list(syzygies.generators)
  cycles = buchberger.buchberger([to_chain_module(z, d_n) for z in cycles_c],
                                 module=d_n)

  boundaries = buchberger.reduce_basis(boundaries)
  cycles = buchberger.reduce_basis(cycles)
  return OneCriticalModules(
      n, boundaries, cycles,
      persistence_modules.homology_generators(boundaries, cycles))
