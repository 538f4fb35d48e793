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
"""Critical coordinates and fundamental elements of a multifiltration.

A simplex entering at several incomparable grades contributes one generator
of the chain module C_n per minimal grade. These generators, the fundamental
elements, index the columns of the shifted boundary matrices and the basis of
the graded source module R^{|F_n|}.
"""

import dataclasses
from typing import Tuple

from sympy.polys.domains import QQ
from sympy.polys.domains.domain import Domain

from algebra.free_module import FreeModule
from algebra.free_module import GradedBasisElement
from algebra.monomials import Grade
from algebra.orders import DEFAULT_ORDER
from algebra.orders import MonomialOrder
from filtration.multifiltration import Multifiltration
from filtration.multifiltration import Simplex


@dataclasses.dataclass(frozen=True)
class FundamentalElement:
  """The copy of a simplex born at one of its critical coordinates."""
  simplex: Simplex
  grade: Grade

  def __str__(self) -> str:
    return f"{self.simplex}@({','.join(str(g) for g in self.grade)})"


def critical_coordinates(mf: Multifiltration,
                         simplex: Simplex) -> Tuple[Grade, ...]:
  """The minimal entry grades of a simplex, lexicographically sorted.

  Raises:
    UnknownSimplexError: The simplex is not listed.
  """
  return mf.entry_grades(simplex)


def fundamental_elements(mf: Multifiltration,
                         n: int) -> Tuple[FundamentalElement, ...]:
  """All fundamental elements of dimension n in canonical order.

  Simplices follow the canonical simplex order; the grades of one simplex
  follow lexicographic order.
  """
  return tuple(
      FundamentalElement(simplex, grade)
      for simplex in mf.simplices(n)
      for grade in critical_coordinates(mf, simplex))


def fundamental_module(mf: Multifiltration,
                       n: int,
                       domain: Domain = QQ,
                       order: MonomialOrder = DEFAULT_ORDER) -> FreeModule:
  """The graded free module with one generator per fundamental element.

  Basis element (simplex, v) sits in degree v and is labelled by its
  FundamentalElement.
  """
  return FreeModule(
      mf.r,
      tuple(
          GradedBasisElement(element, element.grade)
          for element in fundamental_elements(mf, n)), domain, order)
