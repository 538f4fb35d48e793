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
"""Equality of submodules by mutual reduction."""

import dataclasses
from typing import Optional, Sequence

from algebra.errors import BasisMismatchError
from algebra.free_module import FreeModule
from algebra.free_module import FreeModuleElement
from algebra.orders import MonomialOrder
from groebner import buchberger
from groebner import reduction


@dataclasses.dataclass(frozen=True)
class ModuleEquality:
  """Outcome of a submodule comparison.

  Attributes:
    equal: True iff both generator sets span the same submodule.
    witness: When unequal, a generator of one side outside the other.
  """
  equal: bool
  witness: Optional[FreeModuleElement] = None

  def __bool__(self) -> bool:
    return self.equal


def _ambient(a: Sequence[FreeModuleElement], b: Sequence[FreeModuleElement],
             module: Optional[FreeModule]) -> FreeModule:
  elements = list(a) + list(b)
  if module is None:
    if not elements:
      raise ValueError("pass module= to compare two empty generator sets")
    module = elements[0].module
  for f in elements:
    if (f.module.r != module.r or f.module.basis != module.basis or
        f.module.domain != module.domain):
      raise BasisMismatchError("generators live in different free modules")
  return module


def first_non_member(elements: Sequence[FreeModuleElement],
                     basis: buchberger.GroebnerBasis
                    ) -> Optional[FreeModuleElement]:
  """The first element not reducing to zero over a Groebner basis."""
  for f in elements:
    if reduction.reduce(f, basis.generators, basis.order).terms:
      return f
  return None


def module_equal(a: Sequence[FreeModuleElement],
                 b: Sequence[FreeModuleElement],
                 order: Optional[MonomialOrder] = None,
                 module: Optional[FreeModule] = None) -> ModuleEquality:
  """Decides whether <a> = <b>.

  Args:
    a: Generators of the first submodule.
    b: Generators of the second submodule.
    order: Order for the Groebner bases; the module's order by default.
    module: Ambient module, needed only when both sides are empty.

  Returns:
    A ModuleEquality; when unequal the witness is an element of b outside
    <a> or, failing that, an element of a outside <b>.

  Raises:
    BasisMismatchError: The generators live in different free modules.
  """
  module = _ambient(a, b, module)
  if order is not None:
    module = module.with_order(order)
  a = buchberger.rebased(a, module)
  b = buchberger.rebased(b, module)
  witness = first_non_member(b, buchberger.buchberger(a, module=module))
  if witness is None:
    witness = first_non_member(a, buchberger.buchberger(b, module=module))
  return ModuleEquality(witness is None, witness)
