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
"""Buchberger's algorithm with simultaneous syzygy computation.

Each basis element is tracked together with its cofactor over the inputs;
every S-vector that reduces to zero leaves its cofactor behind as a syzygy.
Together with the pairs of all same-position leading monomials this yields a
generating set of the syzygy module (Schreyer).
"""

import dataclasses
from typing import Optional, Sequence, Tuple

from algebra import free_module
from algebra.errors import BasisMismatchError
from algebra.free_module import FreeModule
from algebra.free_module import FreeModuleElement
from algebra.orders import MonomialOrder
from . import buchberger as buchberger_lib


@dataclasses.dataclass(frozen=True)
class SyzygyBasis:
  """Generators of Syz(f_1, ..., f_m).

  Attributes:
    source: The graded free module R^m; basis element i has degree deg(f_i).
    generators: Syzygies s = sum s_i e_i with sum s_i f_i = 0.
    inputs: The elements f_1..f_m.
  """
  source: FreeModule
  generators: Tuple[FreeModuleElement, ...]
  inputs: Tuple[FreeModuleElement, ...]

  def __len__(self) -> int:
    return len(self.generators)

  def __iter__(self):
    return iter(self.generators)


def evaluate(s: FreeModuleElement,
             inputs: Sequence[FreeModuleElement],
             target: FreeModule) -> FreeModuleElement:
  """Returns sum_i s_i f_i in the target module.

  Raises:
    BasisMismatchError: s has more basis positions than there are inputs.
  """
  if s.module.rank != len(inputs):
    raise BasisMismatchError(
        f"a source of rank {s.module.rank} cannot evaluate {len(inputs)} "
        "inputs")
  total = target.zero()
  for term in s.terms:
    total = total + free_module.elem_scale(inputs[term.basis],
                                           term.coefficient, term.monomial)
  return total


def buchberger_with_syzygy(
    generators: Sequence[FreeModuleElement],
    order: Optional[MonomialOrder] = None,
    module: Optional[FreeModule] = None,
    source: Optional[FreeModule] = None,
    full_reduction: bool = True,
    check_homogeneity: bool = False
) -> Tuple[buchberger_lib.GroebnerBasis, SyzygyBasis]:
  """Computes a Groebner basis of <F> and generators of Syz(F) together.

  Args:
    generators: f_1..f_m, elements of one free module.
    order: Monomial order; defaults to the module's order.
    module: Ambient module, needed only when generators is empty.
    source: Graded source module R^m to express syzygies in; by default
      basis element i is labelled i and graded like f_i.
    full_reduction: Tail-reduce remainders.
    check_homogeneity: Debug mode homogeneity checks.

  Returns:
    (G, S): a Groebner basis of <F> with cofactors, and the syzygy basis.

  Raises:
    BasisMismatchError: The source rank differs from the number of inputs.
    HomogeneityError: In debug mode, an engine element is not homogeneous.
  """
  module = buchberger_lib.ambient_module(generators, order, module)
  generators = buchberger_lib.rebased(generators, module)
  if source is None:
    source = buchberger_lib.source_module(generators, module)
  else:
    if source.rank != len(generators):
      raise BasisMismatchError(
          f"source of rank {source.rank} for {len(generators)} generators")
    source = source.with_order(module.order)
  engine = buchberger_lib.BuchbergerEngine(
      module, source, track_cofactors=True,
      check_homogeneity=check_homogeneity)
  engine.add_inputs(generators)
  engine.run(full_reduction=full_reduction)
  return (engine.groebner_basis(),
          SyzygyBasis(source, tuple(engine.syzygies), tuple(generators)))
