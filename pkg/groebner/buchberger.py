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
"""Buchberger's algorithm for submodules of graded free modules.

The engine processes critical pairs with the normal selection strategy
(smallest lcm first under the module order, ties broken by pair indices), so
identical inputs always produce identical bases. Pairs whose leading
monomials sit in different basis positions are never enqueued.

When cofactors are tracked every basis element h carries s with
h = sum_i s_i f_i over the input generators, and pairs reducing to zero yield
syzygies; the pair criteria are then disabled, because a pruned pair would be
a lost syzygy generator.
"""

import dataclasses
import heapq
import logging
from typing import List, Optional, Sequence, Set, Tuple

from algebra import free_module
from algebra.free_module import FreeModule
from algebra.free_module import FreeModuleElement
from algebra.monomials import mono_divides
from algebra.monomials import mono_lcm
from algebra.monomials import mono_mul
from algebra.orders import MonomialOrder
from . import homogeneity
from . import reduction

_LOGGER_ = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class GroebnerBasis:
  """Generators of a submodule with the Buchberger property.

  Attributes:
    module: Ambient free module; carries the order and the field.
    generators: The basis elements.
    reduced: True if the basis is monic, minimal and inter-reduced.
    cofactors: When tracked, cofactors[i] expresses generators[i] over the
      input generators, as an element of the source module.
  """
  module: FreeModule
  generators: Tuple[FreeModuleElement, ...]
  reduced: bool = False
  cofactors: Optional[Tuple[FreeModuleElement, ...]] = None

  @property
  def order(self) -> MonomialOrder:
    return self.module.order

  def __len__(self) -> int:
    return len(self.generators)

  def __iter__(self):
    return iter(self.generators)


@dataclasses.dataclass(frozen=True)
class GroebnerCertificate:
  """Outcome of a Buchberger-criterion check.

  Attributes:
    is_groebner: True iff every S-vector reduces to zero.
    pair: Indices of a witnessing pair when the check fails.
    remainder: The nonzero remainder of that pair's S-vector.
  """
  is_groebner: bool
  pair: Optional[Tuple[int, int]] = None
  remainder: Optional[FreeModuleElement] = None

  def __bool__(self) -> bool:
    return self.is_groebner


class PairQueue:
  """Pending critical pairs, popped smallest lcm first."""

  def __init__(self, order: MonomialOrder):
    self._order = order
    self._heap = []
    self._pending: Set[Tuple[int, int]] = set()

  def __len__(self) -> int:
    return len(self._pending)

  def push(self, i: int, j: int, lcm: Tuple[int, ...], position: int):
    pair = (min(i, j), max(i, j))
    if pair in self._pending:
      return
    self._pending.add(pair)
    heapq.heappush(self._heap,
                   (self._order.key(lcm, position), pair[0], pair[1]))

  def pop(self) -> Tuple[int, int]:
    # Keys are "greater is greater"; the heap therefore stores the smallest
    # lcm first.
    _, i, j = heapq.heappop(self._heap)
    self._pending.discard((i, j))
    return i, j

  def is_pending(self, i: int, j: int) -> bool:
    return (min(i, j), max(i, j)) in self._pending


class BuchbergerEngine:
  """State of one Buchberger run (optionally with cofactors and syzygies).

  Args:
    module: Ambient module of the inputs.
    source: Source module R^m whose basis element i stands for input i;
      required when track_cofactors is set.
    track_cofactors: Keep h = sum s_i f_i for every basis element and record
      the syzygies produced by zero reductions.
    use_criteria: Skip pairs by the chain criterion (and the product criterion
      for single-position elements). Ignored while tracking cofactors.
    check_homogeneity: Debug mode: assert homogeneity of every engine element.
  """

  def __init__(self,
               module: FreeModule,
               source: Optional[FreeModule] = None,
               track_cofactors: bool = False,
               use_criteria: bool = True,
               check_homogeneity: bool = False):
    if track_cofactors and source is None:
      raise ValueError("cofactor tracking needs a source module")
    self.module = module
    self.source = source
    self.track_cofactors = track_cofactors
    self.use_criteria = use_criteria and not track_cofactors
    self.check_homogeneity = check_homogeneity
    self.basis: List[FreeModuleElement] = []
    self.cofactors: List[FreeModuleElement] = []
    self.syzygies: List[FreeModuleElement] = []
    self.queue = PairQueue(module.order)
    self.reductions = 0

  def _check(self, f: FreeModuleElement, where: str):
    if self.check_homogeneity:
      homogeneity.check_homogeneous(f, where)

  def _record_syzygy(self, s: FreeModuleElement):
    if s.terms:
      self._check(s, "syzygy")
      self.syzygies.append(s)

  def add_inputs(self, generators: Sequence[FreeModuleElement]):
    for index, f in enumerate(generators):
      self._check(f, "input")
      cofactor = None
      if self.track_cofactors:
        cofactor = self.source.basis_vector(index)
      if not f.terms:
        if cofactor is not None:
          self._record_syzygy(cofactor)
        continue
      self._add(f, cofactor)

  def _add(self, h: FreeModuleElement, cofactor: Optional[FreeModuleElement]):
    domain = self.module.domain
    scale = domain.quo(domain.one, h.lead.coefficient)
    h = free_module.elem_scale(h, scale)
    new_index = len(self.basis)
    self.basis.append(h)
    if cofactor is not None:
      self.cofactors.append(free_module.elem_scale(cofactor, scale))
    lead = h.lead
    for index, g in enumerate(self.basis[:-1]):
      g_lead = g.lead
      if g_lead.basis != lead.basis:
        continue
      lcm = mono_lcm(g_lead.monomial, lead.monomial)
      self.queue.push(index, new_index, lcm, lead.basis)

  def _single_position(self, f: FreeModuleElement) -> bool:
    return len({t.basis for t in f.terms}) == 1

  def _product_criterion(self, i: int, j: int) -> bool:
    # Only valid in the ideal-like case where both elements live in one
    # common basis position.
    f, g = self.basis[i], self.basis[j]
    if not (self._single_position(f) and self._single_position(g)):
      return False
    a, b = f.lead.monomial, g.lead.monomial
    return mono_mul(a, b) == mono_lcm(a, b)

  def _chain_criterion(self, i: int, j: int) -> bool:
    lead_i, lead_j = self.basis[i].lead, self.basis[j].lead
    lcm = mono_lcm(lead_i.monomial, lead_j.monomial)
    for k, g in enumerate(self.basis):
      if k in (i, j):
        continue
      g_lead = g.lead
      if (g_lead.basis == lead_i.basis and
          mono_divides(g_lead.monomial, lcm) and
          not self.queue.is_pending(i, k) and
          not self.queue.is_pending(j, k)):
        return True
    return False

  def run(self, full_reduction: bool = True):
    """Processes pairs until the queue is empty."""
    skipped = 0
    while len(self.queue):
      i, j = self.queue.pop()
      if self.use_criteria and (self._product_criterion(i, j) or
                                self._chain_criterion(i, j)):
        skipped += 1
        continue
      first = (self.basis[i],
               self.cofactors[i] if self.track_cofactors else None)
      second = (self.basis[j],
                self.cofactors[j] if self.track_cofactors else None)
      h, s = reduction.tracked_s_vector(first, second)
      self._check(h, "s-vector")
      h, s = reduction.tracked_reduce(
          (h, s), self.basis,
          self.cofactors if self.track_cofactors else None,
          full=full_reduction)
      self.reductions += 1
      self._check(h, "remainder")
      if h.terms:
        if s is not None:
          self._check(s, "cofactor")
        self._add(h, s)
      elif s is not None:
        self._record_syzygy(s)
    _LOGGER_.debug("buchberger: %d elements, %d reductions, %d pairs skipped",
                   len(self.basis), self.reductions, skipped)

  def groebner_basis(self) -> GroebnerBasis:
    return GroebnerBasis(
        self.module, tuple(self.basis), reduced=False,
        cofactors=tuple(self.cofactors) if self.track_cofactors else None)


def ambient_module(generators: Sequence[FreeModuleElement],
                   order: Optional[MonomialOrder],
                   module: Optional[FreeModule]) -> FreeModule:
  if module is None:
    if not generators:
      raise ValueError("the ambient module of an empty generator list is "
                       "unknown; pass module=")
    module = generators[0].module
  if order is not None:
    module = module.with_order(order)
  return module


def rebased(generators: Sequence[FreeModuleElement],
             module: FreeModule) -> List[FreeModuleElement]:
  return [f if f.module.same_as(module) else f.rebase(module)
          for f in generators]


def buchberger(generators: Sequence[FreeModuleElement],
               order: Optional[MonomialOrder] = None,
               module: Optional[FreeModule] = None,
               full_reduction: bool = True,
               use_criteria: bool = True,
               track_cofactors: bool = False,
               check_homogeneity: bool = False) -> GroebnerBasis:
  """Computes a Groebner basis of the submodule generated by the inputs.

  Args:
    generators: Elements of one free module; zero elements are dropped.
    order: Monomial order; defaults to the module's order.
    module: Ambient module, needed only when generators is empty.
    full_reduction: Tail-reduce remainders.
    use_criteria: Apply the pair criteria.
    track_cofactors: Record how each basis element combines the inputs.
    check_homogeneity: Debug mode homogeneity checks.

  Returns:
    A (not necessarily reduced) Groebner basis of the same submodule.

  Raises:
    BasisMismatchError: The generators live in different modules.
    HomogeneityError: In debug mode, an engine element is not homogeneous.
  """
  module = ambient_module(generators, order, module)
  generators = rebased(generators, module)
  source = None
  if track_cofactors:
    source = source_module(generators, module)
  engine = BuchbergerEngine(
      module, source, track_cofactors=track_cofactors,
      use_criteria=use_criteria, check_homogeneity=check_homogeneity)
  engine.add_inputs(generators)
  engine.run(full_reduction=full_reduction)
  return engine.groebner_basis()


def source_module(generators: Sequence[FreeModuleElement],
                  module: FreeModule) -> FreeModule:
  """The free module R^m with basis element i graded like input i.

  Zero inputs get the zero grade.
  """
  degrees = []
  for f in generators:
    degrees.append(free_module.multidegree(f) if f.terms else
                   (0,) * module.r)
  return FreeModule(
      module.r,
      tuple(
          free_module.GradedBasisElement(index, degree)
          for index, degree in enumerate(degrees)), module.domain,
      module.order)


def reduce_basis(basis: GroebnerBasis) -> GroebnerBasis:
  """Returns the reduced Groebner basis of the submodule spanned by the basis.

  Elements are repeatedly reduced against all the others until none changes,
  then made monic. For a Groebner basis this yields the unique reduced
  basis for the order. Generators are returned in descending order of their
  leading monomials.
  """
  module = basis.module
  current = [free_module.monic(g) for g in basis.generators if g.terms]
  changed = True
  while changed:
    changed = False
    for index, g in enumerate(current):
      others = current[:index] + current[index + 1:]
      remainder = reduction.tracked_reduce((g, None), others)[0]
      if remainder != g:
        current = others
        if remainder.terms:
          current.append(free_module.monic(remainder))
        changed = True
        break
  key = module.order.key
  current.sort(key=lambda g: key(g.lead.monomial, g.lead.basis), reverse=True)
  return GroebnerBasis(module, tuple(current), reduced=True)


def is_groebner(generators: Sequence[FreeModuleElement],
                order: Optional[MonomialOrder] = None) -> GroebnerCertificate:
  """Checks the Buchberger criterion directly.

  Every S-vector of two elements whose leading monomials share a basis
  position must reduce to zero over the elements.

  Args:
    generators: Nonzero elements of one module.
    order: Order to check under; defaults to the module's order.

  Returns:
    A certificate, true iff the elements form a Groebner basis; otherwise it
    names a pair whose S-vector has a nonzero remainder.
  """
  if not generators:
    return GroebnerCertificate(True)
  module = ambient_module(generators, order, None)
  elements = rebased(generators, module)
  for j in range(len(elements)):
    for i in range(j):
      if elements[i].lead.basis != elements[j].lead.basis:
        continue
      s = reduction.s_vector(elements[i], elements[j])
      remainder = reduction.reduce(s, elements)
      if remainder.terms:
        return GroebnerCertificate(False, (i, j), remainder)
  return GroebnerCertificate(True)
