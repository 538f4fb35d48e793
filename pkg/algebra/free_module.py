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
"""Graded free modules over k[x_1, ..., x_r] and their elements.

A FreeModule is the context object of every computation: it fixes the
parameter count r, the graded basis, the coefficient field and the monomial
order. Elements of different FreeModule objects never mix silently.

Elements are immutable and canonical: their terms are sorted strictly
descending under the module's order, with no zero coefficients and no
repeated (monomial, basis) pairs. The zero element has no terms.
"""

import dataclasses
from typing import Any, Dict, Hashable, Iterable, Mapping, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.domains.domain import Domain

from . import fields
from .errors import BasisMismatchError
from .errors import DimensionError
from .errors import UndefinedLeadingTermError
from .monomials import Grade
from .monomials import mono_mul
from .monomials import zero_grade
from .orders import DEFAULT_ORDER
from .orders import ModuleMonomial
from .orders import MonomialOrder

# Coefficient dictionary keyed by module monomial (u, i).
TermDict = Dict[ModuleMonomial, Any]


@dataclasses.dataclass(frozen=True)
class GradedBasisElement:
  """A basis element e_i of a free module.

  Attributes:
    label: Opaque identifier (a simplex, a fundamental element, ...).
    degree: Multidegree of e_i.
  """
  label: Hashable
  degree: Grade


@dataclasses.dataclass(frozen=True)
class ModuleTerm:
  """A term c * x^u * e_i with c nonzero."""
  coefficient: Any
  monomial: Grade
  basis: int


@dataclasses.dataclass(frozen=True)
class FreeModule:
  """A finitely generated graded free module R^N with R = k[x_1..x_r].

  Attributes:
    r: Number of indeterminates (parameters).
    basis: Graded basis elements e_1..e_N (stored 0-based).
    domain: Coefficient field (sympy domain).
    order: Monomial order on x^u e_i.
  """
  r: int
  basis: Tuple[GradedBasisElement, ...] = ()
  domain: Domain = QQ
  order: MonomialOrder = DEFAULT_ORDER

  def __post_init__(self):
    for element in self.basis:
      if len(element.degree) != self.r:
        raise DimensionError(
            f"basis element {element.label!r} has degree {element.degree} "
            f"in a module with r={self.r}")

  @property
  def rank(self) -> int:
    return len(self.basis)

  def degree(self, index: int) -> Grade:
    return self.basis[index].degree

  def label(self, index: int) -> Hashable:
    return self.basis[index].label

  def with_order(self, order: MonomialOrder) -> "FreeModule":
    if order == self.order:
      return self
    return dataclasses.replace(self, order=order)

  def same_as(self, other: "FreeModule") -> bool:
    return self is other or self == other

  def zero(self) -> "FreeModuleElement":
    return FreeModuleElement(self, ())

  def element(
      self, terms: Iterable[Tuple[Any, Sequence[int], int]]
  ) -> "FreeModuleElement":
    """Builds an element from (coefficient, monomial, basis index) triples.

    Coefficients may be ints or domain elements; equal module monomials are
    merged.

    Raises:
      DimensionError: A monomial has the wrong length.
      IndexError: A basis index is out of range.
    """
    merged: TermDict = {}
    for coefficient, monomial, index in terms:
      key = (self._check_monomial(monomial), self._check_index(index))
      c = self.domain.convert(coefficient)
      merged[key] = merged[key] + c if key in merged else c
    return element_from_dict(self, merged)

  def basis_vector(self, index: int, monomial: Optional[Sequence[int]] = None,
                   coefficient: Any = 1) -> "FreeModuleElement":
    """Returns coefficient * x^monomial * e_index."""
    if monomial is None:
      monomial = zero_grade(self.r)
    return self.element([(coefficient, monomial, index)])

  def _check_monomial(self, monomial: Sequence[int]) -> Grade:
    grade = tuple(int(e) for e in monomial)
    if len(grade) != self.r:
      raise DimensionError(
          f"monomial {grade} does not have r={self.r} exponents")
    if any(e < 0 for e in grade):
      raise ValueError(f"monomial {grade} has a negative exponent")
    return grade

  def _check_index(self, index: int) -> int:
    if not 0 <= index < self.rank:
      raise IndexError(f"basis index {index} out of range 0..{self.rank - 1}")
    return index


@dataclasses.dataclass(frozen=True, eq=False)
class FreeModuleElement:
  """An element of a FreeModule, as a canonical descending term sequence."""
  module: FreeModule
  terms: Tuple[ModuleTerm, ...]

  def __bool__(self) -> bool:
    return bool(self.terms)

  def __eq__(self, other: object) -> bool:
    if not isinstance(other, FreeModuleElement):
      return NotImplemented
    return self.module.same_as(other.module) and self.terms == other.terms

  def __hash__(self) -> int:
    return hash(self.terms)

  def __add__(self, other: "FreeModuleElement") -> "FreeModuleElement":
    return elem_add(self, other)

  def __sub__(self, other: "FreeModuleElement") -> "FreeModuleElement":
    return elem_sub(self, other)

  def __neg__(self) -> "FreeModuleElement":
    return elem_neg(self)

  def __str__(self) -> str:
    return render(self)

  def __repr__(self) -> str:
    return f"FreeModuleElement({render(self)})"

  @property
  def is_zero(self) -> bool:
    return not self.terms

  @property
  def lead(self) -> ModuleTerm:
    if not self.terms:
      raise UndefinedLeadingTermError("the zero element has no leading term")
    return self.terms[0]

  def to_dict(self) -> TermDict:
    return {(t.monomial, t.basis): t.coefficient for t in self.terms}

  def rebase(self, module: FreeModule) -> "FreeModuleElement":
    """Re-sorts this element into a compatible module, e.g. another order.

    Raises:
      BasisMismatchError: The modules have different bases or fields.
    """
    if (module.r != self.module.r or module.basis != self.module.basis or
        module.domain != self.module.domain):
      raise BasisMismatchError("cannot rebase into an unrelated module")
    return element_from_dict(module, self.to_dict())


def element_from_dict(module: FreeModule,
                      coefficients: Mapping[ModuleMonomial,
                                            Any]) -> "FreeModuleElement":
  """Canonical element from a coefficient dictionary of domain elements."""
  is_zero = module.domain.is_zero
  key = module.order.key
  items = [(k, c) for k, c in coefficients.items() if not is_zero(c)]
  items.sort(key=lambda item: key(*item[0]), reverse=True)
  return FreeModuleElement(
      module,
      tuple(ModuleTerm(c, monomial, index) for (monomial, index), c in items))


def _check_same_module(f: FreeModuleElement, g: FreeModuleElement):
  if not f.module.same_as(g.module):
    raise BasisMismatchError("elements belong to different free modules")


def elem_add(f: FreeModuleElement, g: FreeModuleElement) -> FreeModuleElement:
  """Returns f + g.

  Raises:
    BasisMismatchError: f and g live in different modules.
  """
  _check_same_module(f, g)
  if not g.terms:
    return f
  if not f.terms:
    return g
  merged = f.to_dict()
  for t in g.terms:
    key = (t.monomial, t.basis)
    merged[key] = merged[key] + t.coefficient if key in merged else t.coefficient
  return element_from_dict(f.module, merged)


def elem_neg(f: FreeModuleElement) -> FreeModuleElement:
  return FreeModuleElement(
      f.module,
      tuple(ModuleTerm(-t.coefficient, t.monomial, t.basis) for t in f.terms))


def elem_sub(f: FreeModuleElement, g: FreeModuleElement) -> FreeModuleElement:
  return elem_add(f, elem_neg(g))


def elem_scale(f: FreeModuleElement, c: Any,
               u: Optional[Grade] = None) -> FreeModuleElement:
  """Returns c * x^u * f.

  Multiplication by a monomial preserves the order of terms, so no sort is
  needed.

  Args:
    f: Element to scale.
    c: Scalar (int or domain element); zero gives the zero element.
    u: Monomial exponent; defaults to the unit monomial.

  Raises:
    DimensionError: u does not have r components.
  """
  module = f.module
  c = module.domain.convert(c)
  if module.domain.is_zero(c):
    return module.zero()
  if u is None:
    u = zero_grade(module.r)
  elif len(u) != module.r:
    raise DimensionError(f"monomial {tuple(u)} does not have r={module.r} "
                         "exponents")
  return FreeModuleElement(
      module,
      tuple(
          ModuleTerm(c * t.coefficient, mono_mul(t.monomial, u), t.basis)
          for t in f.terms))


def elem_sub_scaled(f: FreeModuleElement, g: FreeModuleElement, c: Any,
                    u: Grade) -> FreeModuleElement:
  """Returns f - c * x^u * g in one merge."""
  _check_same_module(f, g)
  merged = f.to_dict()
  for t in g.terms:
    key = (mono_mul(t.monomial, u), t.basis)
    delta = c * t.coefficient
    merged[key] = merged[key] - delta if key in merged else -delta
  return element_from_dict(f.module, merged)


def leading_term(
    f: FreeModuleElement,
    order: Optional[MonomialOrder] = None) -> Tuple[ModuleMonomial, Any]:
  """Returns (LM(f), LC(f)), the greatest module monomial and its coefficient.

  Args:
    f: Nonzero element.
    order: Order to use; defaults to the order of f's module.

  Raises:
    UndefinedLeadingTermError: f is zero.
  """
  if order is not None and order != f.module.order:
    f = f.rebase(f.module.with_order(order))
  lead = f.lead
  return (lead.monomial, lead.basis), lead.coefficient


def monic(f: FreeModuleElement) -> FreeModuleElement:
  """Returns f scaled so that its leading coefficient is one."""
  if not f.terms:
    return f
  domain = f.module.domain
  return elem_scale(f, domain.quo(domain.one, f.lead.coefficient))


def term_multidegree(module: FreeModule, term: ModuleTerm) -> Grade:
  return mono_mul(term.monomial, module.degree(term.basis))


def multidegree(f: FreeModuleElement) -> Grade:
  """Multidegree of the leading term of f.

  Raises:
    UndefinedLeadingTermError: f is zero.
  """
  return term_multidegree(f.module, f.lead)


def is_homogeneous(f: FreeModuleElement) -> bool:
  """True iff all terms of f share one multidegree (zero is homogeneous)."""
  if not f.terms:
    return True
  degree = multidegree(f)
  return all(term_multidegree(f.module, t) == degree for t in f.terms)


def shares_single_monomial(f: FreeModuleElement) -> bool:
  """True iff all terms of f carry the same monomial x^u."""
  return len({t.monomial for t in f.terms}) <= 1


def _render_monomial(monomial: Grade) -> str:
  return "*".join(f"x{i}^{e}" for i, e in enumerate(monomial, start=1))


def render(f: FreeModuleElement, labels: bool = False) -> str:
  """Renders f as "c*x1^a1*...*xr^ar*e_i + ...", greatest term first.

  Args:
    f: Element to render.
    labels: Name basis elements by their labels instead of 1-based indices.
  """
  if not f.terms:
    return "0"
  module = f.module
  rendered = []
  for t in f.terms:
    basis = module.label(t.basis) if labels else t.basis + 1
    factors = [fields.format_scalar(module.domain, t.coefficient)]
    if module.r:
      factors.append(_render_monomial(t.monomial))
    factors.append(f"e_{basis}")
    rendered.append("*".join(factors))
  return " + ".join(rendered)
