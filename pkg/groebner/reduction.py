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
"""S-vectors and multivariate division in free modules.

Every function optionally carries a cofactor along with the element being
transformed, so that callers can keep the identity h = sum_i s_i f_i exact
while h is reduced.
"""

from typing import Optional, Sequence, Tuple

from algebra import free_module
from algebra.free_module import FreeModuleElement
from algebra.monomials import mono_divides
from algebra.monomials import mono_lcm
from algebra.monomials import mono_quotient
from algebra.orders import MonomialOrder

# An element together with its cofactor over the original generators, or None
# when cofactors are not tracked.
Tracked = Tuple[FreeModuleElement, Optional[FreeModuleElement]]


def _with_order(f: FreeModuleElement,
                order: Optional[MonomialOrder]) -> FreeModuleElement:
  if order is None or order == f.module.order:
    return f
  return f.rebase(f.module.with_order(order))


def s_vector(f1: FreeModuleElement,
             f2: FreeModuleElement,
             order: Optional[MonomialOrder] = None) -> FreeModuleElement:
  """Returns s21*f1 - (LC(f1)/LC(f2))*s12*f2.

  Here s_ij = lcm(LM(f_i), LM(f_j)) / LM(f_j). When the leading monomials sit
  in different basis positions the lcm is undefined and the zero element is
  returned.

  Raises:
    UndefinedLeadingTermError: f1 or f2 is zero.
  """
  f1, f2 = _with_order(f1, order), _with_order(f2, order)
  return tracked_s_vector((f1, None), (f2, None))[0]


def tracked_s_vector(first: Tracked, second: Tracked) -> Tracked:
  """S-vector of two tracked elements, combining their cofactors alike."""
  f1, s1 = first
  f2, s2 = second
  lead1, lead2 = f1.lead, f2.lead
  if lead1.basis != lead2.basis:
    zero_cofactor = s1.module.zero() if s1 is not None else None
    return f1.module.zero(), zero_cofactor
  lcm = mono_lcm(lead1.monomial, lead2.monomial)
  s21 = mono_quotient(lcm, lead1.monomial)
  s12 = mono_quotient(lcm, lead2.monomial)
  c = f1.module.domain.quo(lead1.coefficient, lead2.coefficient)
  h = free_module.elem_sub_scaled(
      free_module.elem_scale(f1, 1, s21), f2, c, s12)
  s = None
  if s1 is not None:
    s = free_module.elem_sub_scaled(
        free_module.elem_scale(s1, 1, s21), s2, c, s12)
  return h, s


def _find_divisor(lead: free_module.ModuleTerm,
                  divisors: Sequence[FreeModuleElement]) -> int:
  for index, g in enumerate(divisors):
    g_lead = g.lead
    if g_lead.basis == lead.basis and mono_divides(g_lead.monomial,
                                                   lead.monomial):
      return index
  return -1


def tracked_reduce(
    tracked: Tracked,
    divisors: Sequence[FreeModuleElement],
    divisor_cofactors: Optional[Sequence[FreeModuleElement]] = None,
    full: bool = True) -> Tracked:
  """Divides a tracked element by the divisors.

  Args:
    tracked: (f, s) where s is the cofactor of f, or None.
    divisors: Nonzero elements g_1..g_t.
    divisor_cofactors: Cofactors of the divisors, required when s is not None.
    full: Also reduce the terms below the leading term.

  Returns:
    (remainder, cofactor): no term of the remainder (only its leading term,
    when full is False) is divisible by any LM(g_i), and the remainder equals
    f minus a module combination of the divisors.
  """
  f, s = tracked
  module = f.module
  domain = module.domain
  settled = []
  while f.terms:
    lead = f.lead
    index = _find_divisor(lead, divisors)
    if index < 0:
      if not full:
        break
      settled.append(lead)
      f = FreeModuleElement(module, f.terms[1:])
      continue
    g = divisors[index]
    c = domain.quo(lead.coefficient, g.lead.coefficient)
    u = mono_quotient(lead.monomial, g.lead.monomial)
    f = free_module.elem_sub_scaled(f, g, c, u)
    if s is not None:
      s = free_module.elem_sub_scaled(s, divisor_cofactors[index], c, u)
  # Settled terms are greater than every term left in f.
  return FreeModuleElement(module, tuple(settled) + f.terms), s


def reduce(f: FreeModuleElement,
           divisors: Sequence[FreeModuleElement],
           order: Optional[MonomialOrder] = None,
           full: bool = True) -> FreeModuleElement:
  """Returns the remainder of f on division by the divisors.

  Args:
    f: Element to reduce.
    divisors: Nonzero elements of the same module.
    order: Order to divide with; defaults to the order of f's module.
    full: Reduce every term, not only the leading one.
  """
  f = _with_order(f, order)
  divisors = [_with_order(g, order) for g in divisors]
  return tracked_reduce((f, None), divisors, full=full)[0]
