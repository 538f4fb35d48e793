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
"""Monomial orders on the module monomials x^u e_i of a free module.

Both schemes rank basis positions by index: a smaller index is a greater
position, so e_1 > e_2 > ... . Within a position (or across positions, for
term-over-position) monomials are compared with one of sympy's monomial
orders, with x_1 > x_2 > ... > x_r.
"""

import dataclasses
from typing import Any, Tuple

from sympy.polys.orderings import grevlex
from sympy.polys.orderings import grlex
from sympy.polys.orderings import lex

from .monomials import Grade

POSITION_OVER_TERM = "pot"
TERM_OVER_POSITION = "top"

_TIEBREAKS = {
    "grlex": grlex,
    "lex": lex,
    "grevlex": grevlex,
}

ORDER_NAMES = tuple(
    f"{scheme}-{tiebreak}"
    for scheme in (POSITION_OVER_TERM, TERM_OVER_POSITION)
    for tiebreak in _TIEBREAKS)

DEFAULT_ORDER_NAME = "pot-grlex"

# A module monomial x^u e_i, written (u, i) with a 0-based basis index.
ModuleMonomial = Tuple[Grade, int]


@dataclasses.dataclass(frozen=True)
class MonomialOrder:
  """A total, multiplicative well-order on module monomials.

  Attributes:
    scheme: "pot" (position first) or "top" (term first).
    tiebreak: Name of the monomial order, one of "grlex", "lex", "grevlex".
  """
  scheme: str = POSITION_OVER_TERM
  tiebreak: str = "grlex"

  def __post_init__(self):
    if self.scheme not in (POSITION_OVER_TERM, TERM_OVER_POSITION):
      raise ValueError(f"unknown order scheme {self.scheme!r}")
    if self.tiebreak not in _TIEBREAKS:
      raise ValueError(f"unknown monomial order {self.tiebreak!r}")

  @property
  def name(self) -> str:
    return f"{self.scheme}-{self.tiebreak}"

  def key(self, monomial: Grade, index: int) -> Tuple[Any, Any]:
    """Sort key: a greater key is a greater module monomial."""
    term_key = _TIEBREAKS[self.tiebreak](monomial)
    if self.scheme == POSITION_OVER_TERM:
      return (-index, term_key)
    return (term_key, -index)

  def monomial_key(self, monomial: Grade) -> Any:
    """Sort key of a bare monomial under the tiebreak order."""
    return _TIEBREAKS[self.tiebreak](monomial)

  def __str__(self) -> str:
    return self.name


DEFAULT_ORDER = MonomialOrder()


def parse_order(name: str) -> MonomialOrder:
  """Parses an order name such as "pot-grlex" or "top-lex".

  Raises:
    ValueError: Unknown order name.
  """
  scheme, sep, tiebreak = name.strip().lower().partition("-")
  if not sep:
    raise ValueError(
        f"invalid order {name!r} (valid: {', '.join(ORDER_NAMES)})")
  return MonomialOrder(scheme, tiebreak)


def order_compare(order: MonomialOrder, a: ModuleMonomial,
                  b: ModuleMonomial) -> int:
  """Compares two module monomials.

  Args:
    order: The active monomial order.
    a: Module monomial (u, i).
    b: Module monomial (v, j).

  Returns:
    1 if a > b, -1 if a < b, 0 if they are equal.
  """
  key_a = order.key(*a)
  key_b = order.key(*b)
  return (key_a > key_b) - (key_a < key_b)
