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
"""Exact coefficient fields: the rationals or a prime field GF(p)."""

from typing import Any

import sympy
from sympy.polys.domains import GF
from sympy.polys.domains import QQ
from sympy.polys.domains.domain import Domain

from .errors import FieldError

RATIONALS = QQ
DEFAULT_FIELD_SPEC = "q"


def parse_field(spec: str) -> Domain:
  """Parses a field specification.

  Args:
    spec: "q" for the rationals, or "gf:<p>" for the prime field of order p.

  Returns:
    The sympy domain. Prime fields use the nonnegative representatives
    0..p-1 so that printed coefficients are canonical.

  Raises:
    FieldError: Unknown specification, or p is not a prime.
  """
  text = spec.strip().lower()
  if text in ("q", "qq"):
    return QQ
  kind, _, order = text.partition(":")
  if kind != "gf" or not order.isdigit():
    raise FieldError(f"invalid field {spec!r} (expected 'q' or 'gf:<p>')")
  p = int(order)
  if not sympy.isprime(p):
    raise FieldError(f"field order {p} is not a prime")
  return GF(p, symmetric=False)


def field_spec(domain: Domain) -> str:
  """Inverse of parse_field."""
  if domain == QQ:
    return "q"
  return f"gf:{domain.mod}"


def format_scalar(domain: Domain, c: Any) -> str:
  """Formats a scalar exactly: "3", "-1/2", or a residue "0".."p-1"."""
  return str(domain.to_sympy(c))


def parse_scalar(domain: Domain, text: str) -> Any:
  """Parses "p/q" or an integer into a domain element.

  Raises:
    FieldError: Not an exact rational, or its denominator vanishes in the field.
  """
  try:
    value = sympy.Rational(text.strip())
  except (TypeError, ValueError, SyntaxError, sympy.SympifyError) as e:
    raise FieldError(f"invalid coefficient {text!r}") from e
  numerator = domain.convert(int(value.p))
  denominator = domain.convert(int(value.q))
  if domain.is_zero(denominator):
    raise FieldError(f"coefficient {text!r} is undefined over {domain}")
  return domain.quo(numerator, denominator)
