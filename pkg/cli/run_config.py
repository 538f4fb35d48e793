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
"""Settings of one "homology" run, gathered from the command line."""

import argparse
import dataclasses
from typing import Optional, Tuple

from sympy.polys.domains.domain import Domain

from algebra import fields
from algebra import orders
from algebra.monomials import Grade
from common import threads

OUTPUT_FORMATS = ("text", "json")


@dataclasses.dataclass(frozen=True)
class RunConfig:
  """What to compute and how to report it.

  Attributes:
    input_path: Multifiltration file.
    field: "q" or "gf:<p>".
    order: Order name, e.g. "pot-grlex".
    dimensions: Dimensions to compute; None for 0..dim X.
    output_format: "text" or "json".
    oracle: Cross-check every dimension with degreewise linear algebra.
    bound: Largest degree of the oracle; v' + (2, ..., 2) when None.
    debug: Homogeneity checks inside the Groebner engine.
    relations: Report relations among the homology generators.
    one_critical: Cross-check with the one-critical algorithm; the input must
      be one-critical.
    threads: Worker cap; MPGB_THREADS or the CPU count when None.
  """
  input_path: str
  field: str = fields.DEFAULT_FIELD_SPEC
  order: str = orders.DEFAULT_ORDER_NAME
  dimensions: Optional[Tuple[int, ...]] = None
  output_format: str = "text"
  oracle: bool = False
  bound: Optional[Grade] = None
  debug: bool = False
  relations: bool = False
  one_critical: bool = False
  threads: Optional[int] = None

  def __post_init__(self):
    if self.output_format not in OUTPUT_FORMATS:
      raise ValueError(f"unknown output format {self.output_format!r}")
    if self.dimensions is not None and any(n < 0 for n in self.dimensions):
      raise ValueError(f"negative dimension in {self.dimensions}")

  @property
  def domain(self) -> Domain:
    return fields.parse_field(self.field)

  @property
  def monomial_order(self) -> orders.MonomialOrder:
    return orders.parse_order(self.order)

  @property
  def max_workers(self) -> int:
    if self.threads is not None:
      return max(1, self.threads)
    return threads.thread_count()

  @classmethod
  def from_args(cls, args: argparse.Namespace) -> "RunConfig":
    return cls(
        input_path=args.input,
        field=args.field,
        order=args.order,
        dimensions=tuple(args.dim) if args.dim else None,
        output_format=args.format,
        oracle=args.oracle,
        bound=args.bound,
        debug=args.debug,
        relations=args.relations,
        one_critical=args.one_critical)
