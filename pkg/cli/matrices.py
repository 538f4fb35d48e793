#!/usr/bin/env python3

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
"""Executable and reusable command printing boundary matrices.

For every requested dimension n prints the simplicial boundary of X_{v'}
(rows and columns named by simplices) and the shifted boundary, one column
per fundamental element, over the basis of D_{n-1}.

Usage:
  python3 -m cli.matrices filtration/example_input/non_one_critical.txt --dim 1
"""

import argparse
import json
import sys
from typing import Any, Dict, Iterable, List, Optional, Sequence

from sympy.polys.domains.domain import Domain

from algebra import fields as algebra_fields
from algebra import free_module
from algebra import orders as algebra_orders
from algebra.orders import MonomialOrder
from common import fields
from common import orders
from common import verbosity
from filtration.multifiltration import Multifiltration
from filtration.validate import validate
from homology import export
from presentation import shifted_boundary
from . import inputs
from .run_config import OUTPUT_FORMATS


def add_arguments(parser: argparse.ArgumentParser):
  """Registers the "matrices" arguments."""
  parser.add_argument("input", type=str, help="multifiltration file")
  parser.add_argument(
      "--dim",
      type=int,
      action="append",
      help="dimension to print, repeatable (default: all)")
  fields.add_argument_field(parser)
  orders.add_argument_order(parser)
  parser.add_argument(
      "--format",
      type=str,
      default="text",
      choices=OUTPUT_FORMATS,
      help="output format (default: text)")
  verbosity.add_argument_verbosity(parser)


def _vertices(simplices) -> List[List[int]]:
  return [list(s.vertices) for s in simplices]


def matrices_to_json(mf: Multifiltration, dimensions: Iterable[int],
                     domain: Domain, order: MonomialOrder) -> Dict[str, Any]:
  result = []
  for n in dimensions:
    boundary = shifted_boundary.top_boundary(mf, n)
    shifted = shifted_boundary.build_shifted_boundary(mf, n, domain, order)
    result.append({
        "n": n,
        "rows": _vertices(boundary.rows),
        "columns": _vertices(boundary.columns),
        "boundary": [list(row) for row in boundary.to_rows()],
        "shifted_boundary": [{
            "simplex": list(element.simplex.vertices),
            "grade": list(element.grade),
            "column": export.element_to_json(column),
        } for element, column in zip(shifted.fundamental, shifted.columns)],
    })
  return {"dimensions": result}


def matrices_to_text(mf: Multifiltration, dimensions: Iterable[int],
                     domain: Domain, order: MonomialOrder) -> str:
  lines = []
  for n in dimensions:
    boundary = shifted_boundary.top_boundary(mf, n)
    shifted = shifted_boundary.build_shifted_boundary(mf, n, domain, order)
    rows, columns = boundary.shape
    lines.append(f"dimension {n}")
    lines.append(f"  boundary ({rows} x {columns}):")
    lines.append("    " + " ".join(str(s) for s in boundary.columns))
    for simplex, row in zip(boundary.rows, boundary.to_rows()):
      lines.append(f"    {simplex}: " + " ".join(f"{e:2d}" for e in row))
    lines.append(
        f"  shifted boundary ({shifted.target.rank} x {len(shifted)}):")
    for element, column in zip(shifted.fundamental, shifted.columns):
      lines.append(f"    {element}: {free_module.render(column, labels=True)}")
  return "\n".join(lines)


def cmd_matrices(path: str,
                 dimensions: Optional[Sequence[int]] = None,
                 field: str = algebra_fields.DEFAULT_FIELD_SPEC,
                 order: str = algebra_orders.DEFAULT_ORDER_NAME,
                 output_format: str = "text") -> int:
  """Prints the boundary matrices of a multifiltration file.

  Returns:
    EXIT_OK, EXIT_INVALID for a multifiltration that fails validation, or
    EXIT_ERROR for unreadable input and bad settings.
  """
  mf = inputs.load(path)
  if mf is None:
    return inputs.EXIT_ERROR
  report = validate(mf)
  if not report.ok:
    inputs.error(f"{path} is not a valid multifiltration")
    for violation in report.violations:
      print(violation, file=sys.stderr)
    return inputs.EXIT_INVALID
  if dimensions is None:
    dimensions = range(mf.dimension + 1)
  dimensions = sorted(set(dimensions))
  if any(n < 0 for n in dimensions):
    inputs.error(f"negative dimension in {dimensions}")
    return inputs.EXIT_ERROR
  try:
    domain = fields.domain(field)
    monomial_order = orders.order(order)
  except argparse.ArgumentTypeError as e:
    inputs.error(str(e))
    return inputs.EXIT_ERROR
  if output_format == "json":
    print(
        json.dumps(
            matrices_to_json(mf, dimensions, domain, monomial_order),
            indent=2))
  else:
    print(matrices_to_text(mf, dimensions, domain, monomial_order))
  return inputs.EXIT_OK


def run(args: argparse.Namespace) -> int:
  return cmd_matrices(args.input, args.dim, args.field, args.order,
                      args.format)


def main(args: Optional[Sequence[str]] = None) -> int:
  parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
  add_arguments(parser)
  parsed_args = parser.parse_args(args)
  verbosity.configure(parsed_args)
  return inputs.guarded(run, parsed_args)


if __name__ == "__main__":
  sys.exit(main())
