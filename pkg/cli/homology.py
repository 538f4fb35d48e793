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
"""Executable and reusable command computing persistence modules.

For every requested dimension n prints the stabilization grade v', the
counts |F_n| and d_n, the reduced Groebner bases of x^{v'}B_n and x^{v'}Z_n,
the homology generators and the stage timings, as text or JSON.

Usage:
  python3 -m cli.homology filtration/example_input/non_one_critical.txt \
      --dim 1 --format json
"""

import argparse
import logging
import sys
from typing import List, Optional, Sequence

from algebra import free_module
from common import fields
from common import grades
from common import orders
from common import verbosity
from filtration.multifiltration import Multifiltration
from filtration.multifiltration import is_one_critical
from filtration.validate import validate
from groebner.homogeneity import HomogeneityError
from homology import export
from homology import oracle
from homology.module_equal import module_equal
from homology.one_critical import one_critical_dimension
from homology.persistence_modules import PersistenceModules
from homology.persistence_modules import compute_persistence_modules
from . import inputs
from .run_config import OUTPUT_FORMATS
from .run_config import RunConfig

_LOGGER_ = logging.getLogger(__name__)


def add_arguments(parser: argparse.ArgumentParser):
  """Registers the "homology" arguments."""
  parser.add_argument("input", type=str, help="multifiltration file")
  parser.add_argument(
      "--dim",
      type=int,
      action="append",
      help="dimension to compute, repeatable (default: all)")
  fields.add_argument_field(parser)
  orders.add_argument_order(parser)
  parser.add_argument(
      "--format",
      type=str,
      default="text",
      choices=OUTPUT_FORMATS,
      help="output format (default: text)")
  parser.add_argument(
      "--oracle",
      action="store_true",
      help="cross-check every degree with exact linear algebra")
  parser.add_argument(
      "--bound",
      type=grades.grade,
      help="largest degree of the oracle, e.g. '5,4' (default: v' + 2)")
  parser.add_argument(
      "--debug",
      action="store_true",
      help="check homogeneity of every Groebner engine element")
  parser.add_argument(
      "--relations",
      action="store_true",
      help="also report relations among the homology generators")
  parser.add_argument(
      "--one-critical",
      action="store_true",
      help=("cross-check with the one-critical algorithm; exits with 1 when "
            "the input is not one-critical"))
  verbosity.add_argument_verbosity(parser)


def _grade(grade: Sequence[int]) -> str:
  return "(" + ",".join(str(g) for g in grade) + ")"


def format_text(modules: PersistenceModules, relations: bool = False) -> str:
  """Human readable report; basis elements are named by their simplices."""
  lines = [
      f"v' = {_grade(modules.v_prime)}  field {modules.field}  "
      f"order {modules.order}"
  ]
  for dimension in modules.dimensions:
    lines.append(f"dimension {dimension.n}: {dimension.fundamental_count} "
                 f"fundamental elements, {dimension.simplex_count} simplices")
    sections = [
        ("boundaries", dimension.boundaries.generators),
        ("cycles", dimension.cycles.generators),
        ("homology", dimension.homology),
    ]
    for name, generators in sections:
      lines.append(f"  {name} ({len(generators)}):")
      lines.extend(
          f"    {free_module.render(g, labels=True)}" for g in generators)
    if relations:
      found = dimension.presentation().relations
      lines.append(f"  relations ({len(found)}):")
      lines.extend(f"    {free_module.render(r)}" for r in found)
    timings = " ".join(
        f"{stage}={seconds:.6f}"
        for stage, seconds in dimension.timings.items())
    lines.append(f"  seconds: {timings}")
  return "\n".join(lines)


def check_oracle(mf: Multifiltration, modules: PersistenceModules,
                 bound: Optional[Sequence[int]]) -> int:
  """Prints oracle disagreements; EXIT_ERROR when there are any."""
  status = inputs.EXIT_OK
  for dimension in modules.dimensions:
    report = oracle.compare_with_oracle(mf, dimension, bound)
    for mismatch in report.mismatches:
      inputs.error(f"oracle, dimension {dimension.n}: {mismatch}")
    if report.ok:
      _LOGGER_.info("Oracle agrees in dimension %d on %d degrees",
                    dimension.n, report.degrees_checked)
    else:
      status = inputs.EXIT_ERROR
  return status


def check_one_critical(mf: Multifiltration, modules: PersistenceModules,
                       config: RunConfig) -> int:
  """Compares the bases with those of the one-critical algorithm."""
  status = inputs.EXIT_OK
  for dimension in modules.dimensions:
    expected = one_critical_dimension(mf, dimension.n, config.domain,
                                      config.monomial_order, config.debug)
    comparisons = [
        ("boundaries", dimension.boundaries, expected.boundaries),
        ("cycles", dimension.cycles, expected.cycles),
    ]
    for name, computed, reference in comparisons:
      outcome = module_equal(reference.generators, computed.generators,
                             module=dimension.chain_module)
      if not outcome:
        inputs.error(f"one-critical {name} differ in dimension "
                     f"{dimension.n}: {outcome.witness}")
        status = inputs.EXIT_ERROR
  return status


def cmd_homology(config: RunConfig) -> int:
  """Runs the pipeline and prints the results.

  Args:
    config: What to compute and how to report it.

  Returns:
    EXIT_OK on success; EXIT_INVALID when the input fails validation or is
    not one-critical although config.one_critical is set; EXIT_ERROR on
    unreadable input, bad settings, failed debug checks or disagreement with
    a cross-check.
  """
  mf = inputs.load(config.input_path)
  if mf is None:
    return inputs.EXIT_ERROR
  report = validate(mf)
  if not report.ok:
    inputs.error(f"{config.input_path} is not a valid multifiltration")
    for violation in report.violations:
      print(violation, file=sys.stderr)
    return inputs.EXIT_INVALID
  if config.one_critical and not is_one_critical(mf):
    inputs.error(f"{config.input_path} is not one-critical")
    return inputs.EXIT_INVALID
  if config.bound is not None and len(config.bound) != mf.r:
    inputs.error(f"--bound needs {mf.r} components")
    return inputs.EXIT_ERROR
  try:
    domain, order = config.domain, config.monomial_order
  except ValueError as e:
    inputs.error(str(e))
    return inputs.EXIT_ERROR

  try:
    modules = compute_persistence_modules(mf, config.dimensions, domain,
                                          order, config.debug,
                                          config.max_workers)
  except HomogeneityError as e:
    inputs.error(f"homogeneity check failed: {e}")
    return inputs.EXIT_ERROR

  if config.output_format == "json":
    print(export.to_json(modules, config.relations))
  else:
    print(format_text(modules, config.relations))

  statuses: List[int] = [inputs.EXIT_OK]
  if config.oracle:
    statuses.append(check_oracle(mf, modules, config.bound))
  if config.one_critical:
    statuses.append(check_one_critical(mf, modules, config))
  return max(statuses)


def run(args: argparse.Namespace) -> int:
  try:
    config = RunConfig.from_args(args)
  except ValueError as e:
    inputs.error(str(e))
    return inputs.EXIT_ERROR
  return cmd_homology(config)


def main(args: Optional[Sequence[str]] = None) -> int:
  parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
  add_arguments(parser)
  parsed_args = parser.parse_args(args)
  verbosity.configure(parsed_args)
  return inputs.guarded(run, parsed_args)


if __name__ == "__main__":
  sys.exit(main())
