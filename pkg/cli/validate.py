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
"""Executable and reusable command for checking a multifiltration file.

Prints "ok" and exits with 0 when every simplex has all its faces at each of
its entry grades; otherwise lists the violations and exits with 1.

Usage:
  python3 -m cli.validate filtration/example_input/non_one_critical.txt
"""

import argparse
import sys
from typing import Optional, Sequence

from common import verbosity
from filtration.validate import validate
from . import inputs


def add_arguments(parser: argparse.ArgumentParser):
  parser.add_argument("input", type=str, help="multifiltration file")
  verbosity.add_argument_verbosity(parser)


def cmd_validate(path: str) -> int:
  """Validates a multifiltration file.

  Args:
    path: Multifiltration file.

  Returns:
    EXIT_OK when valid, EXIT_INVALID with violations, EXIT_ERROR when the
    file cannot be read or parsed.
  """
  mf = inputs.load(path)
  if mf is None:
    return inputs.EXIT_ERROR
  report = validate(mf)
  if report.ok:
    print("ok")
    return inputs.EXIT_OK
  for violation in report.violations:
    print(violation)
  return inputs.EXIT_INVALID


def run(args: argparse.Namespace) -> int:
  return cmd_validate(args.input)


def main(args: Optional[Sequence[str]] = None) -> int:
  parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
  add_arguments(parser)
  parsed_args = parser.parse_args(args)
  verbosity.configure(parsed_args)
  return inputs.guarded(run, parsed_args)


if __name__ == "__main__":
  sys.exit(main())
