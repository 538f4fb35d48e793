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
"""Command-line entry point: python3 -m cli <command> [arguments].

Commands:
  validate  check that every simplex enters after its faces
  homology  boundaries, cycles and homology per dimension
  matrices  boundary and shifted boundary matrices
  generate  ellipse bifiltration of a point cloud
  bench     timings of the pipeline on random bifiltrations

Exit statuses: 0 success, 1 invalid input data, 2 I/O or internal errors.
"""

import argparse
import sys
from typing import Optional, Sequence

from common import verbosity
from . import bench
from . import generate
from . import homology
from . import inputs
from . import matrices
from . import validate

COMMANDS = {
    "validate": validate,
    "homology": homology,
    "matrices": matrices,
    "generate": generate,
    "bench": bench,
}


def initialize_command_line_args(
    args: Optional[Sequence[str]] = None) -> argparse.Namespace:
  """Parses the command and its arguments."""
  parser = argparse.ArgumentParser(
      prog="mpgb",
      description="Multiparameter persistent homology via Groebner bases.")
  subparsers = parser.add_subparsers(dest="command", required=True)
  for name, command in COMMANDS.items():
    subparser = subparsers.add_parser(
        name, help=command.__doc__.splitlines()[0])
    command.add_arguments(subparser)
  return parser.parse_args(args)


def main(args: Optional[Sequence[str]] = None) -> int:
  parsed_args = initialize_command_line_args(args)
  verbosity.configure(parsed_args)
  return inputs.guarded(COMMANDS[parsed_args.command].run, parsed_args)


if __name__ == "__main__":
  sys.exit(main())
