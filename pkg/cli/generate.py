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
"""Executable and reusable command generating ellipse bifiltrations.

Reads a CSV of planar points (optionally with an "x,y" header) and writes the
bifiltration by the two semi-axes of congruent ellipses with a common
orientation, quantized on a grid.

Usage:
  python3 -m cli.generate points.csv --direction 1,0 --grid 2,2,20,20 \
      --max-dim 2 --out bifiltration.txt
"""

import argparse
import sys
from typing import Optional, Sequence

from bifiltration import generate_bifiltration
from bifiltration.ellipses import GridSpec
from common import grades
from common import verbosity
from filtration.parse_multifiltration import serialize_multifiltration
from . import inputs


def grid(text: str) -> GridSpec:
  """argparse type for "a_max,b_max,steps_a,steps_b"."""
  a_max, b_max, steps_a, steps_b = grades.floats(4)(text)
  if not (steps_a.is_integer() and steps_b.is_integer()):
    raise argparse.ArgumentTypeError(f"grid steps must be integers: {text!r}")
  try:
    return GridSpec(a_max, b_max, int(steps_a), int(steps_b))
  except ValueError as e:
    raise argparse.ArgumentTypeError(str(e)) from e


def add_arguments(parser: argparse.ArgumentParser):
  """Registers the "generate" arguments."""
  parser.add_argument("points", type=str, help="CSV file of x,y rows")
  parser.add_argument(
      "--direction",
      type=grades.floats(2),
      default=(1.0, 0.0),
      help="direction of the a semi-axis as dx,dy (default: 1,0)")
  parser.add_argument(
      "--grid",
      type=grid,
      required=True,
      help="parameter grid as a_max,b_max,steps_a,steps_b")
  parser.add_argument(
      "--max-dim",
      type=int,
      default=2,
      help="largest simplex dimension (default: 2)")
  parser.add_argument(
      "--out",
      type=str,
      help="output multifiltration file (default: standard output)")
  verbosity.add_argument_verbosity(parser)


def cmd_generate(points: str,
                 grid_spec: GridSpec,
                 direction: Sequence[float] = (1.0, 0.0),
                 max_dim: int = 2,
                 out: Optional[str] = None) -> int:
  """Writes the ellipse bifiltration of a point cloud file.

  Returns:
    EXIT_OK, or EXIT_ERROR for a malformed CSV, a bad direction or an
    unwritable output.
  """
  try:
    cloud = generate_bifiltration.load_point_cloud(points, direction)
  except OSError as e:
    inputs.error(f"cannot read {points}: {e.strerror or e}")
    return inputs.EXIT_ERROR
  except ValueError as e:
    inputs.error(str(e))
    return inputs.EXIT_ERROR
  if max_dim < 0:
    inputs.error(f"--max-dim must be nonnegative, got {max_dim}")
    return inputs.EXIT_ERROR
  mf = generate_bifiltration.generate_ellipse_bifiltration(
      cloud, grid_spec, max_dim)
  text = serialize_multifiltration(mf)
  if out is None:
    sys.stdout.write(text)
    return inputs.EXIT_OK
  try:
    with open(out, "w", encoding="utf-8") as f:
      f.write(text)
  except OSError as e:
    inputs.error(f"cannot write {out}: {e.strerror or e}")
    return inputs.EXIT_ERROR
  print(f"{len(mf)} simplices written to {out}", file=sys.stderr)
  return inputs.EXIT_OK


def run(args: argparse.Namespace) -> int:
  return cmd_generate(args.points, args.grid, args.direction, args.max_dim,
                      args.out)


def main(args: Optional[Sequence[str]] = None) -> int:
  parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
  add_arguments(parser)
  parsed_args = parser.parse_args(args)
  verbosity.configure(parsed_args)
  return inputs.guarded(run, parsed_args)


if __name__ == "__main__":
  sys.exit(main())
