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
"""Executable and reusable benchmark of the pipeline on random inputs.

For each requested size draws a random non one-critical bifiltration with at
least that many simplices, times every stage and prints a table, followed by
the slope of a least-squares line through log(total time) against
log(simplices).

Usage:
  python3 -m cli.bench --sizes 25,50,100,200 --seed 7
"""

import argparse
import dataclasses
import math
import sys
import time
from typing import List, Optional, Sequence

import numpy as np

from common import grades
from common import verbosity
from filtration.multifiltration import Multifiltration
from filtration.random_multifiltration import random_multifiltration
from homology.persistence_modules import compute_persistence_modules
from presentation import shifted_boundary
from . import inputs

STAGES = ("presentation", "boundaries", "cycles", "homology")


@dataclasses.dataclass(frozen=True)
class BenchRow:
  """Timings of one benchmark input, in seconds."""
  size: int
  simplices: int
  fundamental_elements: int
  presentation: float
  boundaries: float
  cycles: float
  homology: float

  @property
  def total(self) -> float:
    return sum(getattr(self, stage) for stage in STAGES)


def bench_input(size: int,
                seed: Optional[int] = None,
                grades_per_simplex: int = 2) -> Multifiltration:
  """The smallest drawn bifiltration with at least size simplices.

  Every simplex carries grades_per_simplex pairwise incomparable grades.
  """
  num_vertices = 1
  while True:
    mf = random_multifiltration(
        num_vertices,
        r=2,
        max_dimension=2,
        grades_per_simplex=grades_per_simplex,
        max_grade=4,
        seed=seed,
        incomparable=True)
    if len(mf) >= size:
      return mf
    num_vertices += 1


def bench_one(size: int,
              seed: Optional[int] = None,
              grades_per_simplex: int = 2,
              max_workers: Optional[int] = None) -> BenchRow:
  mf = bench_input(size, seed, grades_per_simplex)
  start = time.perf_counter()
  fundamental = 0
  for n in range(mf.dimension + 2):
    fundamental += len(shifted_boundary.build_shifted_boundary(mf, n))
  presentation = time.perf_counter() - start
  modules = compute_persistence_modules(mf, max_workers=max_workers)
  totals = {stage: 0.0 for stage in STAGES[1:]}
  for dimension in modules.dimensions:
    for stage in totals:
      totals[stage] += dimension.timings.get(stage, 0.0)
  return BenchRow(size, len(mf), fundamental, presentation, **totals)


def run_benchmark(sizes: Sequence[int],
                  seed: Optional[int] = None,
                  grades_per_simplex: int = 2,
                  max_workers: Optional[int] = None) -> List[BenchRow]:
  return [
      bench_one(size, seed, grades_per_simplex, max_workers)
      for size in sizes
  ]


def log_log_slope(rows: Sequence[BenchRow]) -> Optional[float]:
  """Fitted exponent of total time against simplices; None if undefined."""
  points = [(r.simplices, r.total) for r in rows if r.total > 0]
  if len({s for s, _ in points}) < 2:
    return None
  x = np.log([s for s, _ in points])
  y = np.log([t for _, t in points])
  slope, _ = np.polyfit(x, y, 1)
  return float(slope)


def format_table(rows: Sequence[BenchRow]) -> str:
  header = ("size", "simplices", "fundamental") + STAGES + ("total",)
  lines = [" ".join(f"{h:>12}" for h in header)]
  for row in rows:
    counts = (row.size, row.simplices, row.fundamental_elements)
    times = tuple(getattr(row, stage) for stage in STAGES) + (row.total,)
    lines.append(" ".join(f"{c:>12d}" for c in counts) + " " +
                 " ".join(f"{t:>12.6f}" for t in times))
  return "\n".join(lines)


def add_arguments(parser: argparse.ArgumentParser):
  """Registers the "bench" arguments."""
  parser.add_argument(
      "--sizes",
      type=grades.positive_ints,
      default=(25, 50, 100, 200),
      help="comma-separated minimum simplex counts (default: 25,50,100,200)")
  parser.add_argument(
      "--seed", type=int, default=0, help="random seed (default: 0)")
  parser.add_argument(
      "--grades",
      type=int,
      default=2,
      help="entry grades drawn per simplex (default: 2)")
  verbosity.add_argument_verbosity(parser)


def cmd_bench(sizes: Sequence[int],
              seed: Optional[int] = 0,
              grades_per_simplex: int = 2) -> int:
  """Prints the timing table and the fitted log-log slope."""
  if grades_per_simplex < 1:
    inputs.error("--grades must be at least 1")
    return inputs.EXIT_ERROR
  rows = run_benchmark(sizes, seed, grades_per_simplex)
  print(format_table(rows))
  slope = log_log_slope(rows)
  if slope is None or not math.isfinite(slope):
    print("log-log slope: undefined")
  else:
    print(f"log-log slope: {slope:.3f}")
  return inputs.EXIT_OK


def run(args: argparse.Namespace) -> int:
  return cmd_bench(args.sizes, args.seed, args.grades)


def main(args: Optional[Sequence[str]] = None) -> int:
  parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
  add_arguments(parser)
  parsed_args = parser.parse_args(args)
  verbosity.configure(parsed_args)
  return inputs.guarded(run, parsed_args)


if __name__ == "__main__":
  sys.exit(main())
