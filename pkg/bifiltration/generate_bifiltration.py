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
"""Ellipse bifiltrations of planar point clouds.

A k-simplex on points p_0..p_k enters at the grid grades where the ellipses
of every pair of its points meet (a flag complex per grade). The entry region
of a simplex is an up-set of the grid, and its minimal grades are found by a
staircase scan: for every b index the smallest a index inside the region.
Vertices enter at (0, 0). With a = b the construction is the Rips complex at
radius a.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from algebra.monomials import Grade
from algebra.monomials import minimal_elements
from filtration.multifiltration import Multifiltration
from filtration.multifiltration import Simplex
from filtration.multifiltration import canonicalize
from .ellipses import DEFAULT_TOLERANCE
from .ellipses import GridSpec
from .ellipses import PointCloud
from .ellipses import intersection_grid

_LOGGER_ = logging.getLogger(__name__)


class PointCloudError(ValueError):
  """A point cloud file is malformed."""


def staircase(region: np.ndarray) -> Tuple[Grade, ...]:
  """Minimal grades of an up-set given as a boolean (a, b) grid."""
  grades = []
  for j in range(region.shape[1]):
    column = region[:, j]
    if column.any():
      grades.append((int(np.argmax(column)), j))
  return minimal_elements(grades)


def generate_ellipse_bifiltration(
    cloud: PointCloud,
    grid: GridSpec,
    max_dim: int = 2,
    tolerance: float = DEFAULT_TOLERANCE) -> Multifiltration:
  """Builds the ellipse bifiltration of a point cloud on a grid.

  Args:
    cloud: Points and ellipse orientation; point i becomes vertex i.
    grid: Quantization of the semi-axes.
    max_dim: Largest simplex dimension.
    tolerance: Slack of the intersection test.

  Returns:
    A canonical, valid Multifiltration with r = 2. Simplices that never
    enter on the grid are omitted.

  Raises:
    ValueError: max_dim is negative.
  """
  if max_dim < 0:
    raise ValueError(f"max_dim must be nonnegative, got {max_dim}")
  n = len(cloud)
  regions: Dict[Tuple[int, ...], np.ndarray] = {}
  entries: List[Tuple[Simplex, Tuple[Grade, ...]]] = []
  for v in range(n):
    entries.append((Simplex((v,)), ((0, 0),)))
  layer: List[Tuple[int, ...]] = []
  if max_dim >= 1:
    for i in range(n):
      for j in range(i + 1, n):
        region = intersection_grid(cloud.points[i], cloud.points[j], grid,
                                   cloud.direction, tolerance)
        if region.any():
          regions[(i, j)] = region
          layer.append((i, j))
  for dimension in range(2, max_dim + 1):
    next_layer = []
    for simplex in layer:
      for v in range(simplex[-1] + 1, n):
        if not all((u, v) in regions for u in simplex):
          continue
        region = regions[simplex].copy()
        for u in simplex:
          region &= regions[(u, v)]
        if region.any():
          regions[simplex + (v,)] = region
          next_layer.append(simplex + (v,))
    _LOGGER_.debug("%d simplices of dimension %d", len(next_layer), dimension)
    layer = next_layer
  for vertices, region in regions.items():
    entries.append((Simplex(vertices), staircase(region)))
  return canonicalize(2, entries)


def _is_number(field: str) -> bool:
  try:
    float(field)
  except ValueError:
    return False
  return True


def _has_header(line: str) -> bool:
  return not any(_is_number(field) for field in line.split(","))


def load_point_cloud(path: str,
                     direction: Sequence[float] = (1.0, 0.0)) -> PointCloud:
  """Reads a CSV file of x,y rows, with an optional header line.

  Raises:
    OSError: The file cannot be read.
    PointCloudError: A row does not hold exactly two finite numbers.
  """
  with open(path, encoding="utf-8") as f:
    lines = [line for line in f if line.strip()]
  if lines and _has_header(lines[0]):
    lines = lines[1:]
  if not lines:
    return PointCloud(np.empty((0, 2)), direction)
  try:
    points = np.loadtxt(lines, delimiter=",", ndmin=2)
  except ValueError as e:
    raise PointCloudError(f"{path}: {e}") from e
  if points.shape[1] != 2:
    raise PointCloudError(
        f"{path}: expected 2 columns, found {points.shape[1]}")
  try:
    return PointCloud(points, direction)
  except ValueError as e:
    raise PointCloudError(f"{path}: {e}") from e


def save_point_cloud(cloud: PointCloud, path: str):
  np.savetxt(path, cloud.points, delimiter=",", header="x,y", comments="")


def random_point_cloud(count: int,
                       seed: Optional[int] = None,
                       direction: Sequence[float] = (1.0, 0.0),
                       scale: float = 1.0) -> PointCloud:
  """Uniform random points in the square [0, scale]^2."""
  rng = np.random.default_rng(seed)
  return PointCloud(rng.uniform(0.0, scale, size=(count, 2)), direction)
