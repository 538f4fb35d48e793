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
"""Intersections of congruent, co-oriented ellipses centred at data points.

Every point carries the same ellipse: semi-axis a along the unit direction v
and semi-axis b along v rotated by a right angle. Two such ellipses meet iff
the difference of their centres lies in the ellipse scaled by two, which in
the rotated frame reads (dx/a)^2 + (dy/b)^2 <= 4. A zero semi-axis is the
limit of this test: the matching component of the difference must vanish.
"""

import dataclasses
import math
from typing import Optional, Sequence, Tuple

import numpy as np

DEFAULT_TOLERANCE = 1e-9


def unit_direction(direction: Sequence[float]) -> Tuple[float, float]:
  """Normalizes a direction vector.

  Raises:
    ValueError: The vector is not two dimensional or has zero length.
  """
  vector = np.asarray(direction, dtype=float)
  if vector.shape != (2,):
    raise ValueError(f"direction {tuple(direction)} is not a plane vector")
  norm = float(np.linalg.norm(vector))
  if norm == 0 or not math.isfinite(norm):
    raise ValueError(f"direction {tuple(direction)} has no usable length")
  return (float(vector[0] / norm), float(vector[1] / norm))


@dataclasses.dataclass(frozen=True, eq=False)
class PointCloud:
  """Planar points and the common orientation of their ellipses.

  Attributes:
    points: Array of shape (n, 2).
    direction: Unit vector carrying the a semi-axis.
  """
  points: np.ndarray
  direction: Tuple[float, float] = (1.0, 0.0)

  def __post_init__(self):
    points = np.asarray(self.points, dtype=float).reshape(-1, 2)
    if not np.all(np.isfinite(points)):
      raise ValueError("point coordinates must be finite")
    object.__setattr__(self, "points", points)
    object.__setattr__(self, "direction", unit_direction(self.direction))

  def __len__(self) -> int:
    return len(self.points)


@dataclasses.dataclass(frozen=True)
class GridSpec:
  """Quantization of the (a, b) parameter plane.

  Grade (i, j) stands for the semi-axes (i * a_max / steps_a,
  j * b_max / steps_b); grade (0, 0) is the degenerate ellipse, a point.
  """
  a_max: float
  b_max: float
  steps_a: int
  steps_b: int

  def __post_init__(self):
    if not (self.a_max > 0 and self.b_max > 0):
      raise ValueError("a_max and b_max must be positive")
    if self.steps_a < 1 or self.steps_b < 1:
      raise ValueError("steps_a and steps_b must be positive")

  def axis_a(self, i: int) -> float:
    return i * (self.a_max / self.steps_a)

  def axis_b(self, j: int) -> float:
    return j * (self.b_max / self.steps_b)

  def axes(self) -> Tuple[np.ndarray, np.ndarray]:
    """All a values (length steps_a + 1) and all b values."""
    return (np.arange(self.steps_a + 1) * (self.a_max / self.steps_a),
            np.arange(self.steps_b + 1) * (self.b_max / self.steps_b))


def rotated_difference(p: Sequence[float], q: Sequence[float],
                       direction: Sequence[float]) -> Tuple[float, float]:
  """q - p in the frame (v, v rotated by a right angle)."""
  vx, vy = direction
  dx, dy = q[0] - p[0], q[1] - p[1]
  return (dx * vx + dy * vy, -dx * vy + dy * vx)


def _component(delta: float, axis: float, tolerance: float) -> float:
  if axis > 0:
    return (delta / axis)**2
  return 0.0 if abs(delta) <= tolerance else math.inf


def ellipse_intersects(p: Sequence[float],
                       q: Sequence[float],
                       a: float,
                       b: float,
                       direction: Sequence[float] = (1.0, 0.0),
                       tolerance: float = DEFAULT_TOLERANCE) -> bool:
  """Whether the ellipses with semi-axes (a, b) centred at p and q meet.

  Tangent ellipses meet.

  Raises:
    ValueError: A semi-axis is negative.
  """
  if a < 0 or b < 0:
    raise ValueError(f"negative semi-axis in ({a}, {b})")
  dx, dy = rotated_difference(p, q, unit_direction(direction))
  return (_component(dx, a, tolerance) + _component(dy, b, tolerance) <=
          4 + tolerance)


def edge_min_axis(p: Sequence[float],
                  q: Sequence[float],
                  direction: Sequence[float],
                  b: float,
                  tolerance: float = DEFAULT_TOLERANCE) -> Optional[float]:
  """The smallest a at which the ellipses of p and q meet for this b.

  Returns:
    |dx| / (2 sqrt(1 - (dy / 2b)^2)) when 2b exceeds |dy|; on the tangent
    boundary 2b = |dy| only a degenerate difference (dx = 0) meets, at a = 0;
    None when no a suffices.

  Raises:
    ValueError: b is negative.
  """
  if b < 0:
    raise ValueError(f"negative semi-axis {b}")
  dx, dy = rotated_difference(p, q, unit_direction(direction))
  dx, dy = abs(dx), abs(dy)
  if b == 0:
    return dx / 2 if dy <= tolerance else None
  ratio = dy / (2 * b)
  if ratio > 1 + tolerance:
    return None
  if ratio >= 1 - tolerance:
    return 0.0 if dx <= tolerance else None
  return dx / (2 * math.sqrt(1 - ratio * ratio))


def intersection_grid(p: Sequence[float],
                      q: Sequence[float],
                      grid: GridSpec,
                      direction: Sequence[float] = (1.0, 0.0),
                      tolerance: float = DEFAULT_TOLERANCE) -> np.ndarray:
  """ellipse_intersects at every grid grade.

  Returns:
    A boolean array of shape (steps_a + 1, steps_b + 1); entry (i, j) holds
    the test at the semi-axes of grade (i, j).
  """
  dx, dy = rotated_difference(p, q, unit_direction(direction))
  a, b = grid.axes()
  along = np.where(a > 0, (dx / np.where(a > 0, a, 1))**2,
                   0.0 if abs(dx) <= tolerance else np.inf)
  across = np.where(b > 0, (dy / np.where(b > 0, b, 1))**2,
                    0.0 if abs(dy) <= tolerance else np.inf)
  return along[:, np.newaxis] + across[np.newaxis, :] <= 4 + tolerance
