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
"""Reads and writes the line-based multifiltration format.

  # comment
  dim 2
  simplex 1 2 @ (0,2) (2,0)

The header fixes the parameter count r and must precede every simplex line.
Each simplex line lists vertex ids, then "@", then one or more grades.
"""

import logging
import os
import re
from typing import List, Tuple

from algebra.errors import DimensionError
from algebra.monomials import Grade
from .multifiltration import Multifiltration
from .multifiltration import Simplex
from .multifiltration import canonicalize

_LOGGER_ = logging.getLogger(__name__)

# Shipped sample: four vertices, five edges and one triangle, r = 2.
NON_ONE_CRITICAL_EXAMPLE = os.path.join(
    os.path.dirname(__file__), "example_input", "non_one_critical.txt")

_HEADER = re.compile(r"^dim\s+(\d+)$")
_GRADE = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)")


class MultifiltrationSyntaxError(ValueError):
  """The input does not follow the file format.

  Attributes:
    line_number: 1-based line of the offending input; 0 for the whole file.
  """

  def __init__(self, message: str, line_number: int = 0):
    self.line_number = line_number
    if line_number:
      message = f"line {line_number}: {message}"
    super().__init__(message)


def _parse_grades(text: str, line_number: int) -> List[Grade]:
  grades = []
  position = 0
  for match in _GRADE.finditer(text):
    if text[position:match.start()].strip():
      raise MultifiltrationSyntaxError(
          f"unexpected {text[position:match.start()].strip()!r}", line_number)
    grades.append(tuple(int(g) for g in match.group(1).split(",")))
    position = match.end()
  if text[position:].strip():
    raise MultifiltrationSyntaxError(
        f"unexpected {text[position:].strip()!r}", line_number)
  if not grades:
    raise MultifiltrationSyntaxError("empty grade set", line_number)
  return grades


def _parse_simplex(text: str, line_number: int) -> Simplex:
  tokens = text.split()
  if not tokens:
    raise MultifiltrationSyntaxError("simplex without vertices", line_number)
  if not all(token.isdigit() for token in tokens):
    raise MultifiltrationSyntaxError(
        f"vertex ids must be nonnegative integers: {text.strip()!r}",
        line_number)
  try:
    return Simplex.of(int(token) for token in tokens)
  except ValueError as e:
    raise MultifiltrationSyntaxError(str(e), line_number) from e


def parse_multifiltration(text: str) -> Multifiltration:
  """Parses a multifiltration file.

  Args:
    text: File contents.

  Returns:
    The canonical Multifiltration: sorted vertices, minimal antichains and
    canonical simplex order. Duplicate simplex lines merge their grades.

  Raises:
    MultifiltrationSyntaxError: Malformed line, missing or conflicting
      header, grade of the wrong length or empty grade set.
  """
  r = None
  entries: List[Tuple[Simplex, List[Grade]]] = []
  for line_number, raw in enumerate(text.splitlines(), start=1):
    line = raw.split("#", 1)[0].strip()
    if not line:
      continue
    header = _HEADER.match(line)
    if header:
      declared = int(header.group(1))
      if r is not None and declared != r:
        raise MultifiltrationSyntaxError(
            f"dim {declared} conflicts with dim {r}", line_number)
      if declared < 1:
        raise MultifiltrationSyntaxError("dim must be positive", line_number)
      r = declared
      continue
    keyword, *tail = line.split(None, 1)
    rest = tail[0] if tail else ""
    if keyword != "simplex":
      raise MultifiltrationSyntaxError(f"unknown statement {keyword!r}",
                                       line_number)
    if r is None:
      raise MultifiltrationSyntaxError("simplex before 'dim' header",
                                       line_number)
    if "@" not in rest:
      raise MultifiltrationSyntaxError("missing '@' before the grades",
                                       line_number)
    vertices, _, grade_text = rest.partition("@")
    simplex = _parse_simplex(vertices, line_number)
    grades = _parse_grades(grade_text, line_number)
    for grade in grades:
      if len(grade) != r:
        raise MultifiltrationSyntaxError(
            f"grade {grade} does not have {r} components", line_number)
    entries.append((simplex, grades))
  if r is None:
    raise MultifiltrationSyntaxError("missing 'dim' header")
  try:
    mf = canonicalize(r, entries)
  except (DimensionError, ValueError) as e:
    raise MultifiltrationSyntaxError(str(e)) from e
  _LOGGER_.debug("Parsed %d simplices with r=%d", len(mf), r)
  return mf


def _format_grade(grade: Grade) -> str:
  return "(" + ",".join(str(g) for g in grade) + ")"


def serialize_multifiltration(mf: Multifiltration) -> str:
  """Writes a multifiltration in canonical order, one simplex per line."""
  lines = [f"dim {mf.r}"]
  for simplex, grades in mf:
    vertices = " ".join(str(v) for v in simplex.vertices)
    lines.append(f"simplex {vertices} @ " +
                 " ".join(_format_grade(g) for g in grades))
  return "\n".join(lines) + "\n"


def load_multifiltration(path: str) -> Multifiltration:
  """Reads and parses a multifiltration file.

  Raises:
    OSError: The file cannot be read.
    MultifiltrationSyntaxError: The contents are malformed.
  """
  with open(path, encoding="utf-8") as f:
    return parse_multifiltration(f.read())
