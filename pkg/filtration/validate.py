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
"""Checks that every X_v of a multifiltration is a simplicial complex."""

import dataclasses
from typing import Optional, Tuple

from algebra.monomials import Grade
from algebra.monomials import precedes
from .multifiltration import Multifiltration
from .multifiltration import Simplex

UNLISTED_FACE = "unlisted face"
LATE_FACE = "face enters later"


@dataclasses.dataclass(frozen=True)
class Violation:
  """A simplex present at a grade whose face is not.

  Attributes:
    simplex: The coface.
    grade: Entry grade of the coface at which the face is missing.
    missing_face: The face absent from X_grade.
    reason: UNLISTED_FACE or LATE_FACE.
  """
  simplex: Simplex
  grade: Grade
  missing_face: Simplex
  reason: str = LATE_FACE

  def __str__(self) -> str:
    grade = ",".join(str(g) for g in self.grade)
    return (f"{self.simplex} at ({grade}): {self.reason} "
            f"{self.missing_face}")


@dataclasses.dataclass(frozen=True)
class ValidationReport:
  violations: Tuple[Violation, ...] = ()

  @property
  def ok(self) -> bool:
    return not self.violations

  def __bool__(self) -> bool:
    return self.ok


def _missing(mf: Multifiltration, face: Simplex,
             grade: Grade) -> Optional[str]:
  if face not in mf:
    return UNLISTED_FACE
  if not any(precedes(w, grade) for w in mf.entry_grades(face)):
    return LATE_FACE
  return None


def validate(mf: Multifiltration) -> ValidationReport:
  """Checks the closure and monotonicity of a multifiltration.

  For every simplex, every codimension one face and every entry grade v of
  the simplex, the face must be listed with an entry grade preceding v.
  Faces of higher codimension follow by induction.

  Returns:
    A report listing every violation in canonical simplex order; violations
    are data, never errors.
  """
  violations = []
  for simplex, grades in mf:
    for grade in grades:
      for face in simplex.faces():
        reason = _missing(mf, face, grade)
        if reason:
          violations.append(Violation(simplex, grade, face, reason))
  return ValidationReport(tuple(violations))
