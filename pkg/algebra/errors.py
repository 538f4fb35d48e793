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
"""Exceptions raised by the exact algebra layer."""


class AlgebraError(Exception):
  """Base class for all algebra errors."""


class DimensionError(AlgebraError, ValueError):
  """Grades or monomials of different lengths were combined."""


class BasisMismatchError(AlgebraError, ValueError):
  """Elements of different free modules were combined."""


class UndefinedLeadingTermError(AlgebraError, ValueError):
  """The leading term of the zero element was requested."""


class FieldError(AlgebraError, ValueError):
  """Unknown or unsupported coefficient field."""
