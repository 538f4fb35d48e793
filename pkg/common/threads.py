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
"""Support for the MPGB_THREADS worker cap."""

import os
from typing import Mapping, Optional

THREADS_ENV = "MPGB_THREADS"


def thread_count(environ: Optional[Mapping[str, str]] = None) -> int:
  """Returns the worker cap for per-dimension parallelism.

  MPGB_THREADS overrides the number of CPUs; values below 1 count as 1 and
  unparsable values are ignored.
  """
  if environ is None:
    environ = os.environ
  default = os.cpu_count() or 1
  value = environ.get(THREADS_ENV)
  if value is None:
    return default
  try:
    return max(1, int(value))
  except ValueError:
    return default
