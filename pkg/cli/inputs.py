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
"""Exit statuses and input loading shared by the commands."""

import argparse
import logging
import sys
from typing import Callable, Optional

from filtration import parse_multifiltration
from filtration.multifiltration import Multifiltration

_LOGGER_ = logging.getLogger(__name__)

EXIT_OK = 0
# Validation violations, or a one-critical input required but not given.
EXIT_INVALID = 1
# I/O, syntax, malformed CSV, oracle disagreement, internal errors.
EXIT_ERROR = 2


def error(message: str):
  print(f"Error: {message}", file=sys.stderr)


def load(path: str) -> Optional[Multifiltration]:
  """Loads a multifiltration file, reporting failures on stderr.

  Returns:
    The multifiltration, or None after printing why it could not be read.
  """
  try:
    mf = parse_multifiltration.load_multifiltration(path)
  except OSError as e:
    error(f"cannot read {path}: {e.strerror or e}")
    return None
  except parse_multifiltration.MultifiltrationSyntaxError as e:
    error(f"{path}: {e}")
    return None
  _LOGGER_.info("Loaded %s: %d simplices, r = %d", path, len(mf), mf.r)
  return mf


def guarded(run: Callable[[argparse.Namespace], int],
            args: argparse.Namespace) -> int:
  """Runs a command, turning unexpected exceptions into EXIT_ERROR."""
  try:
    return run(args)
  except Exception:  # pylint: disable=broad-except
    _LOGGER_.exception("Internal error")
    return EXIT_ERROR
