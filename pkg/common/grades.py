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
"""Comma-separated numeric arguments such as grades "3,2"."""

import argparse
from typing import Tuple


def grade(text: str) -> Tuple[int, ...]:
  """argparse type for a grade of nonnegative integers, e.g. "3,2"."""
  try:
    values = tuple(int(part) for part in text.split(","))
  except ValueError as e:
    raise argparse.ArgumentTypeError(f"invalid grade {text!r}") from e
  if any(v < 0 for v in values):
    raise argparse.ArgumentTypeError(f"negative component in {text!r}")
  return values


def positive_ints(text: str) -> Tuple[int, ...]:
  """argparse type for a list of positive integers, e.g. "10,20,40"."""
  try:
    values = tuple(int(part) for part in text.split(","))
  except ValueError as e:
    raise argparse.ArgumentTypeError(f"invalid list {text!r}") from e
  if any(v < 1 for v in values):
    raise argparse.ArgumentTypeError(f"nonpositive value in {text!r}")
  return values


def floats(count: int):
  """argparse type for exactly count comma-separated reals."""

  def parse(text: str) -> Tuple[float, ...]:
    try:
      values = tuple(float(part) for part in text.split(","))
    except ValueError as e:
      raise argparse.ArgumentTypeError(f"invalid numbers {text!r}") from e
    if len(values) != count:
      raise argparse.ArgumentTypeError(
          f"expected {count} comma-separated values, got {text!r}")
    return values

  return parse
