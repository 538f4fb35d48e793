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
"""Support for the --field argument shared by the commands."""

import argparse

from sympy.polys.domains.domain import Domain

from algebra import fields


def add_argument_field(parser: argparse.ArgumentParser):
  """Adds a shared command-line argument to the algebraic commands."""
  parser.add_argument(
      "--field",
      type=str,
      default=fields.DEFAULT_FIELD_SPEC,
      help=("coefficient field: q for the rationals or gf:<p> for a prime p "
            f"(default: {fields.DEFAULT_FIELD_SPEC})"),
  )


def domain(spec: str) -> Domain:
  """Parses a --field value, reporting errors the argparse way."""
  try:
    return fields.parse_field(spec)
  except ValueError as e:
    raise argparse.ArgumentTypeError(str(e)) from e
