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
"""Support for the --order argument shared by the commands."""

import argparse

from algebra import orders


def add_argument_order(parser: argparse.ArgumentParser):
  """Adds a shared command-line argument to the algebraic commands."""
  parser.add_argument(
      "--order",
      type=str,
      default=orders.DEFAULT_ORDER_NAME,
      choices=orders.ORDER_NAMES,
      help=f"module monomial order (default: {orders.DEFAULT_ORDER_NAME})",
  )


def order(name: str) -> orders.MonomialOrder:
  """Parses an --order value, reporting errors the argparse way."""
  try:
    return orders.parse_order(name)
  except ValueError as e:
    raise argparse.ArgumentTypeError(str(e)) from e
