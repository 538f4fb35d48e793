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
"""Support for the -v/--verbose and -q/--quiet logging arguments."""

import argparse
import logging

LOG_FORMAT = "%(asctime)s:%(levelname)s:%(name)s:%(message)s"


def add_argument_verbosity(parser: argparse.ArgumentParser):
  """Adds the shared logging arguments to a command."""
  group = parser.add_mutually_exclusive_group()
  group.add_argument(
      "-v", "--verbose", action="store_true",
      help="log debug messages (engine statistics, stage timings)")
  group.add_argument(
      "-q", "--quiet", action="store_true", help="log warnings only")


def level(args: argparse.Namespace) -> int:
  if getattr(args, "verbose", False):
    return logging.DEBUG
  if getattr(args, "quiet", False):
    return logging.WARNING
  return logging.INFO


def configure(args: argparse.Namespace):
  """Configures the root logger once per process, logging to stderr."""
  logging.basicConfig(level=level(args), format=LOG_FORMAT)
