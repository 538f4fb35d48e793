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
"""Tests for the "validate" command."""

import io
import os
import tempfile
import unittest
from unittest import mock

from filtration import parse_multifiltration
from . import inputs
from . import validate


class CommandTestCase(unittest.TestCase):
  """Captures standard output and error, and owns a scratch directory."""

  def setUp(self):
    super().setUp()
    for stream in ("stdout", "stderr"):
      patcher = mock.patch(f"sys.{stream}", new_callable=io.StringIO)
      setattr(self, stream, patcher.start())
      self.addCleanup(patcher.stop)
    self.directory = tempfile.TemporaryDirectory()
    self.addCleanup(self.directory.cleanup)

  def write(self, name, text):
    path = os.path.join(self.directory.name, name)
    with open(path, "w", encoding="utf-8") as f:
      f.write(text)
    return path


class ValidateCommandTest(CommandTestCase):

  def test_example(self):
    status = validate.cmd_validate(
        parse_multifiltration.NON_ONE_CRITICAL_EXAMPLE)
    self.assertEqual(status, inputs.EXIT_OK)
    self.assertEqual(self.stdout.getvalue(), "ok\n")

  def test_missing_face(self):
    path = self.write("hollow.txt", ("dim 2\n"
                                     "simplex 0 @ (0,0)\n"
                                     "simplex 0 1 @ (1,1)\n"))
    self.assertEqual(validate.cmd_validate(path), inputs.EXIT_INVALID)
    self.assertEqual(self.stdout.getvalue(),
                     "[0,1] at (1,1): unlisted face [1]\n")

  def test_late_face(self):
    path = self.write("late.txt", ("dim 2\n"
                                   "simplex 0 @ (0,0)\n"
                                   "simplex 1 @ (2,0)\n"
                                   "simplex 0 1 @ (1,1)\n"))
    self.assertEqual(validate.cmd_validate(path), inputs.EXIT_INVALID)
    self.assertIn("face enters later [1]", self.stdout.getvalue())

  def test_nonexistent_path(self):
    path = os.path.join(self.directory.name, "absent.txt")
    self.assertEqual(validate.cmd_validate(path), inputs.EXIT_ERROR)
    self.assertIn("cannot read", self.stderr.getvalue())

  def test_syntax_error(self):
    path = self.write("broken.txt", "dim 2\nsimplex 0 (0,0)\n")
    self.assertEqual(validate.cmd_validate(path), inputs.EXIT_ERROR)
    self.assertIn("line 2", self.stderr.getvalue())

  @mock.patch("logging.basicConfig")
  def test_main(self, unused_basic_config):
    status = validate.main(
        ["-q", parse_multifiltration.NON_ONE_CRITICAL_EXAMPLE])
    self.assertEqual(status, inputs.EXIT_OK)


if __name__ == "__main__":
  unittest.main()
