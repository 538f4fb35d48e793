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
"""Tests for the "validate" module."""

import unittest

from . import multifiltration
from . import parse_multifiltration
from . import validate

Simplex = multifiltration.Simplex


class ValidateTest(unittest.TestCase):

  def test_example_is_valid(self):
    mf = parse_multifiltration.load_multifiltration(
        parse_multifiltration.NON_ONE_CRITICAL_EXAMPLE)
    report = validate.validate(mf)
    self.assertTrue(report.ok)
    self.assertEqual(report.violations, ())

  def test_face_enters_after_coface(self):
    mf = multifiltration.from_mapping(2, {
        (0,): [(0, 0)],
        (1,): [(1, 0)],
        (0, 1): [(0, 0)],
    })
    report = validate.validate(mf)
    self.assertFalse(report.ok)
    self.assertEqual(report.violations, (validate.Violation(
        Simplex((0, 1)), (0, 0), Simplex((1,)), validate.LATE_FACE),))
    self.assertEqual(
        str(report.violations[0]), "[0,1] at (0,0): face enters later [1]")

  def test_unlisted_face(self):
    mf = multifiltration.from_mapping(2, {
        (0,): [(0, 0)],
        (1,): [(0, 0)],
        (2,): [(0, 0)],
        (0, 1): [(0, 0)],
        (1, 2): [(0, 0)],
        (0, 1, 2): [(1, 1)],
    })
    report = validate.validate(mf)
    self.assertFalse(report.ok)
    self.assertEqual([(str(v.missing_face), v.reason)
                      for v in report.violations],
                     [("[0,2]", validate.UNLISTED_FACE)])

  def test_one_of_several_grades_is_late(self):
    mf = multifiltration.from_mapping(2, {
        (0,): [(0, 0)],
        (1,): [(0, 2), (2, 0)],
        (0, 1): [(0, 3), (1, 1)],
    })
    report = validate.validate(mf)
    self.assertEqual([v.grade for v in report.violations], [(1, 1)])

  def test_empty_is_valid(self):
    self.assertTrue(validate.validate(multifiltration.Multifiltration(2)))


if __name__ == "__main__":
  unittest.main()
