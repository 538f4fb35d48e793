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
"""Tests for the "fields" module."""

import unittest

from sympy.polys.domains import QQ

from . import fields
from .errors import FieldError


class FieldsTest(unittest.TestCase):

  def test_parse_rationals(self):
    self.assertEqual(fields.parse_field("q"), QQ)
    self.assertEqual(fields.field_spec(fields.parse_field("Q")), "q")

  def test_parse_prime_field(self):
    gf7 = fields.parse_field("gf:7")
    self.assertEqual(fields.field_spec(gf7), "gf:7")
    self.assertEqual(fields.format_scalar(gf7, gf7.convert(-1)), "6")

  def test_parse_scalar_in_prime_field(self):
    gf7 = fields.parse_field("gf:7")
    half = fields.parse_scalar(gf7, "1/2")
    self.assertEqual(fields.format_scalar(gf7, half), "4")
    with self.assertRaises(FieldError):
      fields.parse_scalar(gf7, "1/7")

  def test_invalid_fields(self):
    for spec in ["r", "gf:", "gf:8", "gf:x", "zz"]:
      with self.assertRaises(FieldError):
        fields.parse_field(spec)

  def test_invalid_scalar(self):
    with self.assertRaises(FieldError):
      fields.parse_scalar(QQ, "one")


if __name__ == "__main__":
  unittest.main()
