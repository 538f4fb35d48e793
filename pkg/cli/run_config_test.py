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
"""Tests for the "run_config" module."""

import argparse
import unittest
from unittest import mock

from sympy.polys.domains import QQ

from common import threads
from . import run_config


class RunConfigTest(unittest.TestCase):

  def test_defaults(self):
    config = run_config.RunConfig("input.txt")
    self.assertEqual(config.field, "q")
    self.assertEqual(config.order, "pot-grlex")
    self.assertIsNone(config.dimensions)
    self.assertEqual(config.output_format, "text")
    self.assertFalse(config.oracle)
    self.assertIsNone(config.bound)
    self.assertFalse(config.debug)
    self.assertFalse(config.relations)
    self.assertFalse(config.one_critical)
    self.assertEqual(config.domain, QQ)
    self.assertEqual(config.monomial_order.name, "pot-grlex")

  def test_prime_field(self):
    config = run_config.RunConfig("input.txt", field="gf:7")
    self.assertEqual(config.domain.mod, 7)

  def test_invalid(self):
    with self.assertRaises(ValueError):
      run_config.RunConfig("input.txt", output_format="xml")
    with self.assertRaises(ValueError):
      run_config.RunConfig("input.txt", dimensions=(0, -1))
    with self.assertRaises(ValueError):
      _ = run_config.RunConfig("input.txt", field="gf:9").domain
    with self.assertRaises(ValueError):
      _ = run_config.RunConfig("input.txt", order="grlex").monomial_order

  def test_threads(self):
    self.assertEqual(run_config.RunConfig("in", threads=3).max_workers, 3)
    self.assertEqual(run_config.RunConfig("in", threads=0).max_workers, 1)
    with mock.patch.dict("os.environ", {threads.THREADS_ENV: "5"}):
      self.assertEqual(run_config.RunConfig("in").max_workers, 5)

  def test_from_args(self):
    args = argparse.Namespace(
        input="input.txt",
        field="gf:2",
        order="top-lex",
        dim=[1, 0],
        format="json",
        oracle=True,
        bound=(5, 4),
        debug=False,
        relations=True,
        one_critical=False)
    config = run_config.RunConfig.from_args(args)
    self.assertEqual(config.dimensions, (1, 0))
    self.assertEqual(config.output_format, "json")
    self.assertEqual(config.bound, (5, 4))
    self.assertTrue(config.relations)
    self.assertIsNone(config.threads)


if __name__ == "__main__":
  unittest.main()
