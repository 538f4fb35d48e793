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
"""Tests for the "homogeneity" module."""

import unittest

from algebra import free_module
from . import homogeneity


class HomogeneityTest(unittest.TestCase):

  def setUp(self):
    super().setUp()
    self.flat = free_module.FreeModule(2, (
        free_module.GradedBasisElement("a", (0, 0)),
        free_module.GradedBasisElement("b", (0, 0)),
    ))
    self.graded = free_module.FreeModule(2, (
        free_module.GradedBasisElement("a", (1, 0)),
        free_module.GradedBasisElement("b", (0, 1)),
    ))

  def test_degree_zero_basis(self):
    self.assertTrue(homogeneity.has_degree_zero_basis(self.flat))
    self.assertFalse(homogeneity.has_degree_zero_basis(self.graded))

  def test_single_monomial_passes(self):
    f = self.flat.element([(1, (1, 1), 0), (-1, (1, 1), 1)])
    homogeneity.check_homogeneous(f, "input")

  def test_graded_basis_allows_mixed_monomials(self):
    f = self.graded.element([(1, (0, 1), 0), (3, (1, 0), 1)])
    homogeneity.check_homogeneous(f, "input")

  def test_inhomogeneous(self):
    f = self.flat.element([(1, (1, 0), 0), (1, (0, 1), 1)])
    with self.assertRaisesRegex(homogeneity.HomogeneityError, "remainder"):
      homogeneity.check_homogeneous(f, "remainder")

  def test_zero_is_homogeneous(self):
    homogeneity.check_homogeneous(self.flat.zero(), "input")


if __name__ == "__main__":
  unittest.main()
