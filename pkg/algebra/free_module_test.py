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
"""Tests for the "free_module" module."""

import unittest

from sympy.polys.domains import QQ

from . import fields
from . import free_module
from .errors import BasisMismatchError
from .errors import DimensionError
from .errors import UndefinedLeadingTermError


def _module(rank=3, r=2, domain=QQ, degrees=None):
  degrees = degrees or [(0,) * r] * rank
  return free_module.FreeModule(
      r,
      tuple(
          free_module.GradedBasisElement(f"b{i}", degree)
          for i, degree in enumerate(degrees)),
      domain)


class FreeModuleTest(unittest.TestCase):

  def setUp(self):
    super().setUp()
    self.module = _module()
    m = self.module
    self.f = m.element([(1, (2, 0), 0), (-1, (2, 0), 1)])

  def test_canonical_order(self):
    element = self.module.element([(1, (0, 1), 1), (3, (1, 0), 0),
                                   (2, (0, 2), 0)])
    self.assertEqual([(t.monomial, t.basis) for t in element.terms],
                     [((0, 2), 0), ((1, 0), 0), ((0, 1), 1)])

  def test_duplicates_merge_and_cancel(self):
    element = self.module.element([(1, (1, 0), 0), (-1, (1, 0), 0),
                                   (2, (0, 1), 2)])
    self.assertEqual(len(element.terms), 1)
    self.assertEqual(element.terms[0].coefficient, QQ(2))

  def test_elem_add(self):
    zero = self.module.zero()
    self.assertEqual(free_module.elem_add(self.f, zero), self.f)
    self.assertTrue(free_module.elem_add(self.f, -self.f).is_zero)
    x2e1 = self.module.basis_vector(0, (2, 0))
    doubled = free_module.elem_add(x2e1, x2e1)
    self.assertEqual(doubled, self.module.basis_vector(0, (2, 0), 2))

  def test_elem_add_basis_mismatch(self):
    other = _module(rank=2)
    with self.assertRaises(BasisMismatchError):
      free_module.elem_add(self.f, other.basis_vector(0))

  def test_elem_scale(self):
    m = self.module
    self.assertEqual(
        free_module.elem_scale(m.basis_vector(0), 1, (3, 2)),
        m.basis_vector(0, (3, 2)))
    self.assertTrue(free_module.elem_scale(self.f, 0, (1, 1)).is_zero)
    g = m.element([(1, (1, 0), 1), (-1, (0, 0), 0)])
    self.assertEqual(
        free_module.elem_scale(g, -1, (0, 1)),
        m.element([(1, (0, 1), 0), (-1, (1, 1), 1)]))

  def test_elem_scale_dimension_error(self):
    with self.assertRaises(DimensionError):
      free_module.elem_scale(self.f, 1, (1, 1, 1))

  def test_leading_term(self):
    self.assertEqual(
        free_module.leading_term(self.f), (((2, 0), 0), QQ(1)))
    g = self.module.element([(1, (0, 2), 0), (1, (2, 0), 2)])
    self.assertEqual(free_module.leading_term(g), (((0, 2), 0), QQ(1)))
    single = self.module.basis_vector(2, (1, 3), 5)
    self.assertEqual(free_module.leading_term(single), (((1, 3), 2), QQ(5)))

  def test_leading_term_other_order(self):
    g = self.module.element([(1, (0, 2), 0), (1, (3, 0), 2)])
    top = free_module.leading_term(g, order=self._top())
    self.assertEqual(top, (((3, 0), 2), QQ(1)))

  def _top(self):
    from . import orders  # pylint: disable=g-import-not-at-top
    return orders.parse_order("top-grlex")

  def test_leading_term_of_zero(self):
    with self.assertRaises(UndefinedLeadingTermError):
      free_module.leading_term(self.module.zero())

  def test_leading_term_of_sum(self):
    g = self.module.element([(1, (0, 3), 1), (1, (2, 0), 2)])
    total = self.f + g
    self.assertEqual(free_module.leading_term(total)[0], ((2, 0), 0))
    cancelled = self.f + (-self.module.basis_vector(0, (2, 0)))
    self.assertEqual(free_module.leading_term(cancelled)[0], ((2, 0), 1))

  def test_homogeneity(self):
    graded = _module(rank=2, degrees=[(1, 0), (0, 1)])
    homogeneous = graded.element([(1, (0, 1), 0), (1, (1, 0), 1)])
    self.assertTrue(free_module.is_homogeneous(homogeneous))
    self.assertFalse(free_module.shares_single_monomial(homogeneous))
    self.assertEqual(free_module.multidegree(homogeneous), (1, 1))
    inhomogeneous = graded.element([(1, (0, 0), 0), (1, (1, 0), 1)])
    self.assertFalse(free_module.is_homogeneous(inhomogeneous))
    self.assertTrue(free_module.shares_single_monomial(self.f))

  def test_homogeneous_sum_stays_homogeneous(self):
    g = self.module.element([(3, (2, 0), 2)])
    self.assertTrue(free_module.is_homogeneous(self.f + g))
    self.assertEqual(free_module.multidegree(self.f + g), (2, 0))

  def test_monic(self):
    m = self.module
    self.assertEqual(
        free_module.monic(m.basis_vector(0, None, 2)), m.basis_vector(0))

  def test_render(self):
    self.assertEqual(
        free_module.render(self.f),
        "1*x1^2*x2^0*e_1 + -1*x1^2*x2^0*e_2")
    self.assertEqual(free_module.render(self.module.zero()), "0")
    self.assertIn("e_b1", free_module.render(self.f, labels=True))

  def test_rational_render_round_trip(self):
    for text in ["3", "-1/2", "7/3", "0"]:
      value = fields.parse_scalar(QQ, text)
      self.assertEqual(fields.format_scalar(QQ, value), text)

  def test_rebase_mismatch(self):
    with self.assertRaises(BasisMismatchError):
      self.f.rebase(_module(rank=2))

  def test_wrong_monomial_length(self):
    with self.assertRaises(DimensionError):
      self.module.element([(1, (1, 0, 0), 0)])


if __name__ == "__main__":
  unittest.main()
