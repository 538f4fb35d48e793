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
"""Tests for the "buchberger" module."""

import unittest

from algebra import fields
from algebra import free_module
from algebra import orders
from . import buchberger
from . import homogeneity
from . import reduction
from . import syzygy

X, Y = (1, 0), (0, 1)


def _module(rank, r=2, domain=fields.RATIONALS):
  return free_module.FreeModule(
      r,
      tuple(
          free_module.GradedBasisElement(i, (0,) * r) for i in range(rank)),
      domain)


def _vector(module, monomial, entries):
  return module.element(
      (c, monomial, index) for index, c in enumerate(entries) if c)


def shifted_boundary_columns(d0):
  """Columns of the shifted boundary in dimension one of the example.

  Edges in the order [1,2] [1,4] [2,3] [2,4] [3,4], with the boundary
  [a,b] -> e_b - e_a over the vertices 1..4.
  """
  return [
      _vector(d0, (0, 2), [-1, 1, 0, 0]),
      _vector(d0, (2, 0), [-1, 1, 0, 0]),
      _vector(d0, (0, 2), [-1, 0, 0, 1]),
      _vector(d0, (1, 1), [-1, 0, 0, 1]),
      _vector(d0, (2, 0), [0, -1, 1, 0]),
      _vector(d0, (0, 2), [0, -1, 0, 1]),
      _vector(d0, (3, 0), [0, -1, 0, 1]),
      _vector(d0, (3, 0), [0, 0, -1, 1]),
  ]


def expected_boundaries_in_dimension_zero(d0):
  return [
      _vector(d0, (2, 0), [1, 0, -1, 0]),
      _vector(d0, (1, 1), [1, 0, 0, -1]),
      _vector(d0, (0, 2), [1, 0, 0, -1]),
      _vector(d0, (2, 0), [0, 1, -1, 0]),
      _vector(d0, (0, 2), [0, 1, 0, -1]),
      _vector(d0, (3, 0), [0, 0, 1, -1]),
      _vector(d0, (2, 1), [0, 0, 1, -1]),
  ]


class BuchbergerTest(unittest.TestCase):

  def setUp(self):
    super().setUp()
    self.d0 = _module(4)
    self.columns = shifted_boundary_columns(self.d0)

  def test_single_generator(self):
    f = _vector(self.d0, (2, 2), [1, 0, 1, 1])
    basis = buchberger.buchberger([f])
    self.assertEqual(basis.generators, (f,))

  def test_already_groebner(self):
    m = _module(1)
    f, g = m.basis_vector(0, X), m.basis_vector(0, Y)
    basis = buchberger.buchberger([f, g])
    self.assertEqual(basis.generators, (f, g))

  def test_zero_generators_dropped(self):
    basis = buchberger.buchberger([self.d0.zero(), self.columns[0]])
    self.assertEqual(len(basis), 1)

  def test_empty_input_needs_module(self):
    with self.assertRaises(ValueError):
      buchberger.buchberger([])
    self.assertEqual(len(buchberger.buchberger([], module=self.d0)), 0)

  def test_shifted_boundary_reduced_basis(self):
    basis = buchberger.reduce_basis(buchberger.buchberger(self.columns))
    self.assertTrue(basis.reduced)
    self.assertEqual(
        list(basis.generators),
        expected_boundaries_in_dimension_zero(self.d0))

  def test_buchberger_criterion_holds(self):
    basis = buchberger.buchberger(self.columns)
    self.assertTrue(buchberger.is_groebner(basis.generators))
    reduced = buchberger.reduce_basis(basis)
    self.assertTrue(buchberger.is_groebner(reduced.generators))

  def test_completeness(self):
    basis = buchberger.buchberger(self.columns)
    for column in self.columns:
      self.assertTrue(reduction.reduce(column, basis.generators).is_zero)

  def test_cofactor_soundness(self):
    basis = buchberger.buchberger(self.columns, track_cofactors=True)
    for g, cofactor in zip(basis.generators, basis.cofactors):
      self.assertEqual(syzygy.evaluate(cofactor, self.columns, self.d0), g)

  def test_criteria_do_not_change_the_reduced_basis(self):
    with_criteria = buchberger.reduce_basis(
        buchberger.buchberger(self.columns))
    without_criteria = buchberger.reduce_basis(
        buchberger.buchberger(self.columns, use_criteria=False))
    self.assertEqual(with_criteria.generators, without_criteria.generators)

  def test_all_orders(self):
    for name in orders.ORDER_NAMES:
      order = orders.parse_order(name)
      basis = buchberger.reduce_basis(
          buchberger.buchberger(self.columns, order=order))
      self.assertTrue(buchberger.is_groebner(basis.generators), name)
      for column in self.columns:
        self.assertTrue(
            reduction.reduce(column, basis.generators, order=order).is_zero,
            name)

  def test_determinism(self):
    first = buchberger.buchberger(self.columns)
    second = buchberger.buchberger(list(self.columns))
    self.assertEqual(first.generators, second.generators)
    self.assertEqual(
        [str(g) for g in first.generators],
        [str(g) for g in second.generators])

  def test_homogeneity_checks(self):
    basis = buchberger.buchberger(self.columns, check_homogeneity=True)
    for g in basis.generators:
      self.assertTrue(free_module.shares_single_monomial(g))
    inhomogeneous = self.d0.element([(1, X, 0), (1, Y, 0), (1, (0, 0), 1)])
    with self.assertRaises(homogeneity.HomogeneityError):
      buchberger.buchberger([inhomogeneous], check_homogeneity=True)

  def test_reduce_basis_inter_reduces(self):
    m = _module(1)
    f = m.basis_vector(0, X)
    g = m.element([(1, X, 0), (1, Y, 0)])
    reduced = buchberger.reduce_basis(
        buchberger.GroebnerBasis(m, (f, g)))
    self.assertEqual(reduced.generators, (f, m.basis_vector(0, Y)))

  def test_reduce_basis_monic(self):
    m = _module(1)
    reduced = buchberger.reduce_basis(
        buchberger.GroebnerBasis(m, (m.basis_vector(0, None, 2),)))
    self.assertEqual(reduced.generators, (m.basis_vector(0),))

  def test_reduce_basis_idempotent(self):
    once = buchberger.reduce_basis(buchberger.buchberger(self.columns))
    twice = buchberger.reduce_basis(once)
    self.assertEqual(once.generators, twice.generators)

  def test_is_groebner(self):
    m = _module(2)
    elements = [
        m.element([(1, (1, 1), 0), (-1, Y, 1)]),
        m.basis_vector(1, X),
    ]
    self.assertTrue(buchberger.is_groebner(elements))
    self.assertTrue(buchberger.is_groebner([]))

  def test_is_groebner_witness(self):
    m = _module(2)
    elements = [m.element([(1, X, 0), (1, (0, 0), 1)]), m.basis_vector(0, Y)]
    certificate = buchberger.is_groebner(elements)
    self.assertFalse(certificate)
    self.assertEqual(certificate.pair, (0, 1))
    self.assertEqual(certificate.remainder, m.basis_vector(1, Y))

  def test_prime_field(self):
    gf2 = fields.parse_field("gf:2")
    d0 = _module(4, domain=gf2)
    columns = shifted_boundary_columns(d0)
    basis = buchberger.reduce_basis(buchberger.buchberger(columns))
    self.assertTrue(buchberger.is_groebner(basis.generators))
    self.assertEqual(
        list(basis.generators), expected_boundaries_in_dimension_zero(d0))


if __name__ == "__main__":
  unittest.main()
