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
"""Tests for the "shifted_boundary" module."""

import unittest

from algebra import fields
from algebra import free_module
from algebra.errors import BasisMismatchError
from filtration import multifiltration
from filtration import parse_multifiltration
from filtration import random_multifiltration
from . import fundamental_elements
from . import shifted_boundary

Simplex = multifiltration.Simplex

# Edge order and orientation of the worked example: v2v1, v3v2, v4v2,
# v1v4, v3v4, each column written as e_b - e_a for the edge v_a v_b.
LISTED_BOUNDARY_1 = [
    (1, -1, 0, 0),
    (0, 1, -1, 0),
    (0, 1, 0, -1),
    (-1, 0, 0, 1),
    (0, 0, -1, 1),
]

LISTED_SHIFTED_BOUNDARY_1 = [
    ((2, 0), (1, -1, 0, 0)),
    ((0, 2), (1, -1, 0, 0)),
    ((2, 0), (0, 1, -1, 0)),
    ((0, 2), (0, 1, 0, -1)),
    ((3, 0), (0, 1, 0, -1)),
    ((0, 2), (-1, 0, 0, 1)),
    ((1, 1), (-1, 0, 0, 1)),
    ((3, 0), (0, 0, -1, 1)),
]


def _up_to_sign(vector):
  for entry in vector:
    if entry:
      return tuple(vector) if entry > 0 else tuple(-e for e in vector)
  return tuple(vector)


def _element(module, monomial, vector):
  return module.element(
      (c, monomial, index) for index, c in enumerate(vector) if c)


def _element_up_to_sign(f):
  return f if not f.terms or f.lead.coefficient > 0 else -f


def random_corpus():
  """One hundred seeded filtrations in 2 and 3 parameters, up to dimension 3."""
  return [
      random_multifiltration.random_multifiltration(
          1 + seed % 8,
          r=2 + seed % 2,
          max_dimension=3,
          grades_per_simplex=1 + seed % 3,
          edge_probability=0.6,
          face_probability=0.6,
          seed=seed) for seed in range(100)
  ]


class ShiftedBoundaryTest(unittest.TestCase):

  def setUp(self):
    super().setUp()
    self.mf = parse_multifiltration.load_multifiltration(
        parse_multifiltration.NON_ONE_CRITICAL_EXAMPLE)

  def test_chain_module(self):
    d1 = shifted_boundary.chain_module(self.mf, 1)
    self.assertEqual(d1.rank, 5)
    self.assertEqual(d1.label(1), Simplex((1, 4)))
    self.assertTrue(all(element.degree == (0, 0) for element in d1.basis))
    self.assertEqual(shifted_boundary.chain_module(self.mf, -1).rank, 0)
    self.assertEqual(shifted_boundary.chain_module(self.mf, 3).rank, 0)

  def test_top_boundary_dimension_one(self):
    matrix = shifted_boundary.top_boundary(self.mf, 1)
    self.assertEqual(matrix.shape, (4, 5))
    self.assertEqual(matrix.column(0), (-1, 1, 0, 0))
    self.assertEqual(
        sorted(_up_to_sign(c) for c in matrix.entries),
        sorted(_up_to_sign(c) for c in LISTED_BOUNDARY_1))
    self.assertEqual(matrix.to_rows()[0], (-1, -1, 0, 0, 0))

  def test_top_boundary_dimension_two(self):
    matrix = shifted_boundary.top_boundary(self.mf, 2)
    self.assertEqual(matrix.shape, (5, 1))
    # [1,2] [1,4] [2,3] [2,4] [3,4]
    self.assertEqual(matrix.column(0), (1, -1, 0, 1, 0))

  def test_top_boundary_dimension_zero(self):
    matrix = shifted_boundary.top_boundary(self.mf, 0)
    self.assertEqual(matrix.shape, (0, 4))
    self.assertEqual(matrix.to_rows(), ())

  def test_shifted_boundary_dimension_one(self):
    matrix = shifted_boundary.build_shifted_boundary(self.mf, 1)
    self.assertEqual(len(matrix), 8)
    self.assertEqual(matrix.target.rank, 4)
    self.assertEqual(matrix.column_degrees, ((0, 2), (2, 0), (0, 2), (1, 1),
                                             (2, 0), (0, 2), (3, 0), (3, 0)))
    listed = [
        _element(matrix.target, monomial, vector)
        for monomial, vector in LISTED_SHIFTED_BOUNDARY_1
    ]
    self.assertCountEqual(
        [str(_element_up_to_sign(c)) for c in matrix.columns],
        [str(_element_up_to_sign(c)) for c in listed])
    self.assertEqual(matrix.columns[0],
                     _element(matrix.target, (0, 2), (-1, 1, 0, 0)))

  def test_shifted_boundary_dimension_two(self):
    matrix = shifted_boundary.build_shifted_boundary(self.mf, 2)
    self.assertEqual(len(matrix), 1)
    self.assertEqual(matrix.columns[0],
                     _element(matrix.target, (2, 2), (1, -1, 0, 1, 0)))
    self.assertEqual(matrix.fundamental[0].simplex, Simplex((1, 2, 4)))

  def test_shifted_boundary_dimension_zero(self):
    matrix = shifted_boundary.build_shifted_boundary(self.mf, 0)
    self.assertEqual(len(matrix), 7)
    self.assertEqual(matrix.target.rank, 0)
    self.assertTrue(all(c.is_zero for c in matrix.columns))

  def test_columns_share_one_monomial(self):
    for n in range(3):
      matrix = shifted_boundary.build_shifted_boundary(self.mf, n)
      for column, degree in zip(matrix.columns, matrix.column_degrees):
        self.assertTrue(free_module.shares_single_monomial(column))
        for term in column.terms:
          self.assertEqual(term.monomial, degree)
          self.assertIn(term.coefficient, (1, -1))

  def test_chain_condition(self):
    corpus = [self.mf] + random_corpus()
    for index, mf in enumerate(corpus):
      for n in range(1, mf.dimension + 1):
        matrix = shifted_boundary.build_shifted_boundary(mf, n)
        for column in matrix.columns:
          with self.subTest(mf=index, n=n):
            self.assertTrue(
                shifted_boundary.apply_boundary(mf, n - 1, column).is_zero)

  def test_commutes_with_the_embedding(self):
    for n in range(1, 3):
      matrix = shifted_boundary.build_shifted_boundary(self.mf, n)
      d_n = shifted_boundary.chain_module(self.mf, n)
      for index, column in enumerate(matrix.columns):
        embedded = shifted_boundary.embed_into_D(
            self.mf, n, matrix.source.basis_vector(index), d_n)
        self.assertEqual(
            shifted_boundary.apply_boundary(self.mf, n, embedded,
                                            matrix.target), column)

  def test_one_critical_scales_the_boundary(self):
    mf = random_multifiltration.random_multifiltration(6, seed=5)
    self.assertTrue(multifiltration.is_one_critical(mf))
    for n in range(1, mf.dimension + 1):
      matrix = shifted_boundary.build_shifted_boundary(mf, n)
      boundary = shifted_boundary.top_boundary(mf, n)
      self.assertEqual(len(matrix), len(mf.simplices(n)))
      for j, column in enumerate(matrix.columns):
        grade = mf.entry_grades(boundary.columns[j])[0]
        self.assertEqual(
            column, _element(matrix.target, grade, boundary.column(j)))

  def test_prime_field(self):
    matrix = shifted_boundary.build_shifted_boundary(
        self.mf, 2, domain=fields.parse_field("gf:2"))
    self.assertEqual(
        str(matrix.columns[0]),
        "1*x1^2*x2^2*e_1 + 1*x1^2*x2^2*e_2 + 1*x1^2*x2^2*e_4")


class EmbedIntoDTest(unittest.TestCase):

  def setUp(self):
    super().setUp()
    self.mf = parse_multifiltration.load_multifiltration(
        parse_multifiltration.NON_ONE_CRITICAL_EXAMPLE)

  def test_vertex_elements(self):
    source = fundamental_elements.fundamental_module(self.mf, 0)
    d0 = shifted_boundary.chain_module(self.mf, 0)
    self.assertEqual(
        shifted_boundary.embed_into_D(self.mf, 0, source.basis_vector(2)),
        d0.basis_vector(1, (1, 0)))
    self.assertEqual(
        shifted_boundary.embed_into_D(self.mf, 0, source.basis_vector(0)),
        d0.basis_vector(0))

  def test_sum_over_edges(self):
    source = fundamental_elements.fundamental_module(self.mf, 1)
    d1 = shifted_boundary.chain_module(self.mf, 1)
    s = source.element([(1, (0, 0), 0), (1, (0, 0), 2), (1, (0, 0), 5)])
    self.assertEqual(
        shifted_boundary.embed_into_D(self.mf, 1, s),
        _element(d1, (0, 2), (1, 1, 0, 1, 0)))

  def test_multiplies_monomials(self):
    source = fundamental_elements.fundamental_module(self.mf, 1)
    d1 = shifted_boundary.chain_module(self.mf, 1)
    s = source.element([(3, (1, 0), 3)])
    self.assertEqual(
        shifted_boundary.embed_into_D(self.mf, 1, s),
        d1.basis_vector(1, (2, 1), 3))

  def test_basis_mismatch(self):
    source = fundamental_elements.fundamental_module(self.mf, 1)
    with self.assertRaises(BasisMismatchError):
      shifted_boundary.embed_into_D(self.mf, 0, source.basis_vector(0))
    with self.assertRaises(BasisMismatchError):
      shifted_boundary.embed_into_D(
          self.mf, 1, source.basis_vector(0),
          shifted_boundary.chain_module(self.mf, 0))

  def test_apply_boundary_rejects_other_modules(self):
    d0 = shifted_boundary.chain_module(self.mf, 0)
    with self.assertRaises(BasisMismatchError):
      shifted_boundary.apply_boundary(self.mf, 1, d0.basis_vector(0))


if __name__ == "__main__":
  unittest.main()
