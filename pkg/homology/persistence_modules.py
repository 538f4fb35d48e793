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
"""Groebner bases of the boundaries, cycles and homology of a multifiltration.

Everything lives in the shifted chain modules D_n. The boundaries x^{v'}B_n
are the image of the shifted boundary of dimension n+1; the cycles x^{v'}Z_n
are the syzygies of the shifted boundary of dimension n, embedded into D_n;
the homology is represented by the normal forms of the cycle generators
modulo the boundaries.
"""

import concurrent.futures
import dataclasses
import logging
import time
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.domains.domain import Domain

from algebra import fields
from algebra import free_module
from algebra.free_module import FreeModule
from algebra.free_module import FreeModuleElement
from algebra.free_module import GradedBasisElement
from algebra.monomials import Grade
from algebra.orders import DEFAULT_ORDER
from algebra.orders import MonomialOrder
from common import threads
from filtration.multifiltration import Multifiltration
from filtration.multifiltration import stabilization_grade
from groebner import buchberger
from groebner import reduction
from groebner import syzygy
from groebner.buchberger import GroebnerBasis
from presentation import shifted_boundary

_LOGGER_ = logging.getLogger(__name__)


def boundaries_gb(mf: Multifiltration,
                  n: int,
                  domain: Domain = QQ,
                  order: MonomialOrder = DEFAULT_ORDER,
                  check_homogeneity: bool = False) -> GroebnerBasis:
  """Reduced Groebner basis of x^{v'}B_n in D_n.

  The boundaries are the column span of the shifted boundary of dimension
  n+1; the basis is empty at the top dimension.
  """
  matrix = shifted_boundary.build_shifted_boundary(mf, n + 1, domain, order)
  basis = buchberger.buchberger(
      matrix.columns, module=matrix.target,
      check_homogeneity=check_homogeneity)
  return buchberger.reduce_basis(basis)


def cycle_syzygies(mf: Multifiltration,
                   n: int,
                   domain: Domain = QQ,
                   order: MonomialOrder = DEFAULT_ORDER,
                   check_homogeneity: bool = False) -> syzygy.SyzygyBasis:
  """Generators of the kernel of the shifted boundary of dimension n.

  The source is the graded module R^{|F_n|}. In dimension zero the boundary
  is the zero map and the kernel is the whole source.
  """
  matrix = shifted_boundary.build_shifted_boundary(mf, n, domain, order)
  if n == 0:
    source = matrix.source
    return syzygy.SyzygyBasis(
        source, tuple(source.basis_vector(i) for i in range(source.rank)),
        matrix.columns)
  _, syzygies = syzygy.buchberger_with_syzygy(
      matrix.columns, module=matrix.target, source=matrix.source,
      check_homogeneity=check_homogeneity)
  return syzygies


def cycles_gb(mf: Multifiltration,
              n: int,
              domain: Domain = QQ,
              order: MonomialOrder = DEFAULT_ORDER,
              check_homogeneity: bool = False,
              syzygies: Optional[syzygy.SyzygyBasis] = None) -> GroebnerBasis:
  """Reduced Groebner basis of x^{v'}Z_n in D_n.

  Args:
    mf: A validated multifiltration.
    n: Dimension.
    domain: Coefficient field.
    order: Monomial order.
    check_homogeneity: Debug mode homogeneity checks.
    syzygies: Precomputed cycle_syzygies(mf, n), if available.

  Returns:
    The reduced basis of the embedded syzygy module.
  """
  if syzygies is None:
    syzygies = cycle_syzygies(mf, n, domain, order, check_homogeneity)
  d_n = shifted_boundary.chain_module(mf, n, domain, order)
  embedded = shifted_boundary.embed_all(mf, n, syzygies.generators, d_n)
  basis = buchberger.buchberger(
      embedded, module=d_n, check_homogeneity=check_homogeneity)
  return buchberger.reduce_basis(basis)


def homology_generators(
    boundaries: GroebnerBasis,
    cycles: GroebnerBasis) -> Tuple[FreeModuleElement, ...]:
  """Nonzero normal forms of the cycle generators modulo the boundaries."""
  forms = []
  for z in cycles.generators:
    remainder = reduction.reduce(z, boundaries.generators)
    if remainder.terms:
      forms.append(remainder)
  return tuple(forms)


@dataclasses.dataclass(frozen=True)
class QuotientPresentation:
  """Generators and relations of x^{v'}H_n.

  Attributes:
    generators: The homology generators in D_n.
    boundaries: Reduced Groebner basis of x^{v'}B_n.
    relations: Elements of the graded module R^k on the generators
      (basis element i in the degree of generator i) that map into the
      boundaries.
  """
  generators: Tuple[FreeModuleElement, ...]
  boundaries: GroebnerBasis
  relations: Tuple[FreeModuleElement, ...]


def quotient_presentation(generators: Sequence[FreeModuleElement],
                          boundaries: GroebnerBasis) -> QuotientPresentation:
  """Relations among homology generators, taken modulo the boundaries.

  The syzygies of generators and boundaries together are projected onto
  the generator coordinates; zero projections and repeats are dropped.
  """
  if not generators:
    return QuotientPresentation((), boundaries, ())
  module = boundaries.module
  inputs = list(generators) + list(boundaries.generators)
  k = len(generators)
  relation_module = FreeModule(
      module.r,
      tuple(
          GradedBasisElement(i, free_module.multidegree(g))
          for i, g in enumerate(generators)), module.domain, module.order)
  _, syzygies = syzygy.buchberger_with_syzygy(inputs, module=module)
  relations: List[FreeModuleElement] = []
  for s in syzygies.generators:
    projected = relation_module.element(
        (t.coefficient, t.monomial, t.basis) for t in s.terms if t.basis < k)
    if projected.terms and projected not in relations:
      relations.append(projected)
  return QuotientPresentation(tuple(generators), boundaries, tuple(relations))


@dataclasses.dataclass(frozen=True)
class DimensionModules:
  """The three modules of one dimension, with bookkeeping.

  Attributes:
    n: Dimension.
    chain_module: D_n.
    boundaries: Reduced Groebner basis of x^{v'}B_n.
    cycles: Reduced Groebner basis of x^{v'}Z_n.
    homology: Normal forms representing generators of x^{v'}H_n.
    syzygies: Kernel generators of the shifted boundary of dimension n.
    fundamental_count: |F_n|.
    simplex_count: d_n.
    timings: Seconds per stage.
  """
  n: int
  chain_module: FreeModule
  boundaries: GroebnerBasis
  cycles: GroebnerBasis
  homology: Tuple[FreeModuleElement, ...]
  syzygies: syzygy.SyzygyBasis
  fundamental_count: int
  simplex_count: int
  timings: Dict[str, float] = dataclasses.field(default_factory=dict)

  def presentation(self) -> QuotientPresentation:
    return quotient_presentation(self.homology, self.boundaries)


@dataclasses.dataclass(frozen=True)
class PersistenceModules:
  """Per-dimension results for one multifiltration.

  Attributes:
    v_prime: The stabilization grade.
    field: Field spec, "q" or "gf:<p>".
    order: Order name.
    dimensions: Results in increasing dimension.
  """
  v_prime: Grade
  field: str
  order: str
  dimensions: Tuple[DimensionModules, ...]

  def __getitem__(self, n: int) -> DimensionModules:
    for dimension in self.dimensions:
      if dimension.n == n:
        return dimension
    raise KeyError(n)


def compute_dimension(mf: Multifiltration,
                      n: int,
                      domain: Domain = QQ,
                      order: MonomialOrder = DEFAULT_ORDER,
                      check_homogeneity: bool = False) -> DimensionModules:
  """Runs the pipeline for one dimension."""
  timings = {}
  start = time.perf_counter()
  boundaries = boundaries_gb(mf, n, domain, order, check_homogeneity)
  timings["boundaries"] = time.perf_counter() - start

  start = time.perf_counter()
  syzygies = cycle_syzygies(mf, n, domain, order, check_homogeneity)
  cycles = cycles_gb(mf, n, domain, order, check_homogeneity, syzygies)
  timings["cycles"] = time.perf_counter() - start

  start = time.perf_counter()
  homology = homology_generators(boundaries, cycles)
  timings["homology"] = time.perf_counter() - start

  _LOGGER_.debug("Dimension %d: %d boundaries, %d cycles, %d classes", n,
                 len(boundaries), len(cycles), len(homology))
  return DimensionModules(
      n=n,
      chain_module=cycles.module,
      boundaries=boundaries,
      cycles=cycles,
      homology=homology,
      syzygies=syzygies,
      fundamental_count=syzygies.source.rank,
      simplex_count=len(mf.simplices(n)),
      timings=timings)


def compute_persistence_modules(mf: Multifiltration,
                                dimensions: Optional[Iterable[int]] = None,
                                domain: Domain = QQ,
                                order: MonomialOrder = DEFAULT_ORDER,
                                check_homogeneity: bool = False,
                                max_workers: Optional[int] = None
                               ) -> PersistenceModules:
  """Computes boundaries, cycles and homology for the requested dimensions.

  Dimensions run in parallel on a thread pool; results are returned in
  increasing dimension regardless of completion order.

  Args:
    mf: A validated multifiltration.
    dimensions: Dimensions to compute; all of 0..dim X by default.
    domain: Coefficient field.
    order: Monomial order.
    check_homogeneity: Debug mode homogeneity checks.
    max_workers: Thread cap; MPGB_THREADS or the CPU count by default.

  Returns:
    The PersistenceModules.

  Raises:
    ValueError: A requested dimension is negative.
    HomogeneityError: In debug mode, an engine element is not homogeneous.
  """
  if dimensions is None:
    dimensions = range(mf.dimension + 1)
  requested = sorted(set(dimensions))
  if any(n < 0 for n in requested):
    raise ValueError(f"negative dimension in {requested}")
  if max_workers is None:
    max_workers = threads.thread_count()
  _LOGGER_.info("Computing dimensions %s with %d workers", requested,
                max_workers)
  results = []
  if requested:
    with concurrent.futures.ThreadPoolExecutor(
        max_workers=max(1, min(max_workers, len(requested)))) as executor:
      futures = [
          executor.submit(compute_dimension, mf, n, domain, order,
                          check_homogeneity) for n in requested
      ]
      results = [future.result() for future in futures]
  return PersistenceModules(
      v_prime=stabilization_grade(mf),
      field=fields.field_spec(domain),
      order=order.name,
      dimensions=tuple(results))
