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
"""Debug-mode homogeneity checks for the Groebner engine.

Inputs built from shifted boundary matrices are homogeneous, and Buchberger's
algorithm keeps them so. Over a basis of degree zero a homogeneous element is
a single monomial times a vector of scalars; a violation of either property
means the engine was fed something it was not designed for, or has a bug.
"""

from algebra import free_module


class HomogeneityError(AssertionError):
  """An engine element is not homogeneous."""


def has_degree_zero_basis(module: free_module.FreeModule) -> bool:
  return all(not any(element.degree) for element in module.basis)


def check_homogeneous(f: free_module.FreeModuleElement, where: str):
  """Raises HomogeneityError unless f is homogeneous.

  Over a basis of degree zero the stronger single-monomial property is
  checked as well.

  Args:
    f: Element to check.
    where: Short description of the engine step, for the error message.
  """
  if not free_module.is_homogeneous(f):
    raise HomogeneityError(f"{where}: element is not homogeneous: {f}")
  if (has_degree_zero_basis(f.module) and
      not free_module.shares_single_monomial(f)):
    raise HomogeneityError(
        f"{where}: terms do not share a single monomial: {f}")
