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
"""JSON export and re-import of computed persistence modules.

  {"v_prime": [3, 2],
   "dimensions": [{"n": 1,
                   "boundaries": [{"terms": [{"coeff": "1",
                                              "monomial": [2, 2],
                                              "basis": [1, 2]}, ...]}],
                   "cycles": [...], "homology": [...],
                   "stats": {...}}]}

Coefficients are exact strings ("-1", "3/2"); basis elements are given by
their vertex lists.
"""

import dataclasses
import json
from typing import Any, Dict, List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.domains.domain import Domain

from algebra import fields
from algebra.free_module import FreeModule
from algebra.free_module import FreeModuleElement
from algebra.monomials import Grade
from algebra.orders import DEFAULT_ORDER
from algebra.orders import MonomialOrder
from filtration.multifiltration import Multifiltration
from filtration.multifiltration import Simplex
from presentation import shifted_boundary
from .persistence_modules import DimensionModules
from .persistence_modules import PersistenceModules

MODULE_KEYS = ("boundaries", "cycles", "homology")


class ExportFormatError(ValueError):
  """A JSON document does not follow the export schema."""


def element_to_json(f: FreeModuleElement) -> Dict[str, Any]:
  module = f.module
  return {
      "terms": [{
          "coeff": fields.format_scalar(module.domain, t.coefficient),
          "monomial": list(t.monomial),
          "basis": list(module.label(t.basis).vertices),
      } for t in f.terms]
  }


def relation_to_json(f: FreeModuleElement) -> Dict[str, Any]:
  return {
      "terms": [{
          "coeff": fields.format_scalar(f.module.domain, t.coefficient),
          "monomial": list(t.monomial),
          "generator": t.basis,
      } for t in f.terms]
  }


def dimension_to_json(modules: DimensionModules,
                      relations: bool = False) -> Dict[str, Any]:
  data = {
      "n": modules.n,
      "boundaries": [element_to_json(g) for g in modules.boundaries],
      "cycles": [element_to_json(g) for g in modules.cycles],
      "homology": [element_to_json(g) for g in modules.homology],
      "stats": {
          "fundamental_elements": modules.fundamental_count,
          "simplices": modules.simplex_count,
          "seconds": dict(modules.timings),
      },
  }
  if relations:
    data["relations"] = [
        relation_to_json(r) for r in modules.presentation().relations
    ]
  return data


def to_json(modules: PersistenceModules, relations: bool = False) -> str:
  """Serializes the results; relations among homology generators on demand."""
  return json.dumps(
      {
          "v_prime": list(modules.v_prime),
          "dimensions": [
              dimension_to_json(d, relations) for d in modules.dimensions
          ],
      },
      indent=2)


def element_from_json(data: Dict[str, Any],
                      module: FreeModule) -> FreeModuleElement:
  """Rebuilds an element of D_n from its JSON form.

  Raises:
    ExportFormatError: Malformed terms, unknown simplex or bad coefficient.
  """
  positions = {module.label(i): i for i in range(module.rank)}
  triples = []
  try:
    for term in data["terms"]:
      simplex = Simplex(tuple(int(v) for v in term["basis"]))
      triples.append((fields.parse_scalar(module.domain, str(term["coeff"])),
                      tuple(int(e) for e in term["monomial"]),
                      positions[simplex]))
    return module.element(triples)
  except (KeyError, TypeError, ValueError) as e:
    raise ExportFormatError(f"malformed generator {data!r}: {e}") from e


@dataclasses.dataclass(frozen=True)
class ImportedDimension:
  n: int
  boundaries: Tuple[FreeModuleElement, ...]
  cycles: Tuple[FreeModuleElement, ...]
  homology: Tuple[FreeModuleElement, ...]


def from_json(text: str,
              mf: Multifiltration,
              domain: Domain = QQ,
              order: MonomialOrder = DEFAULT_ORDER
             ) -> Tuple[Grade, Tuple[ImportedDimension, ...]]:
  """Reads exported results back into the chain modules of mf.

  Args:
    text: The JSON document.
    mf: The multifiltration the results were computed from.
    domain: Field the results were computed over.
    order: Order of the rebuilt modules.

  Returns:
    (v', per-dimension generators).

  Raises:
    ExportFormatError: The document does not follow the schema.
  """
  try:
    data = json.loads(text)
    v_prime = tuple(int(v) for v in data["v_prime"])
    entries: Sequence[Dict[str, Any]] = data["dimensions"]
  except (KeyError, TypeError, ValueError) as e:
    raise ExportFormatError(f"not a persistence module export: {e}") from e
  dimensions: List[ImportedDimension] = []
  for entry in entries:
    try:
      n = int(entry["n"])
      lists = [entry[key] for key in MODULE_KEYS]
    except (KeyError, TypeError, ValueError) as e:
      raise ExportFormatError(f"malformed dimension entry: {e}") from e
    module = shifted_boundary.chain_module(mf, n, domain, order)
    boundaries, cycles, homology = (
        tuple(element_from_json(g, module) for g in generators)
        for generators in lists)
    dimensions.append(ImportedDimension(n, boundaries, cycles, homology))
  return v_prime, tuple(dimensions)
