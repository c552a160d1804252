"""Mod p vanishing criterion for Seiberg-Witten invariants under Z_p actions.

The pipeline runs spec document -> :func:`load_spec` -> equivariant index
table -> orbit-space invariants -> :func:`check_main`.
"""

from .cyclotomic import CycloNum, galois, half_power, inverse, root_of_unity
from .errors import DataError, IntegralityError, PreconditionError, SpecError, UnsupportedError
from .gmanifold import IndexTable, ManifoldSpec, emit_spec, load_spec, spec_digest
from .index_engine import build_index_table, character_values
from .orbit import orbit_report
from .rep_ring import RepElement, character, from_characters
from .vanishing import CutSpec, Status, Verdict, check_main, check_torus_cut

__version__ = "0.1.0"

__all__ = [
    "CycloNum",
    "galois",
    "half_power",
    "inverse",
    "root_of_unity",
    "DataError",
    "IntegralityError",
    "PreconditionError",
    "SpecError",
    "UnsupportedError",
    "IndexTable",
    "ManifoldSpec",
    "emit_spec",
    "load_spec",
    "spec_digest",
    "build_index_table",
    "character_values",
    "orbit_report",
    "RepElement",
    "character",
    "from_characters",
    "CutSpec",
    "Status",
    "Verdict",
    "check_main",
    "check_torus_cut",
]
