"""Hall-Littlewood vertex operators, k-split polynomials and k-Schur functions.

Exact arithmetic over Z[t] throughout; see :mod:`kschur.verify` for the
executable identity checks and :mod:`kschur.cli` for the command line.
"""

from .kspace import expand_in_G, g_poly, k_schur, project_T, reduce_to_irreducible
from .partitions import conjugate, k_split, partitions_list
from .schur import multiply, s, straighten
from .symfunc import SymFunc
from .tpoly import TPoly
from .vertex import B, apply_B_int, apply_B_vector, hall_littlewood

__all__ = [
    "B",
    "SymFunc",
    "TPoly",
    "apply_B_int",
    "apply_B_vector",
    "conjugate",
    "expand_in_G",
    "g_poly",
    "hall_littlewood",
    "k_schur",
    "k_split",
    "multiply",
    "partitions_list",
    "project_T",
    "reduce_to_irreducible",
    "s",
    "straighten",
]
