"""Beauville structures on cartesian powers of alternating groups.

Permutations compose left to right: ``p * q`` applies ``p`` first.
"""

from .perm import Permutation, parse, format_cycles
from .groups import GroupHandle, is_alternating
from .conjugacy import class_label, conjugate_in_An, simultaneous_conjugacy, triple_equivalent
from .triple import GeneratingTriple
from .counting import phi2_bruteforce, phi2_moebius, class_representatives, exponent_An
from .catalog import (
    catalog_small, catalog_diagnostics, family_transpositions, family_transposition_representatives,
    family_Tp, family_Tp_prime, pool_inequivalent,
)
from .structure import (
    BeauvilleStructure, NoStructure, Unsupported, build_beauville, verify_structure,
    condition3_exact, a5_squared,
)

__version__ = "0.1.0"
