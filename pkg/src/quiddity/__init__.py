"""Tame frieze patterns and quiddity cycles over exact subrings of C.

The package computes with quiddity cycles (sequences whose associated 2x2
matrix product is minus the identity), generates and verifies the tame frieze
patterns they induce, rewrites them with exact local transformation rules,
reduces integer cycles to base cases, models them combinatorially by labelled
polygon triangulations, and enumerates all cycles with zero-free friezes over
discrete rings of complex numbers.

Everything is exact; there is no floating point anywhere.
"""

from quiddity.cycles import Cycle, Mat2, eta, is_epsilon_cycle, is_quiddity
from quiddity.rings import Cyclotomic, Q, Qi, Z, Zi, Zzeta6, ring_from_tag

__version__ = "0.1.0"

__all__ = [
    "Cycle",
    "Mat2",
    "eta",
    "is_quiddity",
    "is_epsilon_cycle",
    "Z",
    "Q",
    "Zi",
    "Zzeta6",
    "Qi",
    "Cyclotomic",
    "ring_from_tag",
    "__version__",
]
