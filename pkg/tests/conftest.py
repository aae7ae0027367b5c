"""Shared corpus of integer quiddity cycles used across the test modules.

The corpus combines every enumerated cycle of length at most 7 with two
hand-picked infinite families specialized to small parameters, the four
staircase examples exercised by the reduction tests, and the stored
example friezes.  It is computed once per session.
"""

import pytest

from quiddity import enumeration
from quiddity.cycles import Cycle
from quiddity.rings import Z

# quiddities of the displayed example arrays, keyed by fixture name
EXAMPLE_QUIDDITIES = {
    "cc_hexagon": (1, 4, 1, 2, 2, 2),
    "gaussian_period6": None,  # lives over Zi, spelled out in test_frieze
    "octagon_positive": (1, 3, 2, 2, 2, 1, 5, 2),
    "octagon_mixed": (-1, 3, 0, -2, 2, 1, 3, 0),
    "all_zero_hexagon": (0, 0, 0, 0, 0, 0),
}

# the four staircase arrays shown as reduction case studies
WORKED_REDUCTIONS = (
    (0, 2, -2, 0, 2, -2),
    (-1, -1, 0, 0, -1),
    (0, -4, -5, 0, 4, 2, 0, -3, 3),
    (-1, 2, -3, -1, -1, 2, -3, -1),
)


def _families():
    for a in range(-5, 6):
        for b in range(-5, 6):
            yield (a, 0, b, 0, -a - b, 0)
    for a in range(-5, 6):
        yield (1, 1, -a, -1, -1, a)


@pytest.fixture(scope="session")
def z_corpus():
    cycles = []
    for n in (1, 2, 3, 4):
        cycles.extend(enumeration.enumerate_nonzero(Z, n))
    for entries in _families():
        cycles.append(Cycle(Z, entries))
    for entries in WORKED_REDUCTIONS:
        cycles.append(Cycle(Z, entries))
    for name, entries in EXAMPLE_QUIDDITIES.items():
        if entries is not None:
            cycles.append(Cycle(Z, entries))
    return cycles
