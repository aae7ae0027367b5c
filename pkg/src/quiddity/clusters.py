"""Polygon diagonals as frieze entries: Ptolemy checks and zero-free clusters.

A tame frieze of height n labels the edges and diagonals of an (n+3)-gon:
edges get 1, and the diagonal between vertices i < j gets a grid entry, read
here as `diagonal_label`.  Crossing diagonals then satisfy the Ptolemy
relation, and a triangulation whose diagonals all carry nonzero labels (a
zero-free cluster) exhibits the frieze as a specialization of a type-A
cluster algebra.  Such a cluster exists whenever the quiddity cycle has at
least one nonzero entry; the alternating all-zero friezes are the only
exceptions.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from quiddity.cycles import Cycle, is_quiddity
from quiddity.errors import (
    InvalidCycleError,
    NotApplicableError,
    UsageError,
)
from quiddity.frieze import FriezePattern, frieze_from_cycle
from quiddity.labelling import Triangulation, enumerate_triangulations
from quiddity.rings import Z

__all__ = [
    "Cluster",
    "diagonal_label",
    "check_ptolemy",
    "is_degenerate_alternating",
    "all_ones_cluster",
    "find_zero_free_cluster",
]


@dataclass(frozen=True)
class Cluster:
    """A triangulation together with the frieze entry on each diagonal."""

    triangulation: Triangulation
    labels: dict  # (i, j) -> ring element

    def __post_init__(self):
        if set(self.labels) != set(self.triangulation.diagonals):
            raise UsageError("labels must cover exactly the diagonals")

    @property
    def m(self) -> int:
        return self.triangulation.m

    def has_zero(self, ring) -> bool:
        return any(v == ring.zero for v in self.labels.values())


def diagonal_label(f: FriezePattern, i: int, j: int):
    """The frieze entry sitting on the diagonal (i, j) of the m-gon.

    Vertices are 1..m; the diagonal between the neighbours of vertex k
    carries the quiddity entry c_k, which places (i, j) at grid position
    (i+1, j+1).
    """
    m = f.m
    if not (1 <= i < j <= m):
        raise UsageError(f"need 1 <= i < j <= m, got ({i}, {j})")
    if j - i == 1 or (i, j) == (1, m):
        raise UsageError(f"({i}, {j}) is an edge of the {m}-gon, not a diagonal")
    return f.entry(i + 1, j + 1)


def _pair_label(f: FriezePattern, i: int, j: int):
    # edges implicitly carry 1
    if j - i == 1 or (i, j) == (1, f.m):
        return f.ring.one
    return diagonal_label(f, i, j)


def _crossing_pairs(m: int):
    diags = [(i, j) for i in range(1, m + 1) for j in range(i + 2, m + 1)
             if (i, j) != (1, m)]
    for (i, j), (k, l) in itertools.combinations(diags, 2):
        if i < k < j < l or k < i < l < j:
            yield tuple(sorted(((i, j), (k, l))))


def check_ptolemy(f: FriezePattern, sample: int | None = None) -> bool:
    """Whether c_{i,j} c_{k,l} = c_{i,k} c_{j,l} + c_{i,l} c_{j,k} holds for
    crossing diagonal pairs; all pairs, or `sample` of them drawn with a
    fixed seed."""
    pairs = list(_crossing_pairs(f.m))
    if sample is not None:
        rng = random.Random(1729)
        pairs = [rng.choice(pairs) for _ in range(sample)] if pairs else []
    def lab(a, b):
        return _pair_label(f, min(a, b), max(a, b))

    for (i, j), (k, l) in pairs:
        left = lab(i, j) * lab(k, l)
        right = lab(i, k) * lab(j, l) + lab(i, l) * lab(j, k)
        if left != right:
            return False
    return True


def is_degenerate_alternating(cycle: Cycle) -> bool:
    """For odd-length quiddity cycles: do consecutive entries always satisfy
    c_i c_{i+1} = 1 or c_i = c_{i+1} = 0?

    For odd length the zero branch can never close up, so a True answer
    forces the all-ones cycle with m = 3 (mod 6); that consequence is
    asserted, not assumed.
    """
    if cycle.m % 2 == 0:
        raise NotApplicableError("defined for odd-length cycles")
    if not is_quiddity(cycle):
        raise InvalidCycleError(f"not a quiddity cycle: {cycle}")
    ring = cycle.ring
    for i in range(1, cycle.m + 1):
        a, b = cycle.entry(i), cycle.entry(i + 1)
        if a * b == ring.one or (a == ring.zero and b == ring.zero):
            continue
        return False
    assert all(c == ring.one for c in cycle.entries)
    assert cycle.m % 6 == 3
    return True


def _mod6_label(ring, d: int):
    # entry on a diagonal of the all-ones frieze, by gap d = j - i mod 6
    r = d % 6
    if r in (1, 2):
        return ring.one
    if r in (0, 3):
        return ring.zero
    return -ring.one


def all_ones_cluster(m: int, ring=Z) -> Cluster:
    """An explicit zero-free cluster for the all-ones cycle of length
    m = 6l + 3: a concrete fan-and-zigzag triangulation avoiding gaps
    divisible by 3, where the all-ones frieze vanishes."""
    if m % 6 != 3:
        raise UsageError("the all-ones cycle needs length 3 mod 6")
    if m == 3:
        return Cluster(Triangulation(3, frozenset()), {})
    ell = (m - 3) // 6
    diags = {(1, 3)}
    for k in range(2, 2 * ell + 1):
        diags.add((1, 3 * k - 1))
        diags.add((1, 3 * k))
    for k in range(1, 2 * ell + 1):
        diags.add((3 * k, 3 * k + 2))
    diags.add((1, 6 * ell + 2))
    tri = Triangulation(m, frozenset(diags))
    f = frieze_from_cycle(Cycle(ring, tuple(ring.one for _ in range(m))))
    labels = {}
    for i, j in tri.diagonals:
        value = diagonal_label(f, i, j)
        assert value == _mod6_label(ring, j - i)
        assert value != ring.zero
        labels[(i, j)] = value
    return Cluster(tri, labels)


def find_zero_free_cluster(cycle: Cycle):
    """First triangulation (in enumeration order) whose diagonals all carry
    nonzero frieze entries, or None when the cycle is all-zero.

    Existence for any quiddity cycle with a nonzero entry and m >= 4 is a
    theorem; an exhausted search on such input raises rather than returning
    None.
    """
    if cycle.m < 4:
        raise NotApplicableError("clusters need at least one diagonal")
    if not is_quiddity(cycle):
        raise InvalidCycleError(f"not a quiddity cycle: {cycle}")
    ring = cycle.ring
    f = frieze_from_cycle(cycle)
    for tri in enumerate_triangulations(cycle.m):
        labels = {}
        for i, j in sorted(tri.diagonals):
            value = diagonal_label(f, i, j)
            if value == ring.zero:
                labels = None
                break
            labels[(i, j)] = value
        if labels is not None:
            return Cluster(tri, labels)
    if all(c == ring.zero for c in cycle.entries):
        return None
    raise RuntimeError("no zero-free cluster found; contradicts the theorem")
