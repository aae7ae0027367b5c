"""The 2x2 matrix calculus behind frieze patterns.

Everything here revolves around the matrix

    eta(c) = [ c  -1 ]
             [ 1   0 ]

which has determinant 1 for any ring element c.  Interval products
M_{i,j} = eta(c_i) ... eta(c_j) over a cyclic sequence generate frieze rows; a
quiddity cycle is a sequence whose full product is minus the identity, and an
epsilon-cycle one whose full product is eps times the identity.

Cycles are 1-based and cyclic: entry(k) reduces k modulo the length, matching
the convention that c_{k+m} = c_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from quiddity.errors import UsageError
from quiddity.rings import Ring

__all__ = [
    "Mat2",
    "Cycle",
    "eta",
    "identity",
    "minus_identity",
    "product_interval",
    "full_product",
    "is_quiddity",
    "is_epsilon_cycle",
    "scalar_of_identity",
    "rotate",
    "reverse",
    "negate",
    "continuant",
]


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix over a ring, stored entrywise."""

    a11: object
    a12: object
    a21: object
    a22: object

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def det(self):
        return self.a11 * self.a22 - self.a12 * self.a21

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a11, -self.a12, -self.a21, -self.a22)

    def rows(self):
        return [[self.a11, self.a12], [self.a21, self.a22]]


@dataclass(frozen=True)
class Cycle:
    """A cyclic sequence (c_1, ..., c_m) of elements of one ring, m >= 1."""

    ring: Ring
    entries: tuple

    def __init__(self, ring: Ring, entries: Iterable):
        checked = tuple(ring.check_element(e) for e in entries)
        if not checked:
            raise UsageError("a cycle needs at least one entry")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "entries", checked)

    @property
    def m(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, k: int):
        """1-based cyclic access: entry(k) = c_k with c_{k+m} = c_k."""
        return self.entries[(k - 1) % len(self.entries)]

    def __repr__(self) -> str:
        return f"Cycle({self.ring.tag}, {list(self.entries)!r})"

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def eta(ring: Ring, c) -> Mat2:
    """The determinant-1 matrix [[c, -1], [1, 0]]."""
    c = ring.check_element(c)
    one = ring.one
    return Mat2(c, -one, one, ring.zero)


def identity(ring: Ring) -> Mat2:
    return Mat2(ring.one, ring.zero, ring.zero, ring.one)


def minus_identity(ring: Ring) -> Mat2:
    return Mat2(-ring.one, ring.zero, ring.zero, -ring.one)


def product_interval(cycle: Cycle, i: int, j: int) -> Mat2:
    """Left-to-right product eta(c_i) eta(c_{i+1}) ... eta(c_j).

    Indices are cyclic; j is lifted by multiples of m until j >= i - 1, and
    j = i - 1 gives the empty product (the identity).
    """
    m = cycle.m
    while j < i - 1:
        j += m
    acc = identity(cycle.ring)
    for k in range(i, j + 1):
        acc = acc * eta(cycle.ring, cycle.entry(k))
    return acc


def full_product(cycle: Cycle) -> Mat2:
    return product_interval(cycle, 1, cycle.m)


def scalar_of_identity(mat: Mat2, ring: Ring):
    """The scalar s with mat = s * identity, or None if mat is not scalar."""
    if mat.a12 == ring.zero and mat.a21 == ring.zero and mat.a11 == mat.a22:
        return mat.a11
    return None


def is_quiddity(cycle: Cycle) -> bool:
    """True iff the full product is minus the identity."""
    return full_product(cycle) == minus_identity(cycle.ring)


def is_epsilon_cycle(cycle: Cycle, eps: int) -> bool:
    """True iff the full product is eps times the identity, eps in {+1, -1}."""
    if eps not in (1, -1):
        raise UsageError(f"eps must be +1 or -1, got {eps!r}")
    target = identity(cycle.ring) if eps == 1 else minus_identity(cycle.ring)
    return full_product(cycle) == target


def rotate(cycle: Cycle, s: int = 1) -> Cycle:
    """Rotate by s: rotate(c, 1) = (c_m, c_1, ..., c_{m-1})."""
    m = cycle.m
    s %= m
    return Cycle(cycle.ring, cycle.entries[m - s:] + cycle.entries[:m - s])


def reverse(cycle: Cycle) -> Cycle:
    return Cycle(cycle.ring, cycle.entries[::-1])


def negate(cycle: Cycle) -> Cycle:
    return Cycle(cycle.ring, tuple(-e for e in cycle.entries))


def continuant(ring: Ring, entries) -> object:
    """The continuant K(entries): K() = 1, K(c) = c, and
    K(c_1..c_k) = K(c_1..c_{k-1}) * c_k - K(c_1..c_{k-2}).

    This is exactly the top-left entry of eta(c_1) ... eta(c_k).
    """
    prev2 = ring.zero  # K of the (-1)-window
    prev = ring.one  # K of the empty window
    for c in entries:
        prev2, prev = prev, prev * ring.check_element(c) - prev2
    return prev
