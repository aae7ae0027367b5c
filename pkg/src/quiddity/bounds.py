"""Existence of small entries and the global entry bound for quiddity cycles.

Two facts drive everything here.  First, any cycle whose eta-product has a
suitable first column must contain an entry of absolute value below 2 away
from its ends; applied to scalar products this yields two small entries, and
over the integers two small entries in separated positions.  Second, in a
discrete ring whose nonzero elements have norm at least M, every entry of a
quiddity cycle of length n + 3 has absolute value at most ((n-1) + 2M) / M^2.
That bound makes the enumeration in `quiddity.enumeration` finite.

All comparisons are made on squared norms so everything stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from quiddity.cycles import Cycle, full_product, is_quiddity, scalar_of_identity
from quiddity.errors import NotApplicableError, UnsupportedRingError, UsageError
from quiddity.rings import Ring, Z, elements_norm_at_most, norm_sq

__all__ = [
    "BoundContext",
    "quiddity_bound",
    "find_small_window",
    "find_two_small",
    "find_two_small_separated",
    "candidate_entries",
]


def quiddity_bound(M, n: int) -> Fraction:
    """The entry bound ((n-1) + 2M) / M^2 for height-n quiddity cycles over a
    ring whose nonzero norms are bounded below by M.

    With M = 1 this is n + 1.
    """
    M = Fraction(M)
    if M <= 0:
        raise UsageError("norm infimum M must be positive")
    if n < 1:
        raise UsageError("height must be at least 1")
    return ((n - 1) + 2 * M) / (M * M)


@dataclass(frozen=True)
class BoundContext:
    """Bound data for one (ring, height) enumeration instance."""

    M: Fraction
    n: int
    B: Fraction

    @classmethod
    def create(cls, n: int, M=1) -> "BoundContext":
        M = Fraction(M)
        return cls(M, n, quiddity_bound(M, n))


def find_small_window(cycle: Cycle, d=None, e=None) -> int:
    """Smallest j in {2, ..., m-1} with norm_sq(c_j) < 4.

    Requires norm_sq(c_m) >= 1 and norm_sq(c_1*e - d) > norm_sq(e), where
    (d, e) is the first column of the full eta-product.  Pass d and e to have
    them checked against the product, or omit them to use the computed column.
    Existence of j is a theorem given the preconditions; failure to find one
    is a genuine contradiction.
    """
    ring = cycle.ring
    m = cycle.m
    prod = full_product(cycle)
    if d is None and e is None:
        d, e = prod.a11, prod.a21
    elif d is None or e is None:
        raise UsageError("give both d and e, or neither")
    else:
        ring.check_element(d)
        ring.check_element(e)
        if (d, e) != (prod.a11, prod.a21):
            raise UsageError("(d, e) is not the first column of the product")
    if m <= 2:
        raise NotApplicableError("preconditions are unsatisfiable for m <= 2")
    if norm_sq(ring, cycle.entry(m)) < 1:
        raise NotApplicableError("last entry has norm below 1")
    if norm_sq(ring, cycle.entry(1) * e - d) <= norm_sq(ring, e):
        raise NotApplicableError("first-column condition fails")
    for j in range(2, m):
        if norm_sq(ring, cycle.entry(j)) < 4:
            return j
    raise RuntimeError("no small entry found; this contradicts the bound lemma")


def find_two_small(cycle: Cycle) -> tuple:
    """Two distinct positions with norm_sq below 4, smallest first.

    Requires the full eta-product to be a scalar multiple of the identity
    (true for quiddity cycles and epsilon-cycles).  Existence is a theorem;
    the scan asserts it rather than assuming it.
    """
    ring = cycle.ring
    if scalar_of_identity(full_product(cycle), ring) is None:
        raise NotApplicableError("product is not a scalar multiple of identity")
    small = [k for k in range(1, cycle.m + 1) if norm_sq(ring, cycle.entry(k)) < 4]
    if len(small) < 2:
        raise RuntimeError("fewer than two small entries; contradicts the corollary")
    return (small[0], small[1])


def find_two_small_separated(cycle: Cycle) -> tuple:
    """Positions j < k over the integers with |c_j|, |c_k| <= 1, k - j > 1 and
    (j, k) != (1, m).  Defined for integer quiddity cycles of length > 3."""
    if cycle.ring is not Z:
        raise UnsupportedRingError("separated small entries are an integer result")
    if cycle.m <= 3:
        raise NotApplicableError("need length > 3")
    if not is_quiddity(cycle):
        raise NotApplicableError("not a quiddity cycle")
    m = cycle.m
    small = [k for k in range(1, m + 1) if abs(cycle.entry(k)) <= 1]
    for a in range(len(small)):
        for b in range(a + 1, len(small)):
            j, k = small[a], small[b]
            if k - j > 1 and not (j == 1 and k == m):
                return (j, k)
    raise RuntimeError("no separated pair; contradicts the integer corollary")


def candidate_entries(ring: Ring, n: int) -> list:
    """All nonzero elements that can appear in a height-n quiddity cycle over
    a discrete ring with norm infimum 1: norm_sq <= (n+1)^2, sorted."""
    if not ring.is_discrete:
        raise UnsupportedRingError(f"{ring.tag} is not discrete")
    B = quiddity_bound(1, n)
    bound_sq = B * B
    assert bound_sq.denominator == 1
    return elements_norm_at_most(ring, int(bound_sq))
