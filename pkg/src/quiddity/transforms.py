"""Local rewrites of eta-matrix products.

Each operation rewrites a short cyclic window of a cycle and is backed by an
exact 2x2 matrix identity.  Operations that change the product by a global
factor return a SignedCycle carrying that factor; the rest return a plain
Cycle because the product is unchanged.

Index bookkeeping after a contraction: surviving entries keep their original
cyclic order, and the result is based at the smallest surviving original
index.  A merged entry inherits the index of the rightmost window position it
replaces.

Division never falls back to the fraction field: an inexact quotient in a
non-field ring raises NotRepresentableError, and a zero denominator raises
SingularError.  Callers switch rings explicitly if they want fractions.
"""

from __future__ import annotations

from dataclasses import dataclass

from quiddity.cycles import Cycle
from quiddity.errors import (
    NotApplicableError,
    NotRepresentableError,
    SingularError,
    UsageError,
)
from quiddity.rings import Ring

__all__ = [
    "SignedCycle",
    "expand_one",
    "contract_one",
    "expand_minus_one",
    "contract_minus_one",
    "contract_uv",
    "rescale_lambda",
    "contract_zero",
    "shift_zero",
    "conjugate_diag",
    "scale_alternating",
]


@dataclass(frozen=True)
class SignedCycle:
    """A cycle together with the scalar relating its product to the input's.

    Meaning: product(cycle.entries) == sign * product(original entries).
    """

    cycle: Cycle
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise UsageError(f"sign must be +1 or -1, got {self.sign}")


def _norm_k(cycle: Cycle, k: int) -> int:
    """Cyclic position as 1..m."""
    return (k - 1) % cycle.m + 1


def _div(ring: Ring, x, y):
    if y == ring.zero:
        raise SingularError("division by zero in transform")
    q = ring.exact_div(x, y)
    if q is None:
        raise NotRepresentableError(f"{x!r} / {y!r} is not exact in {ring.tag}")
    return q


def _insert(cycle: Cycle, k: int, value, delta) -> Cycle:
    # insert `value` in the gap between positions k and k+1, adding `delta`
    # to both gap neighbors; k = m wraps, basing the result at original 1
    ring = cycle.ring
    if cycle.m < 2:
        raise NotApplicableError("need two distinct gap neighbors")
    k = _norm_k(cycle, k)
    mod = list(cycle.entries)
    if k == cycle.m:
        mod[0] = mod[0] + delta
        mod[-1] = mod[-1] + delta
        out = mod + [value]
    else:
        mod[k - 1] = mod[k - 1] + delta
        mod[k] = mod[k] + delta
        out = mod[:k] + [value] + mod[k:]
    return Cycle(ring, tuple(out))


def _remove_entry(cycle: Cycle, k: int, delta) -> Cycle:
    # drop position k, adding `delta` to both cyclic neighbors
    if cycle.m < 3:
        raise NotApplicableError("need two distinct neighbors to adjust")
    k = _norm_k(cycle, k)
    mod = list(cycle.entries)
    mod[k - 2] = mod[k - 2] + delta          # position k-1 (wraps to m)
    mod[k % cycle.m] = mod[k % cycle.m] + delta  # position k+1 (wraps to 1)
    del mod[k - 1]
    return Cycle(cycle.ring, tuple(mod))


def expand_one(cycle: Cycle, k: int) -> SignedCycle:
    """Insert a 1 in the gap (k, k+1), adding 1 to both neighbors.

    Product is unchanged: eta(a+1) eta(1) eta(b+1) = eta(a) eta(b).
    """
    one = cycle.ring.one
    return SignedCycle(_insert(cycle, k, one, one), 1)


def contract_one(cycle: Cycle, k: int) -> SignedCycle:
    """Remove an entry equal to 1, subtracting 1 from both neighbors."""
    k = _norm_k(cycle, k)
    one = cycle.ring.one
    if cycle.entry(k) != one:
        raise NotApplicableError(f"entry {k} is {cycle.entry(k)!r}, not 1")
    return SignedCycle(_remove_entry(cycle, k, -one), 1)


def expand_minus_one(cycle: Cycle, k: int) -> SignedCycle:
    """Insert a -1 in the gap (k, k+1), subtracting 1 from both neighbors.

    Negates the product: eta(a-1) eta(-1) eta(b-1) = -eta(a) eta(b).
    """
    one = cycle.ring.one
    return SignedCycle(_insert(cycle, k, -one, -one), -1)


def contract_minus_one(cycle: Cycle, k: int) -> SignedCycle:
    """Remove an entry equal to -1, adding 1 to both neighbors; negates the
    product."""
    k = _norm_k(cycle, k)
    one = cycle.ring.one
    if cycle.entry(k) != -one:
        raise NotApplicableError(f"entry {k} is {cycle.entry(k)!r}, not -1")
    return SignedCycle(_remove_entry(cycle, k, one), -1)


def contract_uv(cycle: Cycle, k: int) -> Cycle:
    """Collapse the window (a, u, v, b) at positions k-1..k+2 to three
    entries (a + (1-v)/w, w, b + (1-u)/w) with w = uv - 1.

    The product is unchanged.  w = 0 is singular; inexact quotients in a
    non-field ring are not representable.
    """
    ring = cycle.ring
    if cycle.m < 4:
        raise NotApplicableError("window needs four distinct positions")
    k = _norm_k(cycle, k)
    m = cycle.m
    u = cycle.entry(k)
    v = cycle.entry(k + 1)
    w = u * v - ring.one
    da = _div(ring, ring.one - v, w)
    db = _div(ring, ring.one - u, w)
    mod = list(cycle.entries)
    mod[k - 2] = mod[k - 2] + da          # a at position k-1
    mod[(k + 1) % m] = mod[(k + 1) % m] + db  # b at position k+2
    mod[k % m] = w                        # merged entry at position k+1
    del mod[k - 1]
    return Cycle(ring, tuple(mod))


def rescale_lambda(cycle: Cycle, k: int, lam) -> Cycle:
    """Rewrite the window (a, u, v, b) at positions k-1..k+2 as
    (a + (1/lam - 1)v/w, lam*u, v/lam, b + (lam - 1)u/w), w = uv - 1.

    The product is unchanged.  lam = 0 or w = 0 is singular.
    """
    ring = cycle.ring
    ring.check_element(lam)
    if lam == ring.zero:
        raise SingularError("scale factor must be nonzero")
    if cycle.m < 4:
        raise NotApplicableError("window needs four distinct positions")
    k = _norm_k(cycle, k)
    m = cycle.m
    u = cycle.entry(k)
    v = cycle.entry(k + 1)
    w = u * v - ring.one
    if w == ring.zero:
        raise SingularError("uv = 1 makes the window singular")
    # (1/lam - 1) v / w == (1 - lam) v / (lam w), kept as one exact division
    da = _div(ring, (ring.one - lam) * v, lam * w)
    db = _div(ring, (lam - ring.one) * u, w)
    mod = list(cycle.entries)
    mod[k - 2] = mod[k - 2] + da
    mod[(k + 1) % m] = mod[(k + 1) % m] + db
    mod[k - 1] = lam * u
    mod[k % m] = _div(ring, v, lam)
    return Cycle(ring, tuple(mod))


def contract_zero(cycle: Cycle, k: int) -> SignedCycle:
    """Collapse (a, 0, b) at positions k-1..k+1 to the single entry a + b.

    Negates the product: eta(a) eta(0) eta(b) = -eta(a + b).  The merged
    entry inherits index k+1; positions k-1 and k are removed.
    """
    ring = cycle.ring
    k = _norm_k(cycle, k)
    if cycle.entry(k) != ring.zero:
        raise NotApplicableError(f"entry {k} is {cycle.entry(k)!r}, not 0")
    if cycle.m < 3:
        raise NotApplicableError("result would be empty")
    m = cycle.m
    mod = list(cycle.entries)
    mod[k % m] = mod[k - 2] + mod[k % m]
    removed = {(k - 2) % m, k - 1}
    out = [mod[i] for i in range(m) if i not in removed]
    return SignedCycle(Cycle(ring, tuple(out)), -1)


def shift_zero(cycle: Cycle, k: int, u) -> Cycle:
    """Slide weight across a zero: (a, 0, b) becomes (a+u, 0, b-u).

    The product is unchanged for any u.
    """
    ring = cycle.ring
    ring.check_element(u)
    k = _norm_k(cycle, k)
    if cycle.entry(k) != ring.zero:
        raise NotApplicableError(f"entry {k} is {cycle.entry(k)!r}, not 0")
    m = cycle.m
    mod = list(cycle.entries)
    mod[k - 2] = mod[k - 2] + u
    mod[k % m] = mod[k % m] - u
    return Cycle(ring, tuple(mod))


def conjugate_diag(ring: Ring, window, z):
    """Conjugate the triple product eta(a) eta(u) eta(b) by diag(z, 1/z).

    Returns (a', u, b') with a' = a/z^2 - (1/z^2 - 1)/u and
    b' = z^2 b - (z^2 - 1)/u, so that
    diag(1/z, z) eta(a) eta(u) eta(b) diag(z, 1/z) = eta(a') eta(u) eta(b').

    This is a standalone window identity, not a cycle operation.
    """
    a, u, b = (ring.check_element(x) for x in window)
    ring.check_element(z)
    if u == ring.zero or z == ring.zero:
        raise SingularError("u and z must be nonzero")
    z2 = z * z
    a2 = _div(ring, a, z2) - _div(ring, ring.one - z2, z2 * u)
    b2 = z2 * b - _div(ring, z2 - ring.one, u)
    return (a2, u, b2)


def scale_alternating(cycle: Cycle, t) -> Cycle:
    """Multiply odd positions by t and even positions by 1/t (m even).

    Conjugates the product by diag(t, 1), so a quiddity cycle stays one and
    its frieze keeps zeros in exactly the same positions.
    """
    ring = cycle.ring
    ring.check_element(t)
    if t == ring.zero:
        raise SingularError("scale factor must be nonzero")
    if cycle.m % 2 != 0:
        raise NotApplicableError("alternating scaling needs even length")
    out = []
    for k in range(1, cycle.m + 1):
        c = cycle.entry(k)
        out.append(t * c if k % 2 == 1 else _div(ring, c, t))
    return Cycle(ring, tuple(out))
