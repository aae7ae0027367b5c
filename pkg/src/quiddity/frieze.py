"""Frieze patterns: generation from quiddity cycles and window verification.

A FriezePattern stores one fundamental period of the pattern generated by a
quiddity cycle (c_1, ..., c_m): row i holds the entries c_{i,j} for
j = i, ..., i+m, where

    c_{i,i} = 0 and c_{i,i+1} = 1 are the declared border,
    c_{i,j} for i+2 <= j <= i+m-2 is the interior band (n = m-3 entries), and
    c_{i,i+m-1} = 1, c_{i,i+m} = 0 close the row.

Interior entries are continuants: c_{i,j} is the top-left entry of the matrix
product over the window c_i .. c_{j-2}.  The closing 1 and 0 are computed from
that same formula and asserted against the declared border rather than being
written by fiat.  The whole array repeats with c_{i,j} = c_{i+m,j+m}.

"Non-zero" always refers to the interior band only; the structural border 0s
and 1s never count.  Degenerate cycles are allowed: m = 2 gives height -1
(border rows only) and m = 3 height 0.

A FriezeWindow is any staircase-shaped finite array (rows plus per-row start
columns).  verify() checks the two defining determinant conditions on every
complete adjacent 2x2 (determinant 1) and 3x3 (determinant 0) submatrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from quiddity.cycles import Cycle, continuant, is_quiddity
from quiddity.errors import InvalidCycleError, UsageError
from quiddity.rings import Ring

__all__ = [
    "FriezePattern",
    "FriezeWindow",
    "VerifyReport",
    "frieze_from_cycle",
    "verify",
    "zero_positions",
    "is_nonzero",
]


@dataclass(frozen=True)
class FriezePattern:
    """One period of the tame frieze pattern of a quiddity cycle."""

    cycle: Cycle
    rows: tuple  # rows[i-1][j-i] = c_{i,j} for j = i .. i+m

    @property
    def ring(self) -> Ring:
        return self.cycle.ring

    @property
    def m(self) -> int:
        return self.cycle.m

    @property
    def height(self) -> int:
        return self.cycle.m - 3

    def entry(self, i: int, j: int):
        """c_{i,j}, using periodicity c_{i,j} = c_{i+m,j+m} to normalize i."""
        m = self.m
        shift = (i - 1) // m
        i -= shift * m
        j -= shift * m
        if not i <= j <= i + m:
            raise UsageError(f"({i}, {j}) lies outside the stored period")
        return self.rows[i - 1][j - i]

    def window(self, row_start: int = 1, row_count: int | None = None) -> "FriezeWindow":
        """Materialize rows row_start .. row_start+row_count-1 as a window."""
        if row_count is None:
            row_count = self.m
        rows = []
        offsets = []
        for i in range(row_start, row_start + row_count):
            rows.append(list(self.rows[(i - 1) % self.m]))
            offsets.append(i)
        return FriezeWindow(self.ring, tuple(tuple(r) for r in rows), tuple(offsets))


@dataclass(frozen=True)
class FriezeWindow:
    """A finite staircase array: rows[r] starts at column offsets[r]."""

    ring: Ring
    rows: tuple
    offsets: tuple

    def __post_init__(self):
        if len(self.rows) != len(self.offsets):
            raise UsageError("one offset per row required")
        for row in self.rows:
            for x in row:
                self.ring.check_element(x)

    def cell(self, r: int, col: int):
        """Entry of 0-based row r at absolute column col, or None if absent."""
        off = self.offsets[r]
        if off <= col < off + len(self.rows[r]):
            return self.rows[r][col - off]
        return None

    def render(self) -> str:
        """ASCII staircase with aligned columns."""
        cols = {}
        for r, row in enumerate(self.rows):
            for k, x in enumerate(row):
                cols.setdefault(self.offsets[r] + k, []).append(str(x))
        if not cols:
            return ""
        lo, hi = min(cols), max(cols)
        width = {c: max((len(s) for s in cols.get(c, [""])), default=0) for c in range(lo, hi + 1)}
        lines = []
        for r, row in enumerate(self.rows):
            parts = []
            for c in range(lo, hi + 1):
                x = self.cell(r, c)
                parts.append((str(x) if x is not None else "").rjust(width[c]))
            lines.append(" ".join(parts).rstrip())
        return "\n".join(lines)


@dataclass(frozen=True)
class VerifyReport:
    sl2_ok: bool
    tame_ok: bool
    failures: tuple = field(default_factory=tuple)
    # failures: ("sl2" | "tame", row_index, column) top-left positions


def frieze_from_cycle(cycle: Cycle) -> FriezePattern:
    """Generate the pattern; requires a quiddity cycle of length >= 2.

    The closing border of each row (the 1 and 0 at columns i+m-1 and i+m) is
    produced by the continuant recurrence and asserted, not declared.
    """
    ring = cycle.ring
    m = cycle.m
    if m < 2:
        raise InvalidCycleError("need length >= 2")
    if not is_quiddity(cycle):
        raise InvalidCycleError(f"not a quiddity cycle: {cycle}")
    rows = []
    for i in range(1, m + 1):
        row = [ring.zero, ring.one]
        prev2, prev = ring.zero, ring.one
        for k in range(i, i + m - 1):
            prev2, prev = prev, prev * cycle.entry(k) - prev2
            row.append(prev)
        assert row[m - 1] == ring.one, "computed closing 1 disagrees"
        assert row[m] == ring.zero, "computed closing 0 disagrees"
        rows.append(tuple(row))
    return FriezePattern(cycle, tuple(rows))


def verify(window: FriezeWindow) -> VerifyReport:
    """Check determinant 1 on all complete adjacent 2x2 submatrices and
    determinant 0 on all complete adjacent 3x3 submatrices."""
    ring = window.ring
    failures = []
    sl2_ok = True
    tame_ok = True
    nrows = len(window.rows)
    for r in range(nrows - 1):
        lo = min(window.offsets[r], window.offsets[r + 1])
        hi = max(window.offsets[r] + len(window.rows[r]),
                 window.offsets[r + 1] + len(window.rows[r + 1]))
        for c in range(lo, hi):
            a = window.cell(r, c)
            b = window.cell(r, c + 1)
            x = window.cell(r + 1, c)
            y = window.cell(r + 1, c + 1)
            if None in (a, b, x, y):
                continue
            if a * y - b * x != ring.one:
                sl2_ok = False
                failures.append(("sl2", r, c))
    for r in range(nrows - 2):
        lo = min(window.offsets[r: r + 3])
        hi = max(window.offsets[rr] + len(window.rows[rr]) for rr in range(r, r + 3))
        for c in range(lo, hi):
            sub = [[window.cell(r + dr, c + dc) for dc in range(3)] for dr in range(3)]
            if any(x is None for row in sub for x in row):
                continue
            det = (sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1])
                   - sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0])
                   + sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]))
            if det != ring.zero:
                tame_ok = False
                failures.append(("tame", r, c))
    return VerifyReport(sl2_ok, tame_ok, tuple(failures))


def zero_positions(f: FriezePattern) -> set:
    """Interior positions (i, j), i+2 <= j <= i+m-2, holding a zero."""
    zero = f.ring.zero
    out = set()
    for i in range(1, f.m + 1):
        for j in range(i + 2, i + f.m - 1):
            if f.rows[i - 1][j - i] == zero:
                out.add((i, j))
    return out


def is_nonzero(f: FriezePattern) -> bool:
    """True iff every interior entry is nonzero (borders never count)."""
    zero = f.ring.zero
    for i in range(1, f.m + 1):
        for j in range(i + 2, i + f.m - 1):
            if f.rows[i - 1][j - i] == zero:
                return False
    return True
