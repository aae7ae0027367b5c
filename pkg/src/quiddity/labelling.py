"""Triangulations of convex polygons with integer-labelled triangles.

A labelling assigns an integer to every triangle of a triangulation of an
m-gon (vertices 1..m counterclockwise).  It is admissible when

  (i)  the triangles whose label is not 1 or -1 can be split into pairs of
       edge-adjacent triangles carrying opposite labels (such a pair is
       called a square), and
  (ii) the number of negative labels plus half the number of zero labels is
       even.

Summing the labels of the triangles attached at each vertex then yields a
quiddity cycle, and every integer quiddity cycle arises this way: replaying
an inverted reduction trace glues labelled building blocks onto the 2-gon.
The blocks act on vertex sums exactly like the glue instructions of
`quiddity.reduction`:

    triangle s at edge (p,q):      p---q      ->     p---n---q
                                                      \\  |s /
                                                       (new vertex n)
    sums (..., a, b, ...) become (..., a+s, s, b+s, ...)

    square x at edge (p,q):        p---q      ->   p--u--v--q
                                                    \\ x| -x /
                                                     (diagonal p-v)
    sums (..., a, b, ...) become (..., a, x, 0, b-x, ...)

The combinatorial reduction engine works in the other direction, removing
ears (vertices in a single triangle) and squares; its six cases mirror the
integer-cycle reduction cases one for one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from quiddity.cycles import Cycle, is_quiddity
from quiddity.errors import (
    InvalidCycleError,
    InvalidLabellingError,
    NotApplicableError,
    UnsupportedRingError,
    UsageError,
)
from quiddity.reduction import apply_glue_to_sums, invert_trace, reduce_to_base
from quiddity.rings import Z

__all__ = [
    "Triangulation",
    "Labelling",
    "LabellingStep",
    "enumerate_triangulations",
    "is_admissible",
    "labelling_sign",
    "cycle_from_labelling",
    "labelling_from_cycle",
    "cc_quiddity",
    "find_12_or_131",
    "reduce_labelling_step",
]


def _crossing(d1: tuple, d2: tuple) -> bool:
    (a, b), (c, d) = sorted((d1, d2))
    return a < c < b < d


@dataclass(frozen=True)
class Triangulation:
    """A triangulation of a convex m-gon, stored as its diagonal set.

    Diagonals are sorted vertex pairs (i, j) with i < j.  The triangle list
    is derived by splitting along the unique apex over each edge and cached.
    The 2-gon has no triangles at all; that degenerate case is allowed.
    """

    m: int
    diagonals: frozenset

    def __post_init__(self):
        m = self.m
        if m < 2:
            raise UsageError("polygon needs at least 2 vertices")
        diags = frozenset(tuple(sorted(d)) for d in self.diagonals)
        object.__setattr__(self, "diagonals", diags)
        for i, j in diags:
            if not (1 <= i < j <= m) or j - i < 2 or (i, j) == (1, m):
                raise UsageError(f"({i}, {j}) is not a chord of the {m}-gon")
        if len(diags) != max(m - 3, 0):
            raise UsageError(f"a triangulated {m}-gon has {max(m - 3, 0)} diagonals")
        for d1 in diags:
            for d2 in diags:
                if d1 < d2 and _crossing(d1, d2):
                    raise UsageError(f"diagonals {d1} and {d2} cross")
        object.__setattr__(self, "triangles", self._derive_triangles())

    def _derive_triangles(self) -> tuple:
        if self.m == 2:
            return ()
        edges = set(self.diagonals)
        for v in range(1, self.m):
            edges.add((v, v + 1))
        edges.add((1, self.m))
        out = []

        def split(a: int, b: int):
            # triangle over edge (a, b) on the side of vertices a+1..b-1
            if b - a < 2:
                return
            apex = [c for c in range(a + 1, b)
                    if tuple(sorted((a, c))) in edges and tuple(sorted((c, b))) in edges]
            assert len(apex) == 1, "edge must support exactly one triangle"
            c = apex[0]
            out.append((a, c, b))
            split(a, c)
            split(c, b)

        split(1, self.m)
        assert len(out) == self.m - 2
        return tuple(sorted(out))

    def incident_triangles(self, v: int) -> tuple:
        return tuple(t for t in self.triangles if v in t)

    def is_ear(self, v: int) -> bool:
        """True iff vertex v lies in exactly one triangle."""
        prev = (v - 2) % self.m + 1
        nxt = v % self.m + 1
        return tuple(sorted((prev, v, nxt))) in self.triangles


@lru_cache(maxsize=None)
def _triangulation_diagonal_sets(m: int) -> tuple:
    if m == 2:
        return (frozenset(),)

    def fill(a: int, b: int) -> list:
        # all diagonal sets triangulating the sub-polygon a..b
        if b - a < 2:
            return [frozenset()]
        out = []
        for c in range(a + 1, b):
            left = [frozenset({(a, c)}) if c - a >= 2 else frozenset()]
            right = [frozenset({(c, b)}) if b - c >= 2 else frozenset()]
            for ls in fill(a, c):
                for rs in fill(c, b):
                    out.append(left[0] | right[0] | ls | rs)
        return out

    return tuple(fill(1, m))


def enumerate_triangulations(m: int) -> list:
    """All triangulations of the m-gon in a fixed recursive order.

    The count is the Catalan number C(m-2): 1, 1, 2, 5, 14, ... for
    m = 2, 3, 4, 5, 6, ...
    """
    if m < 2:
        raise UsageError("polygon needs at least 2 vertices")
    return [Triangulation(m, d) for d in _triangulation_diagonal_sets(m)]


@dataclass(frozen=True)
class Labelling:
    triangulation: Triangulation
    labels: dict  # sorted triangle tuple -> int

    def __post_init__(self):
        tris = set(self.triangulation.triangles)
        keyed = {tuple(sorted(t)): v for t, v in self.labels.items()}
        if set(keyed) != tris:
            raise InvalidLabellingError("labels must cover exactly the triangles")
        for v in keyed.values():
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidLabellingError(f"labels must be integers, got {v!r}")
        object.__setattr__(self, "labels", keyed)

    @property
    def m(self) -> int:
        return self.triangulation.m

    def vertex_sums(self) -> tuple:
        sums = [0] * self.m
        for t, v in self.labels.items():
            for vertex in t:
                sums[vertex - 1] += v
        return tuple(sums)


def _dual_neighbours(tri: Triangulation) -> dict:
    # triangles sharing a diagonal are neighbours; the result is a tree
    by_edge = {}
    for t in tri.triangles:
        a, b, c = t
        for e in ((a, b), (b, c), (a, c)):
            by_edge.setdefault(e, []).append(t)
    nbrs = {t: [] for t in tri.triangles}
    for d in tri.diagonals:
        pair = by_edge.get(d, [])
        assert len(pair) == 2, "a diagonal borders exactly two triangles"
        nbrs[pair[0]].append(pair[1])
        nbrs[pair[1]].append(pair[0])
    return nbrs


def square_partition(lab: Labelling):
    """The forced pairing of non-(+-1)-labelled triangles into adjacent
    opposite-label squares, or None if no such pairing exists.

    The dual graph of a triangulation is a tree, so the pairing is unique
    when it exists: a leaf triangle that needs a partner can only take its
    single neighbour.
    """
    tri = lab.triangulation
    if not tri.triangles:
        return []
    nbrs = _dual_neighbours(tri)
    need = {t for t in tri.triangles if lab.labels[t] not in (1, -1)}
    # peel leaves of the dual tree, matching forced pairs as they surface
    degree = {t: len(ns) for t, ns in nbrs.items()}
    alive = set(tri.triangles)
    matched = {}
    order = [t for t in tri.triangles if degree[t] <= 1]
    pairs = []
    while order:
        t = order.pop()
        if t not in alive:
            continue
        alive.discard(t)
        parent = next((n for n in nbrs[t] if n in alive), None)
        if t in need and t not in matched:
            if parent is None or parent not in need or parent in matched:
                return None
            if lab.labels[t] != -lab.labels[parent]:
                return None
            matched[t] = parent
            matched[parent] = t
            pairs.append(tuple(sorted((t, parent))))
            alive.discard(parent)
            for n in nbrs[parent]:
                if n in alive:
                    degree[n] -= 1
                    if degree[n] <= 1:
                        order.append(n)
        else:
            if parent is not None:
                degree[parent] -= 1
                if degree[parent] <= 1:
                    order.append(parent)
    if any(t in need and t not in matched for t in tri.triangles):
        return None
    return sorted(pairs)


def labelling_sign(lab: Labelling) -> int:
    """(-1)^d with d = (number of negative labels) + (zero labels)/2.

    Raises if the number of zero labels is odd (then d is no integer and the
    sign is undefined).
    """
    neg = sum(1 for v in lab.labels.values() if v < 0)
    zeros = sum(1 for v in lab.labels.values() if v == 0)
    if zeros % 2 != 0:
        raise InvalidLabellingError("sign undefined: odd number of zero labels")
    return -1 if (neg + zeros // 2) % 2 else 1


def is_admissible(lab: Labelling) -> bool:
    if square_partition(lab) is None:
        return False
    return labelling_sign(lab) == 1


def cycle_from_labelling(lab: Labelling) -> Cycle:
    """Vertex sums of an admissible labelling, as an integer quiddity cycle.

    That the sums always form a quiddity cycle is a theorem; it is asserted
    on every call rather than trusted.
    """
    if not is_admissible(lab):
        raise InvalidLabellingError("labelling is not admissible")
    cycle = Cycle(Z, lab.vertex_sums())
    assert is_quiddity(cycle), "admissible labelling must give a quiddity cycle"
    return cycle


def cc_quiddity(tri: Triangulation) -> Cycle:
    """Per-vertex triangle counts: the all-ones labelling's quiddity cycle."""
    if tri.m == 2:
        return Cycle(Z, (0, 0))
    counts = [0] * tri.m
    for t in tri.triangles:
        for v in t:
            counts[v - 1] += 1
    cycle = Cycle(Z, tuple(counts))
    assert is_quiddity(cycle)
    return cycle


class _PolygonBuilder:
    """Mutable polygon-with-labelling used to replay glue scripts."""

    def __init__(self):
        self.m = 2
        self.diagonals = set()
        self.labels = {}

    def _shift(self, threshold: int, by: int):
        def ren(v):
            return v + by if v > threshold else v

        self.diagonals = {tuple(sorted((ren(a), ren(b)))) for a, b in self.diagonals}
        self.labels = {tuple(sorted(ren(v) for v in t)): x
                       for t, x in self.labels.items()}

    def _add_chord(self, a: int, b: int):
        a, b = sorted((a, b))
        if b - a >= 2 and (a, b) != (1, self.m):
            self.diagonals.add((a, b))

    def negate(self):
        self.labels = {t: -x for t, x in self.labels.items()}

    def glue_triangle(self, p: int, s: int):
        q = p % self.m + 1
        if p < self.m:
            self._shift(p, 1)
            new = p + 1
            q = p + 2
        else:
            new = self.m + 1
        self.m += 1
        self._add_chord(p, q)  # the glued-over edge becomes interior
        self.labels[tuple(sorted((p, new, q)))] = s

    def glue_square(self, p: int, x: int):
        q = p % self.m + 1
        if p < self.m:
            self._shift(p, 2)
            u, v, q = p + 1, p + 2, p + 3
        else:
            u, v = self.m + 1, self.m + 2
        self.m += 2
        self._add_chord(p, q)  # glued-over edge
        self._add_chord(p, v)  # internal diagonal of the square
        self.labels[tuple(sorted((p, u, v)))] = x
        self.labels[tuple(sorted((p, v, q)))] = -x

    def apply(self, instr: tuple):
        if instr[0] == "negate":
            self.negate()
        elif instr[0] == "triangle":
            self.glue_triangle(instr[1], instr[2])
        elif instr[0] == "square":
            self.glue_square(instr[1], instr[2])
        else:
            raise ValueError(f"unknown glue instruction {instr!r}")

    def sums(self) -> tuple:
        out = [0] * self.m
        for t, x in self.labels.items():
            for v in t:
                out[v - 1] += x
        return tuple(out)

    def rotate_to(self, target: tuple):
        s = self.sums()
        assert len(s) == len(target)
        for r in range(len(s)):
            if s[r:] + s[:r] == target:
                break
        else:
            raise AssertionError("replayed sums are not a rotation of the target")
        if r:
            def ren(v):
                return (v - 1 - r) % self.m + 1

            self.diagonals = {tuple(sorted((ren(a), ren(b))))
                              for a, b in self.diagonals}
            self.labels = {tuple(sorted(ren(v) for v in t)): x
                           for t, x in self.labels.items()}

    def freeze(self) -> Labelling:
        return Labelling(Triangulation(self.m, frozenset(self.diagonals)),
                         dict(self.labels))


def labelling_from_cycle(cycle: Cycle) -> Labelling:
    """An admissible labelling whose vertex sums are exactly `cycle`.

    Built by reducing the cycle to (0,0) and replaying the inverted trace as
    block gluings on the 2-gon.  The result is one of possibly several
    admissible labellings for the cycle.
    """
    if cycle.ring is not Z:
        raise UnsupportedRingError("labellings model integer quiddity cycles")
    if not is_quiddity(cycle):
        raise InvalidCycleError(f"not a quiddity cycle: {cycle}")
    builder = _PolygonBuilder()
    for target, script in invert_trace(reduce_to_base(cycle)):
        expected = builder.sums()
        for instr in script:
            expected = apply_glue_to_sums(expected, instr)
            builder.apply(instr)
            assert builder.sums() == expected, "polygon and sum replay diverged"
        builder.rotate_to(target)
        assert is_admissible(builder.freeze()), "replay lost admissibility"
    result = builder.freeze()
    assert cycle_from_labelling(result).entries == cycle.entries
    return result


def find_12_or_131(q: Cycle):
    """A guaranteed small-entry structure in a triangulation quiddity cycle:
    either ("pairs", (p1, p2)) with disjoint cyclic windows (1,2) or (2,1)
    at p1 and p2, or ("triple", (p,)) with window (1,3,1) at p.

    Defined for per-vertex triangle-count cycles (positive entries) of
    length above 3; for those, one of the two findings always exists.
    """
    if q.ring is not Z:
        raise UnsupportedRingError("triangle-count cycles are integer cycles")
    if q.m <= 3:
        raise NotApplicableError("need length > 3")
    if any(c < 1 for c in q.entries) or not is_quiddity(q):
        raise InvalidCycleError("not a triangle-count quiddity cycle")
    m = q.m
    windows = [p for p in range(1, m + 1)
               if (q.entry(p), q.entry(p + 1)) in ((1, 2), (2, 1))]
    for a in range(len(windows)):
        for b in range(a + 1, len(windows)):
            p1, p2 = windows[a], windows[b]
            used1 = {(p1 - 1) % m, p1 % m}
            used2 = {(p2 - 1) % m, p2 % m}
            if not (used1 & used2):
                return ("pairs", (p1, p2))
    for p in range(1, m + 1):
        if (q.entry(p), q.entry(p + 1), q.entry(p + 2)) == (1, 3, 1):
            return ("triple", (p,))
    raise RuntimeError("neither finding exists; contradicts the window lemma")


@dataclass(frozen=True)
class LabellingStep:
    case_tag: str
    indices: tuple
    before: Labelling
    after: Labelling

    @property
    def terminal(self) -> bool:
        return self.case_tag == "TC0"


def _cyc(v: int, m: int) -> int:
    return (v - 1) % m + 1


def _remove_ear(lab: Labelling, k: int) -> Labelling:
    """Drop ear vertex k and its triangle; densely renumber.

        p---k---q          p---q
         \\  |  /     ->     (edge p-q now on the boundary)
          \\ | /
    """
    m = lab.m
    p, q = _cyc(k - 1, m), _cyc(k + 1, m)
    ear = tuple(sorted((p, k, q)))
    assert ear in lab.labels
    base = tuple(sorted((p, q)))
    diagonals = set(lab.triangulation.diagonals)
    diagonals.discard(base)

    def ren(v):
        return v - 1 if v > k else v

    new_diags = frozenset(tuple(sorted((ren(a), ren(b)))) for a, b in diagonals)
    labels = {tuple(sorted(ren(v) for v in t)): x
              for t, x in lab.labels.items() if t != ear}
    return Labelling(Triangulation(m - 1, new_diags), labels)


def _square_at(lab: Labelling, k: int):
    """The matched square occupying vertices (k-1, k, k+1, k+2), if any.

    Both internal-diagonal orientations are recognized:

        a---u---v---b        a---u---v---b
         \\  |x /-x /          \\ -x\\ x| /
          \\ | /   /      or    \\   \\ |/        a = k-1, u = k,
           \\|/   /              \\   \\|         v = k+1, b = k+2
            *----                 ----*

    Returns the triangle pair or None.  Only pairs from the canonical
    square partition count; a coincidental opposite-label adjacency that the
    partition does not pair is not a removable square.
    """
    m = lab.m
    a, u, v, b = (_cyc(k - 1 + i, m) for i in range(4))
    if len({a, u, v, b}) != 4:
        return None
    pairs = square_partition(lab)
    if not pairs:
        return None
    for t1, t2 in ((tuple(sorted((a, u, v))), tuple(sorted((a, v, b)))),
                   (tuple(sorted((a, u, b))), tuple(sorted((u, v, b))))):
        if tuple(sorted((t1, t2))) in pairs:
            return (t1, t2)
    return None


def _remove_square(lab: Labelling, k: int) -> Labelling:
    """Drop the square on vertices (k-1 .. k+2): both triangles and the two
    middle vertices; densely renumber."""
    m = lab.m
    square = _square_at(lab, k)
    assert square is not None
    a, u, v, b = (_cyc(k - 1 + i, m) for i in range(4))
    gone = set(square)
    diagonals = {d for d in lab.triangulation.diagonals
                 if u not in d and v not in d}
    diagonals.discard(tuple(sorted((a, b))))

    removed = sorted((u, v))

    def ren(x):
        return x - sum(1 for r in removed if r < x)

    new_diags = frozenset(tuple(sorted((ren(p), ren(q)))) for p, q in diagonals)
    labels = {tuple(sorted(ren(x) for x in t)): val
              for t, val in lab.labels.items() if t not in gone}
    return Labelling(Triangulation(m - 2, new_diags), labels)


def _negated(lab: Labelling) -> Labelling:
    return Labelling(lab.triangulation, {t: -x for t, x in lab.labels.items()})


def reduce_labelling_step(lab: Labelling) -> LabellingStep:
    """One combinatorial reduction case, chosen by fixed priority
    TC0 > TC1 > TC2 > TC3 > TC4 > TC5 with minimal indices.

    Cases mirror the integer-cycle reduction one for one: remove an ear
    labelled 1; remove a square and negate (m odd); remove an ear labelled
    -1 and negate (m even); remove two separated squares; remove two
    separated -1 ears.  The result is admissible (asserted); at least one
    case always applies on admissible input.
    """
    if not is_admissible(lab):
        raise InvalidLabellingError("labelling is not admissible")
    m = lab.m

    if m < 4:
        assert lab.labels == {} or list(lab.labels.values()) == [1]
        return LabellingStep("TC0", (), lab, lab)

    tri = lab.triangulation
    ears_one = [k for k in range(1, m + 1)
                if tri.is_ear(k)
                and lab.labels[tuple(sorted((_cyc(k - 1, m), k, _cyc(k + 1, m))))] == 1]
    if ears_one:
        k = ears_one[0]
        after = _remove_ear(lab, k)
        assert is_admissible(after)
        return LabellingStep("TC1", (k,), lab, after)

    squares = [k for k in range(1, m + 1) if _square_at(lab, k) is not None]
    if squares and m % 2 == 1:
        k = squares[0]
        after = _negated(_remove_square(lab, k))
        assert is_admissible(after)
        return LabellingStep("TC2", (k,), lab, after)

    ears_minus = [k for k in range(1, m + 1)
                  if tri.is_ear(k)
                  and lab.labels[tuple(sorted((_cyc(k - 1, m), k, _cyc(k + 1, m))))] == -1]
    if ears_minus and m % 2 == 0:
        k = ears_minus[0]
        after = _negated(_remove_ear(lab, k))
        assert is_admissible(after)
        return LabellingStep("TC3", (k,), lab, after)

    square_pairs = [(j, k) for i, j in enumerate(squares)
                    for k in squares[i + 1:] if k - j > 1]
    if square_pairs:
        j, k = square_pairs[0]
        mid = _remove_square(lab, k)
        # the window at k removes vertices {k, k+1 cyclic}; only the wrapped
        # window k = m deletes vertex 1 and shifts j's window down by one
        after = _remove_square(mid, j - 1 if k == m else j)
        assert is_admissible(after)
        return LabellingStep("TC4", (j, k), lab, after)

    ear_pairs = [(j, k) for i, j in enumerate(ears_minus)
                 for k in ears_minus[i + 1:] if k - j > 1]
    if ear_pairs:
        j, k = ear_pairs[0]
        mid = _remove_ear(lab, k)
        after = _remove_ear(mid, j)
        assert is_admissible(after)
        return LabellingStep("TC5", (j, k), lab, after)

    raise RuntimeError("no case applies; contradicts the combinatorial theorem")
