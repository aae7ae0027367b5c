"""JSON encodings for cycles, labellings, enumeration results and fixtures.

Every writer produces plain dicts whose json.dumps form is deterministic
(sorted keys), and every reader accepts exactly what the writer emits, so
emit -> read -> emit is the identity on the serialized text.  Ring elements
travel in the per-ring scalar encoding (int for Z, [re, im] for the
quadratic rings, strings for rationals, coefficient lists for cyclotomics).
"""

from __future__ import annotations

import json

from quiddity.cycles import Cycle
from quiddity.enumeration import EnumerationResult
from quiddity.errors import UsageError
from quiddity.frieze import FriezePattern, frieze_from_cycle
from quiddity.labelling import Labelling, Triangulation
from quiddity.rings import Ring, ring_from_tag

__all__ = [
    "cycle_to_json",
    "cycle_from_json",
    "labelling_to_json",
    "labelling_from_json",
    "result_to_json",
    "result_from_json",
    "frieze_to_json",
    "dumps",
]


def dumps(data) -> str:
    """The one serialized form used everywhere: sorted keys, stable spacing."""
    return json.dumps(data, sort_keys=True, indent=2)


def cycle_to_json(cycle: Cycle) -> dict:
    ring = cycle.ring
    return {
        "ring": ring.tag,
        "entries": [ring.element_to_json(x) for x in cycle.entries],
    }


def cycle_from_json(data) -> Cycle:
    if not isinstance(data, dict) or set(data) - {"ring", "entries"}:
        raise UsageError("cycle JSON needs exactly the keys 'ring' and 'entries'")
    try:
        tag = data["ring"]
        entries = data["entries"]
    except KeyError as exc:
        raise UsageError(f"cycle JSON is missing {exc}") from None
    ring = ring_from_tag(tag)
    if not isinstance(entries, list) or not entries:
        raise UsageError("'entries' must be a non-empty list")
    return Cycle(ring, [ring.element_from_json(e) for e in entries])


def labelling_to_json(lab: Labelling) -> dict:
    return {
        "m": lab.m,
        "diagonals": sorted([i, j] for i, j in lab.triangulation.diagonals),
        "labels": {
            ",".join(map(str, tri)): val for tri, val in sorted(lab.labels.items())
        },
    }


def labelling_from_json(data) -> Labelling:
    if not isinstance(data, dict) or set(data) - {"m", "diagonals", "labels"}:
        raise UsageError("labelling JSON needs the keys 'm', 'diagonals', 'labels'")
    try:
        m = data["m"]
        diagonals = data["diagonals"]
        labels = data["labels"]
    except KeyError as exc:
        raise UsageError(f"labelling JSON is missing {exc}") from None
    if isinstance(m, bool) or not isinstance(m, int):
        raise UsageError(f"'m' must be an integer, got {m!r}")
    if not isinstance(diagonals, list):
        raise UsageError("'diagonals' must be a list of [i, j] pairs")
    tri = Triangulation(m, frozenset(tuple(d) for d in diagonals))
    if not isinstance(labels, dict):
        raise UsageError("'labels' must map 'i,j,k' strings to integers")
    parsed = {}
    for key, val in labels.items():
        try:
            corners = tuple(int(part) for part in key.split(","))
        except ValueError:
            raise UsageError(f"bad triangle key {key!r}") from None
        if len(corners) != 3:
            raise UsageError(f"bad triangle key {key!r}")
        parsed[corners] = val
    return Labelling(tri, parsed)


def result_to_json(result: EnumerationResult) -> dict:
    ring = result.ring
    return {
        "ring": ring.tag,
        "height": result.n,
        "total": result.total,
        "orbit_count": result.orbit_count,
        "representatives": [
            [ring.element_to_json(x) for x in c.entries] for c in result.representatives
        ],
    }


def result_from_json(data) -> EnumerationResult:
    keys = {"ring", "height", "total", "orbit_count", "representatives"}
    if not isinstance(data, dict) or set(data) != keys:
        raise UsageError(f"enumeration JSON needs exactly the keys {sorted(keys)}")
    ring = ring_from_tag(data["ring"])
    reps = tuple(
        Cycle(ring, [ring.element_from_json(e) for e in entries])
        for entries in data["representatives"]
    )
    return EnumerationResult(ring, data["height"], data["total"], data["orbit_count"], reps)


def frieze_to_json(f: FriezePattern) -> dict:
    """Quiddity plus the interior band of each row, for fixture comparison."""
    ring = f.ring
    m = f.m
    interiors = [
        [ring.element_to_json(f.rows[i - 1][k]) for k in range(2, m - 1)]
        for i in range(1, m + 1)
    ]
    return {
        "ring": ring.tag,
        "quiddity": [ring.element_to_json(x) for x in f.cycle.entries],
        "rows": interiors,
    }


def frieze_fixture_check(data) -> FriezePattern:
    """Rebuild the frieze from the fixture's quiddity and diff the rows.

    Returns the regenerated pattern; raises AssertionError with the first
    differing position if the stored rows do not match.
    """
    ring = ring_from_tag(data["ring"])
    cycle = Cycle(ring, [ring.element_from_json(e) for e in data["quiddity"]])
    f = frieze_from_cycle(cycle)
    got = frieze_to_json(f)
    assert got["rows"] == data["rows"], (
        f"regenerated rows disagree with fixture for quiddity {cycle}"
    )
    return f
