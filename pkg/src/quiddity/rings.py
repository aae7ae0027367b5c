"""Exact arithmetic for the supported coefficient rings and fields.

Supported rings: the integers Z, the Gaussian integers Z[i], the Eisenstein
integers Z[w] with w = (1 + i*sqrt(3))/2 (a primitive sixth root of unity),
the rationals Q, the Gaussian rationals Q(i), and Z[zeta_d] for a general
primitive d-th root of unity.  Everything is exact: plain ints, Fractions and
small coordinate classes; no floating point anywhere.

Ring objects are stateless singletons describing one ring each.  Elements are
lightweight values (int for Z, Fraction for Q, coordinate pairs otherwise)
that overload +, -, * so that generic matrix code works uniformly.  Because
plain ints carry no ring of their own, the module-level operations take the
ring as their first argument: norm_sq(ring, x), compare(ring, x, y), and so
on.

The three discrete rings (Z, Z[i], Z[w]) have minimal nonzero norm 1 and
support bounded element enumeration; the fields and the general cyclotomic
rings do not.  Cyclotomic rings support only ring arithmetic and exact
division (no norms, no ordering).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from quiddity.errors import UnsupportedRingError, UsageError

__all__ = [
    "Ring",
    "GaussianInt",
    "EisensteinInt",
    "GaussianRational",
    "CycloElement",
    "Z",
    "Q",
    "Zi",
    "Zzeta6",
    "Qi",
    "Cyclotomic",
    "ring_from_tag",
    "norm_sq",
    "compare",
    "elements_norm_at_most",
    "divisors_of_two",
]


def _fmt_complex(a, b, unit: str) -> str:
    """Render a + b*unit compactly: '0', '2', 'i', '1-2i', ..."""
    if b == 0:
        return str(a)
    if b == 1:
        bs = unit
    elif b == -1:
        bs = "-" + unit
    else:
        bs = f"{b}{unit}"
    if a == 0:
        return bs
    sign = "+" if b > 0 else ""
    return f"{a}{sign}{bs}"


class GaussianInt:
    """Gaussian integer a + b*i in the basis {1, i}."""

    __slots__ = ("re", "im")

    def __init__(self, re: int, im: int = 0):
        self.re = re
        self.im = im

    @classmethod
    def from_int(cls, n: int) -> "GaussianInt":
        return cls(n, 0)

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaussianInt):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash(("Zi", self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"

    def __str__(self) -> str:
        return _fmt_complex(self.re, self.im, "i")


class EisensteinInt:
    """Element a + b*w of Z[w] where w = (1 + i*sqrt(3))/2.

    w is a primitive sixth root of unity, so w*w = w - 1 and the norm form is
    a^2 + a*b + b^2 (positive definite).  The complex conjugate of w is 1 - w.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0):
        self.a = a
        self.b = b

    @classmethod
    def from_int(cls, n: int) -> "EisensteinInt":
        return cls(n, 0)

    def __add__(self, other: "EisensteinInt") -> "EisensteinInt":
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "EisensteinInt") -> "EisensteinInt":
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "EisensteinInt":
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: "EisensteinInt") -> "EisensteinInt":
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return EisensteinInt(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2 + b1 * b2)

    def conjugate(self) -> "EisensteinInt":
        return EisensteinInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.a * self.b + self.b * self.b

    def __eq__(self, other) -> bool:
        if not isinstance(other, EisensteinInt):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash(("Zzeta6", self.a, self.b))

    def __repr__(self) -> str:
        return f"EisensteinInt({self.a}, {self.b})"

    def __str__(self) -> str:
        return _fmt_complex(self.a, self.b, "w")


class GaussianRational:
    """Element of Q(i) with Fraction coordinates."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def from_int(cls, n: int) -> "GaussianRational":
        return cls(Fraction(n), Fraction(0))

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash(("Qi", self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        return _fmt_complex(self.re, self.im, "i")


# ---------------------------------------------------------------------------
# Polynomial helpers over Q used by the cyclotomic rings.  Dense coefficient
# lists, lowest degree first.


def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _poly_trim(out)


def _poly_sub(p: list, q: list) -> list:
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else Fraction(0))
           - (q[i] if i < len(q) else Fraction(0)) for i in range(n)]
    return _poly_trim(out)


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    num = [Fraction(x) for x in num]
    den = [Fraction(x) for x in den]
    _poly_trim(num)
    _poly_trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    while len(num) >= len(den):
        shift = len(num) - len(den)
        coef = num[-1] / den[-1]
        quot[shift] = coef
        for i, d in enumerate(den):
            num[shift + i] -= coef * d
        _poly_trim(num)
    return _poly_trim(quot), num


@lru_cache(maxsize=None)
def _cyclotomic_poly(d: int) -> tuple:
    """Coefficients of the d-th cyclotomic polynomial (exact, integer).

    Computed from x^d - 1 by dividing out the cyclotomic polynomials of the
    proper divisors of d.
    """
    num = [Fraction(-1)] + [Fraction(0)] * (d - 1) + [Fraction(1)]
    for e in range(1, d):
        if d % e == 0:
            num, rem = _poly_divmod(num, list(_cyclotomic_poly(e)))
            assert not rem
    assert all(c.denominator == 1 for c in num)
    return tuple(int(c) for c in num)


def _poly_ext_gcd(a: list, b: list) -> tuple[list, list, list]:
    """Extended Euclid over Q[x]: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = [Fraction(x) for x in a], [Fraction(x) for x in b]
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    _poly_trim(r0)
    _poly_trim(r1)
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
    return r0, s0, t0


class CycloElement:
    """Element of Z[zeta_d]: integer coefficients of 1, zeta, ..., zeta^(phi-1)."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "CyclotomicRing", coeffs):
        phi = ring.phi
        cs = list(coeffs)
        if len(cs) > phi:
            cs = ring._reduce(cs)
        cs += [0] * (phi - len(cs))
        self.ring = ring
        self.coeffs = tuple(cs)

    def __add__(self, other: "CycloElement") -> "CycloElement":
        return CycloElement(self.ring, [x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        return CycloElement(self.ring, [x - y for x, y in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.ring, [-x for x in self.coeffs])

    def __mul__(self, other: "CycloElement") -> "CycloElement":
        prod = [0] * (2 * self.ring.phi)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CycloElement(self.ring, self.ring._reduce(prod))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.ring.d == other.ring.d and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring.d, self.coeffs))

    def __repr__(self) -> str:
        return f"CycloElement(d={self.ring.d}, {list(self.coeffs)})"

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                z = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    parts.append(z)
                elif c == -1:
                    parts.append(f"-{z}")
                else:
                    parts.append(f"{c}{z}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out


# ---------------------------------------------------------------------------
# Ring descriptors.


class Ring:
    """Base descriptor.  Concrete rings fill in tag and the element protocol."""

    tag: str = "?"
    is_discrete: bool = False
    is_field: bool = False
    kernel_id: int | None = None  # set for rings the search kernel accepts

    def __repr__(self) -> str:
        return f"<ring {self.tag}>"

    # Subclasses provide: zero, one, from_int, check_element, norm_sq,
    # sort_key, exact_div, element_to_json, element_from_json.

    def norm_sq(self, x):
        raise UnsupportedRingError(f"{self.tag} has no rational norm")

    def sort_key(self, x):
        raise UnsupportedRingError(f"{self.tag} has no total order")

    def to_pair(self, x) -> tuple[int, int]:
        raise UnsupportedRingError(f"{self.tag} has no kernel encoding")

    def from_pair(self, pair) -> object:
        raise UnsupportedRingError(f"{self.tag} has no kernel encoding")


class IntegerRing(Ring):
    tag = "Z"
    is_discrete = True
    kernel_id = 0

    zero = 0
    one = 1

    def from_int(self, n: int) -> int:
        return n

    def check_element(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise UsageError(f"not an element of Z: {x!r}")
        return x

    def norm_sq(self, x: int) -> int:
        return x * x

    def sort_key(self, x: int):
        return (x * x, x, 0)

    def exact_div(self, x: int, y: int):
        if y == 0 or x % y != 0:
            return None
        return x // y

    def element_to_json(self, x: int):
        return x

    def element_from_json(self, data):
        if isinstance(data, bool) or not isinstance(data, int):
            raise UsageError(f"expected an integer, got {data!r}")
        return data

    def to_pair(self, x: int) -> tuple[int, int]:
        return (x, 0)

    def from_pair(self, pair) -> int:
        a, b = pair
        assert b == 0
        return a


class RationalField(Ring):
    tag = "Q"
    is_field = True

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def check_element(self, x):
        if isinstance(x, bool):
            raise UsageError(f"not an element of Q: {x!r}")
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, Fraction):
            return x
        raise UsageError(f"not an element of Q: {x!r}")

    def norm_sq(self, x: Fraction) -> Fraction:
        return x * x

    def sort_key(self, x: Fraction):
        return (x * x, x, 0)

    def exact_div(self, x: Fraction, y: Fraction):
        if y == 0:
            return None
        return x / y

    def element_to_json(self, x: Fraction):
        return f"{x.numerator}/{x.denominator}"

    def element_from_json(self, data):
        if isinstance(data, bool):
            raise UsageError(f"expected a rational, got {data!r}")
        if isinstance(data, int):
            return Fraction(data)
        if isinstance(data, str):
            try:
                return Fraction(data)
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError(f"bad rational literal {data!r}") from exc
        raise UsageError(f"expected a rational, got {data!r}")


class GaussianIntegerRing(Ring):
    tag = "Zi"
    is_discrete = True
    kernel_id = 1

    zero = GaussianInt(0, 0)
    one = GaussianInt(1, 0)

    def from_int(self, n: int) -> GaussianInt:
        return GaussianInt(n, 0)

    def check_element(self, x):
        if not isinstance(x, GaussianInt):
            raise UsageError(f"not an element of Z[i]: {x!r}")
        return x

    def norm_sq(self, x: GaussianInt) -> int:
        return x.norm()

    def sort_key(self, x: GaussianInt):
        return (x.norm(), x.re, x.im)

    def exact_div(self, x: GaussianInt, y: GaussianInt):
        n = y.norm()
        if n == 0:
            return None
        t = x * y.conjugate()
        if t.re % n or t.im % n:
            return None
        return GaussianInt(t.re // n, t.im // n)

    def element_to_json(self, x: GaussianInt):
        return [x.re, x.im]

    def element_from_json(self, data):
        if (not isinstance(data, (list, tuple)) or len(data) != 2
                or any(isinstance(c, bool) or not isinstance(c, int) for c in data)):
            raise UsageError(f"expected [re, im] integers, got {data!r}")
        return GaussianInt(data[0], data[1])

    def to_pair(self, x: GaussianInt) -> tuple[int, int]:
        return (x.re, x.im)

    def from_pair(self, pair) -> GaussianInt:
        return GaussianInt(pair[0], pair[1])


class EisensteinIntegerRing(Ring):
    tag = "Zzeta6"
    is_discrete = True
    kernel_id = 2

    zero = EisensteinInt(0, 0)
    one = EisensteinInt(1, 0)

    def from_int(self, n: int) -> EisensteinInt:
        return EisensteinInt(n, 0)

    def check_element(self, x):
        if not isinstance(x, EisensteinInt):
            raise UsageError(f"not an element of Z[w]: {x!r}")
        return x

    def norm_sq(self, x: EisensteinInt) -> int:
        return x.norm()

    def sort_key(self, x: EisensteinInt):
        # Real part is a + b/2 and the imaginary part is b * sqrt(3)/2, so
        # (2a+b, b) orders exactly like (re, im) without leaving the integers.
        return (x.norm(), 2 * x.a + x.b, x.b)

    def exact_div(self, x: EisensteinInt, y: EisensteinInt):
        n = y.norm()
        if n == 0:
            return None
        t = x * y.conjugate()
        if t.a % n or t.b % n:
            return None
        return EisensteinInt(t.a // n, t.b // n)

    def element_to_json(self, x: EisensteinInt):
        return [x.a, x.b]

    def element_from_json(self, data):
        if (not isinstance(data, (list, tuple)) or len(data) != 2
                or any(isinstance(c, bool) or not isinstance(c, int) for c in data)):
            raise UsageError(f"expected [a, b] integers, got {data!r}")
        return EisensteinInt(data[0], data[1])

    def to_pair(self, x: EisensteinInt) -> tuple[int, int]:
        return (x.a, x.b)

    def from_pair(self, pair) -> EisensteinInt:
        return EisensteinInt(pair[0], pair[1])


class GaussianRationalField(Ring):
    tag = "Qi"
    is_field = True

    zero = GaussianRational(0, 0)
    one = GaussianRational(1, 0)

    def from_int(self, n: int) -> GaussianRational:
        return GaussianRational(n, 0)

    def check_element(self, x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, bool):
            raise UsageError(f"not an element of Q(i): {x!r}")
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x, 0)
        raise UsageError(f"not an element of Q(i): {x!r}")

    def norm_sq(self, x: GaussianRational) -> Fraction:
        return x.norm()

    def sort_key(self, x: GaussianRational):
        return (x.norm(), x.re, x.im)

    def exact_div(self, x: GaussianRational, y: GaussianRational):
        if y.norm() == 0:
            return None
        return x * y.inverse()

    def element_to_json(self, x: GaussianRational):
        return [f"{x.re.numerator}/{x.re.denominator}",
                f"{x.im.numerator}/{x.im.denominator}"]

    def element_from_json(self, data):
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            raise UsageError(f"expected [re, im] rationals, got {data!r}")
        coords = []
        for c in data:
            if isinstance(c, bool):
                raise UsageError(f"bad rational component {c!r}")
            if isinstance(c, int):
                coords.append(Fraction(c))
            elif isinstance(c, str):
                try:
                    coords.append(Fraction(c))
                except (ValueError, ZeroDivisionError) as exc:
                    raise UsageError(f"bad rational literal {c!r}") from exc
            else:
                raise UsageError(f"bad rational component {c!r}")
        return GaussianRational(coords[0], coords[1])


class CyclotomicRing(Ring):
    """Z[zeta_d] for general d: ring arithmetic and exact division only."""

    is_field = False
    is_discrete = False

    def __init__(self, d: int):
        self.d = d
        self.tag = f"Zzeta{d}"
        poly = _cyclotomic_poly(d)
        self.phi = len(poly) - 1
        self._poly = poly
        self.zero = CycloElement(self, [0])
        self.one = CycloElement(self, [1])
        self.zeta = CycloElement(self, [0, 1] if self.phi > 1 else [-poly[0]])

    def _reduce(self, coeffs: list) -> list:
        """Reduce an integer coefficient list modulo the minimal polynomial."""
        cs = list(coeffs)
        phi = self.phi
        for k in range(len(cs) - 1, phi - 1, -1):
            c = cs[k]
            if c:
                # subtract c * x^(k-phi) * poly; poly is monic so this clears cs[k]
                for i, p in enumerate(self._poly):
                    cs[k - phi + i] -= c * p
            cs.pop()
        return cs

    def from_int(self, n: int) -> CycloElement:
        return CycloElement(self, [n])

    def check_element(self, x):
        if not isinstance(x, CycloElement) or x.ring.d != self.d:
            raise UsageError(f"not an element of {self.tag}: {x!r}")
        return x

    def exact_div(self, x: CycloElement, y: CycloElement):
        if all(c == 0 for c in y.coeffs):
            return None
        g, s, _ = _poly_ext_gcd(list(y.coeffs), list(self._poly))
        # the minimal polynomial is irreducible over Q, so gcd(y, poly) is a
        # nonzero constant and s/g is the inverse of y mod poly
        assert len(g) == 1
        inv = [c / g[0] for c in s]
        prod = _poly_mul([Fraction(c) for c in x.coeffs], inv)
        _, rem = _poly_divmod(prod, [Fraction(c) for c in self._poly])
        if any(c.denominator != 1 for c in rem):
            return None
        out = [int(c) for c in rem]
        return CycloElement(self, out)

    def element_to_json(self, x: CycloElement):
        return list(x.coeffs)

    def element_from_json(self, data):
        if (not isinstance(data, list) or len(data) > self.phi
                or any(isinstance(c, bool) or not isinstance(c, int) for c in data)):
            raise UsageError(f"expected <= {self.phi} integer coefficients, got {data!r}")
        return CycloElement(self, data)


Z = IntegerRing()
Q = RationalField()
Zi = GaussianIntegerRing()
Zzeta6 = EisensteinIntegerRing()
Qi = GaussianRationalField()


@lru_cache(maxsize=None)
def _general_cyclotomic(d: int) -> CyclotomicRing:
    return CyclotomicRing(d)


def Cyclotomic(d: int) -> Ring:
    """The ring Z[zeta_d], normalizing the five special d to their classics.

    d in {1, 2} gives Z, d in {3, 6} gives the Eisenstein integers and d = 4
    gives the Gaussian integers; everything else is a coefficient-vector ring
    with arithmetic and exact division only.
    """
    if d < 1:
        raise UsageError(f"bad cyclotomic index {d}")
    if d in (1, 2):
        return Z
    if d in (3, 6):
        return Zzeta6
    if d == 4:
        return Zi
    return _general_cyclotomic(d)


def ring_from_tag(tag: str) -> Ring:
    if tag == "Z":
        return Z
    if tag == "Q":
        return Q
    if tag == "Zi":
        return Zi
    if tag == "Zzeta6":
        return Zzeta6
    if tag == "Qi":
        return Qi
    if tag.startswith("Zzeta"):
        try:
            d = int(tag[len("Zzeta"):])
        except ValueError:
            raise UsageError(f"unknown ring tag {tag!r}") from None
        return Cyclotomic(d)
    raise UsageError(f"unknown ring tag {tag!r}")


# ---------------------------------------------------------------------------
# Module-level operations.


def norm_sq(ring: Ring, x):
    """|x|^2 as an exact nonnegative rational (int where possible)."""
    return ring.norm_sq(ring.check_element(x))


def compare(ring: Ring, x, y) -> int:
    """Total order: ascending (norm_sq, real part, imaginary part).

    Returns -1, 0 or 1.  Both arguments must belong to the given ring; mixing
    rings raises UsageError.
    """
    kx = ring.sort_key(ring.check_element(x))
    ky = ring.sort_key(ring.check_element(y))
    if kx < ky:
        return -1
    if kx > ky:
        return 1
    return 0


def elements_norm_at_most(ring: Ring, bound_sq) -> list:
    """All nonzero x with norm_sq(x) <= bound_sq, sorted by the total order."""
    if not ring.is_discrete:
        raise UnsupportedRingError(f"{ring.tag} is not discrete")
    bound_sq = Fraction(bound_sq)
    if bound_sq < 1:
        return []
    floor = math.floor(bound_sq)
    out = []
    if ring is Z:
        r = isqrt(floor)
        out = [n for n in range(-r, r + 1) if n != 0]
    elif ring is Zi:
        r = isqrt(floor)
        for a in range(-r, r + 1):
            for b in range(-r, r + 1):
                if (a or b) and a * a + b * b <= bound_sq:
                    out.append(GaussianInt(a, b))
    elif ring is Zzeta6:
        # a^2 + ab + b^2 = (a + b/2)^2 + 3b^2/4, symmetric in a and b, so both
        # coordinates are bounded by sqrt(4B/3)
        r = isqrt(math.floor(4 * bound_sq / 3))
        for a in range(-r, r + 1):
            for b in range(-r, r + 1):
                if (a or b) and a * a + a * b + b * b <= bound_sq:
                    out.append(EisensteinInt(a, b))
    else:  # pragma: no cover - all discrete rings handled above
        raise UnsupportedRingError(f"no enumeration for {ring.tag}")
    out.sort(key=ring.sort_key)
    return out


def _field_stream(ring: Ring):
    """Deterministic stream of nonzero field elements, small ones first."""
    seen = set()
    height = 1
    while True:
        batch = []
        if ring is Q:
            for p in range(-height, height + 1):
                for q in range(1, height + 1):
                    x = Fraction(p, q)
                    if x != 0 and x not in seen:
                        batch.append(x)
        else:
            for pr in range(-height, height + 1):
                for pi in range(-height, height + 1):
                    for q in range(1, height + 1):
                        x = GaussianRational(Fraction(pr, q), Fraction(pi, q))
                        if x.norm() != 0 and x not in seen:
                            batch.append(x)
        batch.sort(key=ring.sort_key)
        for x in batch:
            if x not in seen:
                seen.add(x)
                yield x
        height += 1


def _cyclotomic_divisor_stream(ring: CyclotomicRing):
    """Stream +/- zeta^a (1+zeta)^k, keeping those that exactly divide 2."""
    two = ring.from_int(2)
    one_plus_zeta = ring.one + ring.zeta
    seen = set()
    power = ring.one
    while True:
        for a in range(ring.d):
            zeta_a = ring.one
            for _ in range(a):
                zeta_a = zeta_a * ring.zeta
            for sign in (1, -1):
                t = zeta_a * power
                if sign < 0:
                    t = -t
                if t in seen:
                    continue
                seen.add(t)
                if ring.exact_div(two, t) is not None:
                    yield t
        power = power * one_plus_zeta


def divisors_of_two(ring: Ring, limit: int) -> list:
    """Up to `limit` distinct t with 2/t in the ring.

    For the discrete rings the complete finite set is returned whenever it is
    smaller than the limit.  For fields and general cyclotomic rings the
    result is a deterministic prefix of an infinite family.
    """
    if limit <= 0:
        return []
    two = ring.from_int(2)
    if ring.is_discrete:
        # |t|^2 divides |2|^2 = 4, so candidates have norm at most 4
        full = [t for t in elements_norm_at_most(ring, 4)
                if ring.exact_div(two, t) is not None]
        return full[:limit]
    if ring in (Q, Qi):
        out = []
        for t in _field_stream(ring):
            out.append(t)
            if len(out) == limit:
                return out
    if isinstance(ring, CyclotomicRing):
        out = []
        for t in _cyclotomic_divisor_stream(ring):
            out.append(t)
            if len(out) == limit:
                return out
    raise UnsupportedRingError(f"no divisor enumeration for {ring.tag}")
