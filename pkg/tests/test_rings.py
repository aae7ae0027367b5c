"""Exact arithmetic in the supported subrings of C."""

import random
from fractions import Fraction

import pytest

from quiddity.errors import UsageError, UnsupportedRingError
from quiddity.rings import (
    Cyclotomic,
    EisensteinInt,
    GaussianInt,
    GaussianRational,
    Q,
    Qi,
    Z,
    Zi,
    Zzeta6,
    compare,
    divisors_of_two,
    elements_norm_at_most,
    norm_sq,
    ring_from_tag,
)


def test_gaussian_basics():
    i = GaussianInt(0, 1)
    assert i * i == GaussianInt(-1, 0)
    assert GaussianInt(1, 2) * GaussianInt(3, -1) == GaussianInt(5, 5)
    assert GaussianInt(3, -4).norm() == 25
    assert GaussianInt(2, 5).conjugate() == GaussianInt(2, -5)


def test_eisenstein_unit_relation():
    # the generator w is a primitive sixth root of unity: w^2 = w - 1
    w = EisensteinInt(0, 1)
    assert w * w == EisensteinInt(-1, 1)
    assert w * w * w == EisensteinInt(-1, 0)
    assert (w * w * w) * (w * w * w) == EisensteinInt(1, 0)
    assert w.norm() == 1


@pytest.mark.parametrize("ring,make", [
    (Zi, lambda rng: GaussianInt(rng.randint(-9, 9), rng.randint(-9, 9))),
    (Zzeta6, lambda rng: EisensteinInt(rng.randint(-9, 9), rng.randint(-9, 9))),
])
def test_norm_multiplicative(ring, make):
    rng = random.Random(2024)
    for _ in range(1000):
        x, y = make(rng), make(rng)
        assert (x * y).norm() == x.norm() * y.norm()


def test_conjugate_times_self_is_norm():
    x = EisensteinInt(3, -2)
    assert x * x.conjugate() == EisensteinInt(x.norm(), 0)
    y = GaussianInt(-4, 7)
    assert y * y.conjugate() == GaussianInt(y.norm(), 0)


def test_exact_div():
    assert Z.exact_div(6, 3) == 2
    assert Z.exact_div(7, 3) is None
    assert Z.exact_div(5, 0) is None
    # 2 = -i (1+i)^2, so 1+i divides 2
    assert Zi.exact_div(GaussianInt(2), GaussianInt(1, 1)) == GaussianInt(1, -1)
    assert Zi.exact_div(GaussianInt(1), GaussianInt(1, 1)) is None
    # 1+w has norm 3, which does not divide |2|^2 = 4
    assert Zzeta6.exact_div(EisensteinInt(2), EisensteinInt(1, 1)) is None
    # w is a unit, 2/w = 2 - 2w
    assert Zzeta6.exact_div(EisensteinInt(2), EisensteinInt(0, 1)) == EisensteinInt(2, -2)


def test_field_division_always_exact():
    assert Q.exact_div(Fraction(1), Fraction(3)) == Fraction(1, 3)
    z = Qi.exact_div(GaussianRational(1), GaussianRational(1, 1))
    assert z == GaussianRational(Fraction(1, 2), Fraction(-1, 2))


@pytest.mark.parametrize("ring,bound,count", [
    (Z, 4, 4),          # -2, -1, 1, 2
    (Zi, 1, 4),         # the four units
    (Zi, 4, 12),
    (Zzeta6, 1, 6),     # the six units
    (Zzeta6, 3, 12),
])
def test_elements_norm_at_most_counts(ring, bound, count):
    elems = elements_norm_at_most(ring, bound)
    assert len(elems) == count
    for x in elems:
        assert 0 < norm_sq(ring, x) <= bound
    keys = [ring.sort_key(x) for x in elems]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_elements_norm_at_most_needs_discreteness():
    with pytest.raises(UnsupportedRingError):
        elements_norm_at_most(Q, 4)


def test_divisors_of_two():
    assert divisors_of_two(Z, 99) == [-1, 1, -2, 2]
    assert len(divisors_of_two(Zi, 99)) == 12
    assert len(divisors_of_two(Zzeta6, 99)) == 12
    assert GaussianInt(1, 1) in divisors_of_two(Zi, 99)
    assert EisensteinInt(1, 1) not in divisors_of_two(Zzeta6, 99)
    assert divisors_of_two(Z, 2) == [-1, 1]
    assert divisors_of_two(Z, 0) == []


def test_divisors_of_two_field_stream_is_deterministic():
    first = divisors_of_two(Q, 10)
    assert first == divisors_of_two(Q, 10)
    assert first[:5] == divisors_of_two(Q, 5)
    assert all(x != 0 for x in first)
    assert len(set(first)) == 10


def test_cyclotomic_five_units_divide_two():
    ring = Cyclotomic(5)
    ts = divisors_of_two(ring, 4)
    assert len(ts) == 4
    two = ring.from_int(2)
    for t in ts:
        q = ring.exact_div(two, t)
        assert q is not None
        assert t * q == two


def test_compare_is_a_total_order():
    xs = elements_norm_at_most(Zi, 9)
    for idx in range(len(xs) - 1):
        assert compare(Zi, xs[idx], xs[idx + 1]) == -1
        assert compare(Zi, xs[idx + 1], xs[idx]) == 1
    assert compare(Zi, xs[0], xs[0]) == 0


def test_ring_from_tag():
    assert ring_from_tag("Z") is Z
    assert ring_from_tag("Zi") is Zi
    assert ring_from_tag("Zzeta6") is Zzeta6
    # small cyclotomic indices collapse onto the classical rings
    assert ring_from_tag("Zzeta1") is Z
    assert ring_from_tag("Zzeta2") is Z
    assert ring_from_tag("Zzeta3") is Zzeta6
    assert ring_from_tag("Zzeta4") is Zi
    assert ring_from_tag("Zzeta5").tag == "Zzeta5"
    with pytest.raises(UsageError):
        ring_from_tag("Zfoo")


def test_check_element_rejects_impostors():
    with pytest.raises(UsageError):
        Z.check_element(True)
    with pytest.raises(UsageError):
        Z.check_element(Fraction(1, 2))
    with pytest.raises(UsageError):
        Zi.check_element(1)


def test_pair_encoding_round_trip():
    for ring, x in [(Z, -7), (Zi, GaussianInt(2, -3)), (Zzeta6, EisensteinInt(-1, 4))]:
        pair = ring.to_pair(x)
        assert isinstance(pair, tuple) and len(pair) == 2
        assert ring.from_pair(pair) == x


def test_cyclotomic_inverse_of_unit():
    ring = Cyclotomic(5)
    z = ring.element_from_json([0, 1, 0, 0])
    prod = ring.exact_div(ring.one, z)
    assert prod is not None
    assert z * prod == ring.one
