"""Ring backend tests: construction, canonical roots, axioms, encodings."""

import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ght.ring import (
    RingError,
    _order_exact,
    complex_ring,
    cyclotomic,
    cyclotomic_polynomial,
    make_ring,
    prime_field,
    quadratic_field,
    rationals,
    RingSpec,
)


def test_cyclotomic_polynomials_low_orders():
    # ascending coefficients
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("w", [2, 3, 4, 5, 6, 8, 9, 12, 15])
def test_cyclotomic_roots_numerically(w):
    # every root of Phi_w must be a primitive w-th root of unity
    coeffs = cyclotomic_polynomial(w)
    for k in range(1, w + 1):
        z = cmath.exp(2j * cmath.pi * k / w)
        val = sum(c * z ** i for i, c in enumerate(coeffs))
        primitive = all((k * d) % w for d in range(1, w))
        if primitive:
            assert abs(val) < 1e-9
        else:
            assert abs(val) > 1e-6


def test_make_ring_examples():
    r = make_ring(RingSpec(kind="cyclotomic-rationals", w=6))
    assert r.deg == 2 and r.phi == (1, -1, 1)
    f = make_ring(RingSpec(kind="quadratic-extension-field", p=5, ext_poly=(1, 1, 1)))
    assert f.p == 5  # 25 elements
    q = make_ring(RingSpec(kind="rationals"))
    assert q.from_int(2).inverse() == q.element(Fraction(1, 2))


def test_make_ring_errors():
    with pytest.raises(RingError):
        prime_field(6)
    with pytest.raises(RingError):
        quadratic_field(5, (4, 0, 1))  # y^2 + 4 = (y-1)(y+1) mod 5
    with pytest.raises(RingError):
        cyclotomic(0)
    with pytest.raises(RingError):
        quadratic_field(5, (1, 1, 2))  # not monic


def test_root_of_unity_cyclotomic():
    r = cyclotomic(6)
    z = r.root_of_unity(6)
    assert z ** 3 == r.from_int(-1)
    assert z ** 2 == z - 1
    for d in (1, 2, 3, 6):
        el = r.root_of_unity(d)
        assert _order_exact(el, d, r.one())
    with pytest.raises(RingError):
        r.root_of_unity(5)


def test_root_of_unity_odd_cyclotomic_has_minus_one():
    r = cyclotomic(3)
    assert r.root_of_unity(2) == r.from_int(-1)
    assert _order_exact(r.root_of_unity(6), 6, r.one())


def test_root_of_unity_gf25():
    f = quadratic_field(5)
    a = f.root_of_unity(6)
    assert _order_exact(a, 6, f.one())
    # it is the fourth power of some primitive root of GF(25)
    prim = [
        f.element((i % 5, i // 5))
        for i in range(1, 25)
        if _order_exact(f.element((i % 5, i // 5)), 24, f.one())
    ]
    assert any(g ** 4 == a for g in prim)


def test_root_of_unity_rationals():
    q = rationals()
    assert q.root_of_unity(2) == q.from_int(-1)
    with pytest.raises(RingError):
        q.root_of_unity(3)


def test_root_of_unity_divisible_by_characteristic():
    with pytest.raises(RingError):
        prime_field(5).root_of_unity(5)


def test_cube_root_relation():
    for ring in (cyclotomic(3), cyclotomic(6), quadratic_field(5), complex_ring()):
        b = ring.root_of_unity(3)
        assert (b * b + b + 1).is_zero()


def test_inverse_of_sixth_root():
    r = cyclotomic(6)
    z = r.root_of_unity(6)
    assert z.inverse() == z ** 5


def test_int_inverse():
    assert cyclotomic(6).int_inverse(6) == cyclotomic(6).element(
        cyclotomic(6)._from_fractions([Fraction(1, 6), Fraction(0)])
    )
    with pytest.raises(RingError):
        prime_field(3).int_inverse(6)
    with pytest.raises(RingError):
        rationals().int_inverse(0)


def test_inverse_of_zero_raises():
    for ring in (rationals(), cyclotomic(4), prime_field(7), quadratic_field(5)):
        with pytest.raises(RingError):
            ring.zero().inverse()


rational_elems = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
).map(lambda f: rationals().element(f))


def cyclo_elems(w):
    ring = cyclotomic(w)
    coeff = st.integers(min_value=-5, max_value=5)
    return st.lists(coeff, min_size=ring.deg, max_size=ring.deg).map(
        lambda cs: ring.element(ring._normalize(cs, 1))
    )


def gf25_elems():
    f = quadratic_field(5)
    return st.tuples(
        st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=4)
    ).map(f.element)


@settings(max_examples=60, deadline=None)
@given(rational_elems, rational_elems, rational_elems)
def test_axioms_rationals(a, b, c):
    _check_axioms(a, b, c)


@settings(max_examples=60, deadline=None)
@given(cyclo_elems(6), cyclo_elems(6), cyclo_elems(6))
def test_axioms_cyclotomic(a, b, c):
    _check_axioms(a, b, c)


@settings(max_examples=60, deadline=None)
@given(gf25_elems(), gf25_elems(), gf25_elems())
def test_axioms_gf25(a, b, c):
    _check_axioms(a, b, c)


def _check_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * a.inverse() == a.ring.one()


def test_cyclotomic_reduction_idempotent():
    r = cyclotomic(12)
    z = r.root_of_unity(12)
    e = z ** 7 + z ** 3 - 2
    coeffs, den = e.payload
    assert r._normalize(r._reduce(list(coeffs)), den) == e.payload


def test_complex_tolerance_eq():
    c = complex_ring(1e-9)
    assert c.element(1 + 1e-12j) == c.one()
    assert c.element(1 + 1e-3j) != c.one()


@pytest.mark.parametrize(
    "ring",
    [rationals(), cyclotomic(6), cyclotomic(12), prime_field(7), quadratic_field(5)],
)
def test_encode_decode_roundtrip(ring):
    z = ring.root_of_unity(2)
    elems = [ring.one(), z, ring.from_int(5), ring.int_inverse(3) if ring.characteristic() != 3 else ring.one()]
    for e in elems:
        assert ring.decode(ring.encode(e)) == e


def test_complex_encode_decode():
    c = complex_ring()
    e = c.root_of_unity(8)
    assert c.decode(c.encode(e)) == e
