import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from homfly_photonic.errors import BasisMismatch, NotDivisible, ResidualRadical, ZeroBase
from homfly_photonic.ring import (
    A, DEFAULT_BASIS, ONE, Q, ZERO, LaurentPoly2, RadElem, RadicandBasis, RatFunc2,
    lp_divexact, lp_eval, lp_mul, rad_mul, rad_reduce, rf_equals,
)

D1, D2, D3, D4 = DEFAULT_BASIS.radicands

polys = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
    st.integers(-5, 5), max_size=5,
).map(LaurentPoly2)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
unit_points = st.tuples(st.floats(0.05, 3.0), st.floats(0.05, 3.0)).map(
    lambda t: (cmath.exp(1j * t[0]), cmath.exp(1j * t[1])))


def test_zero_coefficients_dropped():
    p = LaurentPoly2({(1, 0): 0, (0, 0): 3})
    assert p.terms == {(0, 0): 3}
    assert LaurentPoly2({(2, 2): 0}) == ZERO
    assert (Q - Q).terms == {}


def test_mul_examples():
    qi = Q ** -1
    assert lp_mul(Q - qi, Q + qi) == Q ** 2 - Q ** -2
    assert lp_mul(A - A ** -1, A - A ** -1) == A ** 2 - 2 + A ** -2
    p = 3 * Q * A ** -2 - 7
    assert lp_mul(ONE, p) == p


def test_divexact_examples():
    qi = Q ** -1
    assert lp_divexact(Q ** 2 - Q ** -2, Q - qi) == Q + qi
    assert lp_divexact(A ** 2 - 2 + A ** -2, A - A ** -1) == A - A ** -1
    with pytest.raises(NotDivisible):
        lp_divexact(Q - qi, A - A ** -1)


def test_divexact_rejects_rational_quotient():
    with pytest.raises(NotDivisible):
        lp_divexact(Q + 1, 2 * Q)
    with pytest.raises(NotDivisible):
        lp_divexact(Q ** 2 + 1, Q + 1)


def test_eval_examples():
    w = cmath.exp(1j * math.pi / 4)
    assert abs(lp_eval(Q ** 2 - Q ** -2, w, 1) - 2j) < 1e-15
    assert lp_eval(Q - Q ** -1, 1, 1) == 0
    assert lp_eval(A, 1, 2) == 2
    with pytest.raises(ZeroBase):
        lp_eval(Q, 0, 1)
    with pytest.raises(ZeroBase):
        lp_eval(Q, 1, 0)


def test_rf_equals_examples():
    c = RatFunc2(Q - Q ** -1, A - A ** -1)
    assert rf_equals(c, RatFunc2(A * (Q - Q ** -1), A * (A - A ** -1)))
    assert not rf_equals(RatFunc2(1, A - A ** -1), RatFunc2(1, Q - Q ** -1))
    assert rf_equals(RatFunc2(0, A - A ** -1), RatFunc2(0, Q - Q ** -1))


def test_ratfunc_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFunc2(ONE, ZERO)


def test_render_canonical_order():
    p = A ** 2 - A ** 4 * (Q ** 2 + Q ** -2)
    assert str(p) == "-1*A^4*q^2 - 1*A^4*q^-2 + 1*A^2"
    assert str(ONE) == "1"
    assert str(-(A * A)) == "-1*A^2"
    assert str(ZERO) == "0"
    assert str(2 * Q * A - 3) == "2*A*q - 3"


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(polys, nonzero_polys)
def test_divexact_inverts_mul(a, b):
    assert lp_mul(b, lp_divexact(a * b, b)) == a * b
    assert lp_divexact(a * b, b) == a


@given(polys, polys, unit_points)
def test_eval_is_homomorphism(a, b, pt):
    q, a_ = pt
    assert abs(lp_eval(a * b, q, a_) - lp_eval(a, q, a_) * lp_eval(b, q, a_)) < 1e-12 * max(
        1.0, abs(lp_eval(a, q, a_)) * abs(lp_eval(b, q, a_)))


def test_mirror():
    p = 3 * Q ** 2 * A ** -1 - A
    assert p.mirror() == 3 * Q ** -2 * A - A ** -1
    assert p.mirror().mirror() == p


def test_basis_must_be_distinct():
    with pytest.raises(ValueError):
        RadicandBasis((Q, Q))


def test_rad_mul_rewrite_and_xor():
    r1 = RadElem.sqrt(0)
    assert rad_mul(r1, r1) == RadElem.scalar(D1)
    x = RadElem.sqrt(0) * RadElem.sqrt(1)
    assert set(x.components) == {0b0011}
    a, b = RadElem.scalar(Q), RadElem.sqrt(0, A)
    assert rad_mul(a + b, a - b) == RadElem.scalar(Q * Q - A * A * D1)


def test_rad_mul_basis_mismatch():
    other = RadicandBasis((Q, A))
    with pytest.raises(BasisMismatch):
        rad_mul(RadElem.one(), RadElem.one(other))


def test_rad_reduce():
    x = RadElem.scalar(RatFunc2(A ** 2 - 2 + A ** -2, A - A ** -1))
    assert rad_reduce(x, ONE) == A - A ** -1
    with pytest.raises(ResidualRadical):
        rad_reduce(RadElem.one() + RadElem.sqrt(0))
    with pytest.raises(NotDivisible):
        rad_reduce(RadElem.scalar(RatFunc2(ONE, Q - Q ** -1)))
    # value P/d with the expected denominator supplied
    y = RadElem.scalar(RatFunc2(A, Q - Q ** -1))
    assert rad_reduce(y, Q - Q ** -1) == A


# points where every default radicand has positive real part
def _positive_point():
    q, a = 1.3 * cmath.exp(0.1j), 1.7 * cmath.exp(0.05j)
    for d in DEFAULT_BASIS.radicands:
        assert d.eval(q, a).real > 0
    return q, a


rad_elems = st.dictionaries(
    st.integers(0, 15),
    st.builds(lambda n, d: RatFunc2(n, d), polys, nonzero_polys.filter(
        lambda p: abs(p.eval(1.3 * cmath.exp(0.1j), 1.7 * cmath.exp(0.05j))) > 1e-3)),
    max_size=3,
).map(lambda comps: RadElem(DEFAULT_BASIS, comps))


@settings(max_examples=60, deadline=None)
@given(rad_elems, rad_elems)
def test_rad_mul_matches_numeric(x, y):
    q, a = _positive_point()
    got = (x * y).eval(q, a)
    want = x.eval(q, a) * y.eval(q, a)
    assert abs(got - want) <= 1e-10 * max(1.0, abs(want))
