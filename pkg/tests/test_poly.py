from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroidhopf.poly import A, B, ONE, S, X, Y, ZERO, Poly, add, deriv_s, evaluate, mul, power


def test_add_examples():
    assert add(X, Y) == Poly.monomial(x=1) + Poly.monomial(y=1)
    assert str(add(X, Y)) == "x + y"
    assert add(X - 1, Poly.const(1)) == X
    assert add(X + Y, -X - Y) == ZERO
    assert (X + Y + (-X - Y)).terms == {}


def test_mul_examples():
    assert str(mul(X - 1, X - 1)) == "x^2 - 2*x + 1"
    assert mul(X + Y, ZERO) == ZERO
    assert mul(X - B, B) == X * B - B * B
    assert str(mul(X - B, B)) == "b*x - b^2"


def test_pow_examples():
    assert power(Y - 1, 0) == ONE
    assert str(power(Y - 1, 2)) == "y^2 - 2*y + 1"
    assert str(power(X - 1, 3)) == "x^3 - 3*x^2 + 3*x - 1"
    with pytest.raises(ValueError):
        power(X, -1)


def test_eval_examples():
    assert evaluate(X**2 + X + Y, {"x": 1, "y": 1}) == 3
    assert evaluate(X + Y, {"x": 0}) == Y
    assert evaluate(S**2 * X, {"s": 1}) == X
    assert (X * Y).subs(x=Fraction(1, 2)) == Fraction(1, 2) * Y
    with pytest.raises(ValueError):
        X.subs(z=1)


def test_deriv_examples():
    assert deriv_s(S**2 * X) == 2 * S * X
    assert deriv_s(X + Y) == ZERO
    assert deriv_s(S * X) == X


def test_rendering():
    assert str(ZERO) == "0"
    assert str(Poly.const(Fraction(-1, 2))) == "-1/2"
    assert str(A * X + B * Y) == "a*x + b*y"
    assert str(Fraction(1, 2) * S**3 * X**2 - Y) == "1/2*s^3*x^2 - y"
    assert str(-X) == "-x"


def test_fraction_with_unit_denominator_is_int():
    p = Poly.const(Fraction(4, 2)) * X
    assert type(p.coefficient(x=1)) is int


def test_swap_and_inspection():
    p = 3 * X**2 * Y + A
    assert p.swap_xy() == 3 * Y**2 * X + A
    assert p.degree("x") == 2
    assert p.variables() == {"x", "y", "a"}
    assert not p.is_constant()
    assert Poly.const(5).constant_value() == 5


small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=3)
exponents = st.tuples(*[st.integers(0, 2)] * 5)


@st.composite
def polys(draw):
    terms = draw(st.dictionaries(exponents, small_rationals, max_size=4))
    p = ZERO
    for (ex, ey, ea, eb, es), c in terms.items():
        p = p + Poly.monomial(c, x=ex, y=ey, a=ea, b=eb, s=es)
    return p


points = st.fixed_dictionaries({v: small_rationals for v in "xyabs"})


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p + ZERO == p and p * ONE == p


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), points)
def test_eval_is_a_ring_morphism(p, q, pt):
    assert (p * q).subs(pt) == p.subs(pt) * q.subs(pt)
    assert (p + q).subs(pt) == p.subs(pt) + q.subs(pt)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), small_rationals)
def test_derivative_is_linear_and_leibniz(p, q, c):
    assert (c * p + q).deriv_s() == c * p.deriv_s() + q.deriv_s()
    assert (p * q).deriv_s() == p.deriv_s() * q + p * q.deriv_s()


@settings(max_examples=60, deadline=None)
@given(polys())
def test_canonical_form(p):
    assert (p + (-p)).terms == {}
    assert all(c != 0 for c in p.terms.values())
    assert p == Poly({k: v for k, v in p._terms.items()})
    assert hash(p) == hash(p * ONE)
