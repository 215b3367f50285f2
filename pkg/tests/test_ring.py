"""Polynomial arithmetic, monomial orders, parsing."""

import pytest
from hypothesis import given

from residua import GF32003, MonomialOrder, PolyRing, monomial_cmp
from residua.ring import ParseError, mono_div, mono_lcm, mono_mul

from conftest import polynomials


def test_grevlex_order_on_quadrics(R2):
    # x^2 > xy > y^2 > x > y > 1
    order = [(2, 0), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0)]
    for a, b in zip(order, order[1:]):
        assert monomial_cmp(R2.order, a, b) > 0


def test_grevlex_tiebreak():
    # grevlex in 3 vars: x*z > y^2 is false; y^2 > x*z (last variable smallest)
    ring = PolyRing(GF32003, ("x", "y", "z"))
    assert monomial_cmp(ring.order, (0, 2, 0), (1, 0, 1)) > 0


def test_lex_order():
    ring = PolyRing(GF32003, ("x", "y"), MonomialOrder("lex"))
    assert monomial_cmp(ring.order, (1, 0), (0, 5)) > 0


def test_block_order_eliminates_first_variables():
    # block(1): any monomial containing t beats every t-free monomial
    ring = PolyRing(GF32003, ("t", "x", "y"), MonomialOrder("block", 1))
    assert monomial_cmp(ring.order, (1, 0, 0), (0, 4, 4)) > 0
    assert monomial_cmp(ring.order, (0, 2, 0), (0, 1, 1)) > 0  # grevlex inside block


def test_mono_helpers():
    assert mono_mul((1, 2), (3, 0)) == (4, 2)
    assert mono_div((4, 2), (1, 2)) == (3, 0)
    assert mono_lcm((1, 2), (3, 0)) == (3, 2)


def test_parse_roundtrip(R2):
    p = R2.parse("x^2 - 3*x*y + 2")
    assert R2.parse(str(p)) == p


def test_parse_rejects_garbage(R2):
    with pytest.raises(ParseError):
        R2.parse("x +* y")
    with pytest.raises(ParseError):
        R2.parse("w + 1")


def test_rational_field_arithmetic(Q2):
    x, y = Q2.gens
    p = x.scale(Q2.field.element("1/2")) + y
    assert (p + p) == x + y + y


def test_canonical_term_order(R2):
    x, y = R2.gens
    p = y * y + x * x + x * y
    assert [m for m, _ in p.terms] == [(2, 0), (1, 1), (0, 2)]
    assert p.lm() == (2, 0)


def test_homogeneity(R2):
    x, y = R2.gens
    assert (x * x + y * y).is_homogeneous()
    assert not (x * x + y).is_homogeneous()
    assert R2.zero.is_homogeneous()


@given(polynomials(PolyRing(GF32003, ("x", "y"))), polynomials(PolyRing(GF32003, ("x", "y"))))
def test_mul_commutes(p, q):
    assert p * q == q * p


@given(
    polynomials(PolyRing(GF32003, ("x", "y"))),
    polynomials(PolyRing(GF32003, ("x", "y"))),
    polynomials(PolyRing(GF32003, ("x", "y"))),
)
def test_distributivity(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(polynomials(PolyRing(GF32003, ("x", "y"))))
def test_additive_inverse(p):
    assert (p - p).is_zero()


def test_pow(R2):
    x, y = R2.gens
    assert (x + y) ** 2 == x * x + x * y + x * y + y * y
    assert (x + y) ** 0 == R2.one
