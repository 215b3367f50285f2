"""Fitting ideals of cyclic quotients I/a via [A|B] presentations."""

import pytest

from residua import fitt0_quotient, minors, presentation_of_quotient
from residua.fitting import NotASubidealError, fitting_ideal
from residua.ideals import colon, ideal_equal

from conftest import parse_ideal


def test_minors_of_koszul_style_matrix(R2):
    y, x = R2.parse("y"), R2.parse("x")
    matrix = [
        [y, x, R2.zero],
        [-x, R2.zero, y],
    ]
    result = minors(R2, matrix, 2)
    assert ideal_equal(result, parse_ideal(R2, "x^2", "x*y", "y^2"))


def test_minors_degenerate_sizes(R2):
    matrix = [[R2.parse("x")]]
    assert ideal_equal(minors(R2, matrix, 1), parse_ideal(R2, "x"))
    # r larger than the matrix: no minors, zero ideal
    assert minors(R2, matrix, 2).is_zero()
    # r = 0: empty product, unit ideal
    assert minors(R2, matrix, 0).is_unit()


def test_presentation_shape_maximal_ideal(R2):
    I = parse_ideal(R2, "x", "y")
    a = parse_ideal(R2, "x^2", "y^2")
    pres = presentation_of_quotient(I, a)
    assert pres.rows == 2
    # one Koszul syzygy plus one column per generator of a
    assert pres.cols == 3
    gens = list(I.generators)
    for j in range(pres.cols):
        col = pres.column(j)
        combo = sum((c * g for c, g in zip(col, gens)), R2.zero)
        assert a.contains(combo)


def test_presentation_shape_m_squared(R2):
    I = parse_ideal(R2, "x^2", "x*y", "y^2")
    a = parse_ideal(R2, "x^2", "y^2")
    pres = presentation_of_quotient(I, a)
    assert pres.rows == 3
    assert pres.cols == 4


def test_presentation_rejects_non_subideal(R2):
    with pytest.raises(NotASubidealError):
        presentation_of_quotient(parse_ideal(R2, "x"), parse_ideal(R2, "y"))


def test_fitt0_maximal_ideal_case(R2):
    I = parse_ideal(R2, "x", "y")
    a = parse_ideal(R2, "x^2", "y^2")
    assert ideal_equal(fitt0_quotient(I, a), parse_ideal(R2, "x^2", "x*y", "y^2"))


def test_fitt0_m_squared_case(R2):
    I = parse_ideal(R2, "x^2", "x*y", "y^2")
    a = parse_ideal(R2, "x^2", "y^2")
    assert ideal_equal(fitt0_quotient(I, a), parse_ideal(R2, "x", "y"))


def test_fitt0_of_trivial_quotient(R2):
    I = parse_ideal(R2, "x", "y")
    assert fitt0_quotient(I, I).is_unit()


def test_fitt0_contained_in_colon(R3):
    # Fitt_0(I/a) always lands inside a:I
    I = parse_ideal(R3, "x*y", "x*z", "y*z")
    a = parse_ideal(R3, "x*y", "x*z")
    J = colon(a, I)
    F = fitt0_quotient(I, a)
    assert J.contains_ideal(F)


def test_fitting_ideal_chain(R2):
    # Fitt_0 <= Fitt_1 <= ... and Fitt_n = (1) for a 2-generated quotient
    I = parse_ideal(R2, "x", "y")
    a = parse_ideal(R2, "x^2", "y^2")
    f0 = fitting_ideal_of(I, a, 0)
    f1 = fitting_ideal_of(I, a, 1)
    f2 = fitting_ideal_of(I, a, 2)
    assert f1.contains_ideal(f0)
    assert f2.contains_ideal(f1)
    assert f2.is_unit()


def fitting_ideal_of(I, a, j):
    pres = presentation_of_quotient(I, a)
    ring = I.ring
    matrix = [[pres.entries[r][c] for c in range(pres.cols)] for r in range(pres.rows)]
    return minors(ring, matrix, pres.rows - j)


def test_fitting_ideal_of_ideal_itself(R2):
    # Fitt_1 of the module I = (x, y): 1-minors of the syzygy column = (x, y)
    I = parse_ideal(R2, "x", "y")
    assert ideal_equal(fitting_ideal(I, 1), I)
