from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kahlerimm.scalars import CScalar, as_fraction, format_fraction

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=50)


def test_as_fraction_coercions():
    assert as_fraction(3) == Fraction(3)
    assert as_fraction("2/7") == Fraction(2, 7)
    assert as_fraction(Fraction(-5, 3)) == Fraction(-5, 3)
    with pytest.raises(TypeError):
        as_fraction(1.5)


def test_basic_arithmetic():
    a = CScalar(1, 2)
    b = CScalar("1/2", "-1/3")
    assert a + b == CScalar(Fraction(3, 2), Fraction(5, 3))
    assert a * b == CScalar(Fraction(1, 2) + Fraction(2, 3),
                            Fraction(1) - Fraction(1, 3))
    assert (a / b) * b == a
    assert a.conj() == CScalar(1, -2)
    assert a.abs2() == 5


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        CScalar(1) / CScalar(0)


@given(rationals, rationals)
def test_format_parse_round_trip(re, im):
    c = CScalar(re, im)
    assert CScalar.parse(c.format()) == c


def test_parse_examples():
    assert CScalar.parse("3/4") == CScalar(Fraction(3, 4))
    assert CScalar.parse("-2i") == CScalar(0, -2)
    assert CScalar.parse("1/2-1/3i") == CScalar(Fraction(1, 2),
                                                Fraction(-1, 3))
    assert CScalar.parse("i") == CScalar(0, 1)


@given(rationals, rationals, rationals, rationals)
def test_mul_conjugation_compatibility(a, b, c, d):
    x = CScalar(a, b)
    y = CScalar(c, d)
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x * y).abs2() == x.abs2() * y.abs2()


def test_format_fraction():
    assert format_fraction(Fraction(3)) == "3"
    assert format_fraction(Fraction(-1, 8)) == "-1/8"
