from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from catalan_dpp.qpoly import NonExactDivision, QPolynomial, q_factorial, q_integer

polys = st.lists(st.integers(-20, 20), max_size=8).map(QPolynomial)


def test_normalizes_trailing_zeros():
    assert QPolynomial([1, 0, 0]).coefficients == (1,)
    assert QPolynomial([0, 0]).is_zero()
    assert QPolynomial().degree == -1


def test_q_integer_and_factorial():
    assert q_integer(0).is_zero()
    assert q_integer(3) == QPolynomial([1, 1, 1])
    # [3]! = (1)(1+q)(1+q+q^2)
    assert q_factorial(3) == QPolynomial([1, 2, 2, 1])
    assert q_factorial(5)(1) == 120


def test_exact_division_and_remainder():
    assert (q_integer(4)).exact_div(q_integer(2)) == QPolynomial([1, 0, 1])
    with pytest.raises(NonExactDivision):
        q_integer(3).exact_div(q_integer(2))


def test_str():
    assert str(QPolynomial([1, 0, 1])) == "1 + q^2"
    assert str(QPolynomial([0, 2, 0, 1])) == "2*q + q^3"
    assert str(QPolynomial()) == "0"


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b - b == a


@given(polys, st.lists(st.integers(-5, 5), min_size=1, max_size=5))
def test_divmod_reconstructs(a, monic_low):
    d = QPolynomial(monic_low + [1])
    quot, rem = a.divmod(d)
    assert quot * d + rem == a
    assert rem.degree < d.degree


@given(polys, polys, st.integers(-4, 4))
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


def test_evaluation_exact_with_fractions():
    assert QPolynomial([1, 1])(Fraction(1, 3)) == Fraction(4, 3)
