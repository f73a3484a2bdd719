from fractions import Fraction
from itertools import product as cartesian
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from catalan_dpp import dpp
from catalan_dpp.dpp import (
    ColumnNotStrictlyDecreasing,
    Dpp,
    NonPositivePart,
    OrderTooLargeForEnumeration,
    PartExceedsOrder,
    RaggedShape,
    RowNotWeaklyDecreasing,
    RowTooLong,
    RowTooShort,
    canonical_key,
    count_dpps,
    dpp_generating_polynomial,
    enumerate_dpps,
    product_formula,
    q_product_formula,
    sum_of_entries,
    validate_dpp,
)
from catalan_dpp.qpoly import QPolynomial

ORDER3_DPPS = [(), ((2,),), ((3,),), ((3, 1),), ((3, 2),), ((3, 3),), ((3, 3), (2,))]
SAMPLE_DPP = [[7, 7, 5, 4, 3, 2], [6, 4, 2, 2, 1], [3, 1]]


def product_formula_oracle(n):
    value = Fraction(1)
    for j in range(n):
        value *= Fraction(factorial(3 * j + 1), factorial(n + j))
    assert value.denominator == 1
    return value.numerator


def brute_force_dpps(n):
    """Stack arbitrary weakly decreasing rows (parts <= n) and keep what validates."""
    rows = [()]
    for length in range(1, n + 1):
        rows += [r for r in cartesian(range(n, 0, -1), repeat=length)
                 if all(x >= y for x, y in zip(r, r[1:]))]
    rows = rows[1:]
    found = {()}
    frontier = [()]
    while frontier:
        nxt = []
        for arr in frontier:
            for r in rows:
                cand = arr + (r,)
                try:
                    validate_dpp(cand, n)
                except dpp.InvalidDpp:
                    continue
                found.add(cand)
                nxt.append(cand)
        frontier = nxt
    return found


# -- validation --------------------------------------------------------------

def test_two_row_dpp_is_valid():
    d = validate_dpp([[3, 3], [2]], 3)
    assert d.rows == ((3, 3), (2,))
    assert d.diagonal == (3, 2)
    assert d.last_columns == (2, 2)


def test_empty_is_valid_at_order_zero():
    assert validate_dpp([], 0) == Dpp((), 0)


def test_three_row_dpp_and_its_sum():
    d = validate_dpp(SAMPLE_DPP, 7)
    assert sum_of_entries(d) == 47


@pytest.mark.parametrize("rows, n, error, where", [
    ([[2, 1]], 3, RowTooLong, (1, None)),
    ([[3, 3], [3]], 3, ColumnNotStrictlyDecreasing, (2, 2)),
    ([[3, 4]], 4, RowNotWeaklyDecreasing, (1, 2)),
    ([[5, 1]], 4, PartExceedsOrder, (1, 1)),
    ([[3, 0]], 4, NonPositivePart, (1, 2)),
    ([[3], [2]], 3, RaggedShape, (2, 2)),
    ([[3, 3], []], 3, RaggedShape, (2, None)),
    ([[4, 4], [3]], 4, RowTooShort, (1, None)),
    ([[4, 4, 4], [2, 2]], 4, RowTooLong, (2, None)),
])
def test_validation_errors(rows, n, error, where):
    with pytest.raises(error) as info:
        validate_dpp(rows, n)
    assert (info.value.row, info.value.column) == where


def test_second_row_needs_a_long_enough_first_row():
    # 2 under 3 3 is fine, 2 under 3 is ragged, 3 under 4 4 violates condition 2
    validate_dpp([[4, 4, 4], [3]], 4)
    with pytest.raises(RowTooShort):
        validate_dpp([[4, 4], [3]], 4)


# -- enumeration ---------------------------------------------------------------

def test_order3_listing():
    assert [d.rows for d in enumerate_dpps(3)] == ORDER3_DPPS


def test_order_zero():
    assert list(enumerate_dpps(0)) == [Dpp((), 0)]


@pytest.mark.parametrize("n", range(0, 6))
def test_enumeration_matches_brute_force(n):
    got = [d.rows for d in enumerate_dpps(n)]
    assert len(got) == len(set(got))
    assert set(got) == brute_force_dpps(n)


@pytest.mark.parametrize("n", range(0, 7))
def test_enumeration_is_sorted_and_valid(n):
    ds = list(enumerate_dpps(n))
    keys = [canonical_key(d.rows) for d in ds]
    assert keys == sorted(keys)
    for d in ds:
        assert validate_dpp(d.rows, n) == d


@pytest.mark.parametrize("n", range(1, 7))
def test_previous_order_is_a_prefix(n):
    prev = [d.rows for d in enumerate_dpps(n - 1)]
    cur = [d.rows for d in enumerate_dpps(n)]
    assert cur[:len(prev)] == prev


@pytest.mark.parametrize("n", range(0, 9))
def test_product_formula_matches_oracle(n):
    assert product_formula(n) == product_formula_oracle(n)


def test_product_formula_values():
    assert [product_formula(n) for n in range(8)] == [1, 1, 2, 7, 42, 429, 7436, 218348]
    assert product_formula(20) == product_formula_oracle(20)


@pytest.mark.parametrize("n, expected", [(0, 1), (3, 7), (5, 429), (6, 7436)])
def test_count_dpps(n, expected):
    assert count_dpps(n) == expected


def test_enumeration_cap():
    with pytest.raises(OrderTooLargeForEnumeration):
        next(enumerate_dpps(9))
    with pytest.raises(OrderTooLargeForEnumeration):
        dpp_generating_polynomial(3, max_order=2)
    assert count_dpps(2, max_order=2) == 2


# -- q-statistic -------------------------------------------------------------------

P3 = QPolynomial([1, 0, 1, 1, 1, 1, 1, 0, 1])


def test_generating_polynomial_examples():
    assert dpp_generating_polynomial(0) == QPolynomial([1])
    assert dpp_generating_polynomial(2) == QPolynomial([1, 0, 1])
    assert dpp_generating_polynomial(3) == P3


def test_q_product_examples():
    assert q_product_formula(0) == QPolynomial([1])
    assert q_product_formula(2) == QPolynomial([1, 0, 1])
    assert q_product_formula(3) == P3


@pytest.mark.parametrize("n", range(0, 7))
def test_q_product_numeric_oracle(n):
    # evaluate the closed form numerically with rational q-factorials
    def qfact(k, q):
        out = Fraction(1)
        for i in range(1, k + 1):
            out *= sum(q ** e for e in range(i))
        return out

    poly = q_product_formula(n)
    for q in (Fraction(2), Fraction(-3), Fraction(1, 2)):
        value = Fraction(1)
        for j in range(n):
            value *= qfact(3 * j + 1, q) / qfact(n + j, q)
        assert poly(q) == value
    assert poly(1) == product_formula(n)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 5).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, product_formula(n) - 1))))
def test_ascii_and_text_roundtrip(args):
    n, idx = args
    d = list(enumerate_dpps(n))[idx]
    assert dpp.parse_rows(str(d)) == d.rows
    assert d.to_json()["sum"] == sum_of_entries(d)


def test_ascii_layout():
    assert validate_dpp(SAMPLE_DPP, 7).ascii() == "7 7 5 4 3 2\n  6 4 2 2 1\n    3 1"
    assert Dpp((), 3).ascii() == "∅"
    assert Dpp((), 3).to_json() == {"rows": [], "order": 3, "sum": 0}
