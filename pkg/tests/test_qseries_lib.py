from math import comb

import pytest
from hypothesis import given, strategies as st

from qseries_lib import QPolynomial, q_binomial

coefficients = st.lists(st.integers(min_value=-50, max_value=50), min_size=1, max_size=8)


def test_constructors():
    assert QPolynomial.zero(3).coefficient_list() == [0, 0, 0, 0]
    assert QPolynomial.one(2).coefficient_list() == [1, 0, 0]
    assert QPolynomial.monomial(2, 3, 5).coefficient_list() == [0, 0, 5, 0]
    assert QPolynomial.monomial(4, 3).is_zero()
    assert QPolynomial.geometric(2, 5).coefficient_list() == [1, 0, 1, 0, 1, 0]
    assert QPolynomial.from_exponents([0, 2, 2]).coefficient_list() == [1, 0, 2]
    assert QPolynomial.from_exponents([1, 9], degree=3).terms() == {1: 1}


def test_invalid_degrees():
    with pytest.raises(ValueError):
        QPolynomial([1], -1)
    with pytest.raises(ValueError):
        QPolynomial.geometric(0, 3)


def test_arithmetic_keeps_smaller_degree():
    a = QPolynomial([1, 1, 1, 1, 1], 4)
    b = QPolynomial([1, -1], 2)
    assert (a + b).degree == 2
    assert (a + b).coefficient_list() == [2, 0, 1]
    assert (a - a).is_zero()
    assert (a * b).coefficient_list() == [1, 0, 0]
    assert (2 * b).coefficient_list() == [2, -2, 0]
    assert (b + 3)[0] == 4


def test_geometric_products():
    g = QPolynomial.geometric(1, 4)
    assert (g * g).coefficient_list() == [1, 2, 3, 4, 5]
    assert (g * QPolynomial([1, -1], 4)) == QPolynomial.one(4)


def test_shift_and_truncate():
    p = QPolynomial([1, 2, 3], 3)
    assert p.shift(1).coefficient_list() == [0, 1, 2, 3]
    assert p.shift(4).is_zero()
    assert p.truncate(1).coefficient_list() == [1, 2]
    assert p[7] == 0


def test_big_coefficients_stay_exact():
    big = 10 ** 40
    p = QPolynomial([big, 1], 1) * QPolynomial([big, 1], 1)
    assert p[0] == big * big
    assert p[1] == 2 * big


def test_text_and_json():
    p = QPolynomial([1, 0, 2, 1], 3)
    assert str(p) == "1 + 2*q^2 + q^3"
    assert str(QPolynomial.zero(2)) == "0"
    assert str(QPolynomial.monomial(1, 1)) == "q"
    assert p.to_json() == {"degree": 3, "coeffs": ["1", "0", "2", "1"]}
    assert QPolynomial.from_json(p.to_json()) == p


@given(coefficients, coefficients)
def test_multiplication_commutes(a, b):
    x, y = QPolynomial(a), QPolynomial(b)
    assert x * y == y * x
    assert (x + y) - y == x.truncate(min(x.degree, y.degree))


@pytest.mark.parametrize("n, k, expected", [
    (4, 2, [1, 1, 2, 1, 1]),
    (3, 1, [1, 1, 1]),
    (5, 0, [1]),
    (5, 5, [1]),
    (2, 3, [0]),
])
def test_q_binomial(n, k, expected):
    assert q_binomial(n, k).coefficient_list() == expected


@given(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=8))
def test_q_binomial_at_one_is_binomial(n, k):
    assert sum(q_binomial(n, k).coefficient_list()) == comb(n, k)
