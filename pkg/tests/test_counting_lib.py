import pytest
from hypothesis import given, settings
from sympy import Rational

import counting_lib
from counting_lib import (
    TermCounts, excited_array_weights, f_hlf, f_minimal, f_nhlf, f_oof, f_oof_printed, hook_content_count,
    hook_content_count_printed, hook_product, leading_terms, leading_terms_printed, littlewood_q,
    minimal_weight_polynomial, ne_hook_product, omega, oot_factor_product, psi, qnhlf_rhs,
    qnhlf_rhs_printed, reverse_hook, skew_schur_q_lhs, staircase, staircase_zigzag, term_counts,
    verify_formulas, verify_leading_terms, verify_littlewood, verify_ne_excited, verify_qnhlf,
    verify_special_shapes, verify_term_counts,
)
from errors import IntegralityError, PreconditionError, UnsupportedShapeError
from excited_lib import enumerate_ne_excited
from qseries_lib import QPolynomial
from shape_lib import Partition, SkewShape
from strategies import partition_strategy, skew_shape_strategy
from tableau_lib import count_syt, enumerate_oot

SLIM = SkewShape.of((3, 2, 2), (1, 1))


# --- Exact Counts ---

def test_hook_product_and_straight_count():
    assert hook_product(Partition((5, 5, 3, 3, 2))) == 1393459200
    assert hook_product(Partition(())) == 1
    assert f_hlf(Partition((3, 2, 1))) == 16
    assert f_hlf(Partition((2, 2))) == 2


@pytest.mark.parametrize("evaluate", [f_nhlf, f_oof, f_minimal, count_syt])
def test_big_shape_count(big_shape, evaluate):
    assert evaluate(big_shape) == 445445


@pytest.mark.parametrize("outer, inner, expected", [
    ((2, 2), (1,), 2),
    ((3, 3), (2,), 3),
    ((3, 3), (1,), 5),
    ((3, 2, 1), (), 16),
])
def test_small_counts(outer, inner, expected):
    s = SkewShape.of(outer, inner)
    assert f_nhlf(s) == f_oof(s) == f_minimal(s) == expected


def test_disconnected_shape_counts():
    s = SkewShape.of((2, 1), (1,))
    assert f_nhlf(s) == f_oof(s) == 2
    with pytest.raises(UnsupportedShapeError):
        f_minimal(s)


def test_printed_tableau_factor_overcounts():
    s = SkewShape.of((3, 3), (2,))
    assert f_oof(s) == 3
    assert f_oof_printed(s) == 6


def test_non_integer_evaluation_is_an_error():
    with pytest.raises(IntegralityError):
        counting_lib._exact_integer(Rational(1, 2), "half")


@settings(max_examples=60, deadline=None)
@given(skew_shape_strategy())
def test_formulas_agree_with_corner_peeling(s):
    report = verify_formulas(s)
    assert report.passed, report.failures


# --- Term Counts ---

def test_term_counts():
    assert term_counts(SkewShape.of((2, 1), (1,))) == TermCounts(1, 2, False)
    assert term_counts(SkewShape.of((3, 3), (1,))) == TermCounts(2, 2, True)
    assert term_counts(SkewShape.of((3, 3), (1,))).to_json() == {"ED": 2, "OOT": 2, "slim": True}


@pytest.mark.parametrize("outer, inner, expected", [
    ((3, 1), (2, 1), 1),
    ((4, 2), (3, 2), 1),
    ((3, 3, 1), (2, 1, 1), 2),
    ((5, 1), (4, 1), 1),
])
def test_term_counts_ignore_empty_rows(outer, inner, expected):
    s = SkewShape.of(outer, inner)
    assert term_counts(s) == TermCounts(expected, expected, True)
    assert hook_content_count(s) == expected
    report = verify_term_counts(s)
    assert report.passed, report.failures


def test_term_counts_of_big_shape(big_shape):
    counts = term_counts(big_shape)
    assert counts.ed == 6
    assert counts.oot > 6
    assert not counts.slim


@pytest.mark.parametrize("outer, inner, expected", [
    ((3, 3), (1,), 2),
    ((3, 3, 3), (1, 1), 3),
    ((3, 2), (), 1),
])
def test_hook_content_count(outer, inner, expected):
    s = SkewShape.of(outer, inner)
    assert hook_content_count(s) == expected == len(enumerate_oot(s))


def test_hook_content_count_needs_a_slim_shape(big_shape):
    with pytest.raises(PreconditionError):
        hook_content_count(big_shape)


def test_printed_letter_count_undercounts():
    assert hook_content_count_printed(SkewShape.of((3, 3, 3), (1, 1))) == 0


@settings(max_examples=60, deadline=None)
@given(skew_shape_strategy(connected=True))
def test_term_count_theorem(s):
    report = verify_term_counts(s)
    assert report.passed, report.failures


# --- q-Series ---

def test_littlewood_series():
    assert littlewood_q(Partition((1,)), 3).coefficient_list() == [1, 1, 1, 1]
    assert littlewood_q(Partition((1, 1)), 4).coefficient_list() == [0, 1, 1, 2, 2]
    assert littlewood_q(Partition((2, 1)), 0).coefficient_list() == [0]


@settings(max_examples=25, deadline=None)
@given(partition_strategy(max_n=5))
def test_littlewood_matches_bounded_tableaux(p):
    report = verify_littlewood(p, 8)
    assert report.passed, report.failures


def test_q_hook_length_sum(square_minus_corner):
    lhs = skew_schur_q_lhs(square_minus_corner, 6)
    assert qnhlf_rhs(square_minus_corner, 6) == lhs
    assert qnhlf_rhs_printed(square_minus_corner, 6) != lhs
    assert lhs[0] == 0 and lhs[1] == 1


@settings(max_examples=30, deadline=None)
@given(skew_shape_strategy(max_n=5))
def test_q_hook_length_sum_on_random_shapes(s):
    report = verify_qnhlf(s, 7)
    assert report.passed, report.failures


def test_leading_terms(square_minus_corner):
    left, right = leading_terms(square_minus_corner)
    assert left == right == QPolynomial.from_exponents([1, 2])
    printed_left, printed_right = leading_terms_printed(square_minus_corner)
    assert printed_right == QPolynomial.from_exponents([0, 1], 2)
    assert printed_left != printed_right
    assert excited_array_weights(square_minus_corner) == left


def test_leading_terms_of_big_shape(big_shape):
    expected = QPolynomial.from_exponents([14, 16, 17, 18, 19, 20])
    assert minimal_weight_polynomial(big_shape) == expected
    assert verify_leading_terms(big_shape).passed


# --- North-East Excited Diagrams ---

def test_psi_on_slim_shape():
    diagrams = enumerate_ne_excited(SLIM)
    images = [psi(d).entries for d in diagrams]
    assert images == [(2, 3), (1, 3), (1, 2)]
    assert [ne_hook_product(d) for d in diagrams] == [8, 8, 6]
    for d in diagrams:
        t = psi(d)
        assert omega(SLIM, t).cells == d.cells
        assert oot_factor_product(SLIM, t) == ne_hook_product(d)


def test_ne_excited_suite():
    assert verify_ne_excited(SLIM).passed
    assert verify_ne_excited(SkewShape.of((3, 3), (1,))).passed
    with pytest.raises(PreconditionError):
        verify_ne_excited(SkewShape.of((5, 5, 3, 3, 2), (2, 2)))


# --- Special Shapes ---

def test_special_shape_builders():
    assert staircase(4) == Partition((3, 2, 1))
    assert staircase_zigzag(1) == SkewShape.of((2, 1))
    assert staircase_zigzag(2) == SkewShape.of((3, 2, 1), (1,))
    assert reverse_hook(1, 1) == SkewShape.of((2, 2), (1,))


def test_special_shapes_suite():
    report = verify_special_shapes(max_n=4, max_hook=2)
    assert report.passed, report.failures
    assert report.checked == 5 + 4
