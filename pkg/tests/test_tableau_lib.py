import pytest
from hypothesis import given, settings

from errors import PreconditionError, ShapeError, UnsupportedShapeError
from shape_lib import Cell, Partition, SkewShape
from tableau_lib import (
    MuTableau, SkewTableau, active_columns, apply_delta, count_syt, enumerate_bounded_ssyt,
    enumerate_flagged_skew, enumerate_min_via_characterization, enumerate_min_via_moves,
    enumerate_oot, enumerate_ssyt, is_minimal, is_semistandard, minimum_tableau, tbar,
    verify_characterization,
)
from strategies import skew_shape_strategy


# --- Tableaux ---

def test_tableau_from_rows(square_minus_corner):
    t = SkewTableau.from_rows(square_minus_corner, [[None, 0], [1, 1]])
    assert t.entries == (0, 1, 1)
    assert t[Cell(2, 1)] == 1
    assert t.get(Cell(1, 1)) is None
    assert t.weight == 2
    assert t.rows() == [[None, 0], [1, 1]]
    assert t.to_json() == {"outer": [2, 2], "inner": [1], "rows": [[None, 0], [1, 1]]}


@pytest.mark.parametrize("rows", [
    [[None, 0]],
    [[None, 0], [1]],
    [[None, 0], [None, 1]],
    [[None, -1], [0, 1]],
])
def test_tableau_from_rows_rejects(square_minus_corner, rows):
    with pytest.raises(ShapeError):
        SkewTableau.from_rows(square_minus_corner, rows)


def test_is_semistandard(square_minus_corner):
    assert is_semistandard(SkewTableau(square_minus_corner, (0, 0, 1)))
    assert not is_semistandard(SkewTableau(square_minus_corner, (0, 1, 0)))
    assert not is_semistandard(SkewTableau(square_minus_corner, (1, 0, 1)))


# --- Minimal Tableaux ---

def test_minimum_tableau(square_minus_corner, big_shape):
    assert minimum_tableau(square_minus_corner).entries == (0, 0, 1)
    t0 = minimum_tableau(big_shape)
    expected = {(5, 1): 2, (5, 2): 2, (4, 2): 1, (4, 3): 3, (3, 3): 2, (2, 3): 1, (2, 4): 1, (2, 5): 1, (1, 5): 0}
    for (i, j), v in expected.items():
        assert t0[Cell(i, j)] == v


def test_delta_moves(square_minus_corner):
    t0 = minimum_tableau(square_minus_corner)
    assert active_columns(t0) == [(1, 1)]
    t1 = apply_delta(t0, 1, 1)
    assert t1.entries == (0, 1, 1)
    assert tbar(t1) == (0, 1, 0)
    assert active_columns(t1) == []
    with pytest.raises(PreconditionError):
        apply_delta(t0, 1, 2)
    with pytest.raises(PreconditionError):
        apply_delta(t0, 2, 1)


def test_is_minimal(square_minus_corner):
    assert is_minimal(SkewTableau(square_minus_corner, (0, 1, 1)))
    assert not is_minimal(SkewTableau(square_minus_corner, (0, 0, 2)))
    assert not is_minimal(SkewTableau(square_minus_corner, (1, 1, 2)))


def test_minimal_tableaux_of_small_shape(square_minus_corner):
    by_moves = [t.entries for t in enumerate_min_via_moves(square_minus_corner)]
    assert by_moves == [(0, 0, 1), (0, 1, 1)]
    assert [t.entries for t in enumerate_min_via_characterization(square_minus_corner)] == by_moves


def test_big_shape_has_six_minimal_tableaux(big_shape):
    tableaux = enumerate_min_via_moves(big_shape)
    assert len(tableaux) == 6
    assert tableaux[0] == minimum_tableau(big_shape)
    assert sorted(t.weight for t in tableaux) == [14, 16, 17, 18, 19, 20]


def test_big_shape_tbar_supports(big_shape):
    def support(t):
        return {c: v for c, v in zip(big_shape.cells, tbar(t)) if v}

    expected = [
        {},
        {Cell(4, 2): 1, Cell(5, 2): 1},
        {Cell(4, 2): 1, Cell(5, 1): 1, Cell(5, 2): 1},
        {Cell(4, 2): 2, Cell(5, 2): 2},
        {Cell(4, 2): 2, Cell(5, 1): 1, Cell(5, 2): 2},
        {Cell(4, 2): 2, Cell(5, 1): 2, Cell(5, 2): 2},
    ]
    found = [support(t) for t in enumerate_min_via_moves(big_shape)]
    assert sorted(found, key=lambda d: sorted(d.items())) == sorted(expected, key=lambda d: sorted(d.items()))
    assert all(t.rows()[2] == [0, 0, 2] for t in enumerate_min_via_characterization(big_shape))


def test_minimal_tableaux_need_a_connected_shape():
    with pytest.raises(UnsupportedShapeError):
        enumerate_min_via_moves(SkewShape.of((2, 1), (1,)))


@settings(max_examples=60, deadline=None)
@given(skew_shape_strategy(connected=True))
def test_closure_equals_characterization(s):
    report = verify_characterization(s)
    assert report.passed, report.failures


# --- Other Families ---

def test_flagged_skew_tableaux():
    tableaux = enumerate_flagged_skew(SkewShape.of((2, 1), (1,)))
    assert [t.rows() for t in tableaux] == [[[None, 0], [0]], [[None, 0], [1]]]


def test_ssyt_enumeration():
    assert len(enumerate_ssyt(SkewShape.of((1, 1)), 2)) == 3
    assert len(enumerate_ssyt(SkewShape.of((2,)), 1)) == 3
    assert len(enumerate_bounded_ssyt(SkewShape.of((1,)), 3)) == 4
    assert len(enumerate_bounded_ssyt(SkewShape.of((1, 1)), 4)) == 6
    with pytest.raises(PreconditionError):
        enumerate_bounded_ssyt(SkewShape.of((1,)), -1)


def test_oot_tableaux():
    assert [t.rows() for t in enumerate_oot(SkewShape.of((2, 1), (1,)))] == [[[1]], [[2]]]
    oot = enumerate_oot(SkewShape.of((3, 3), (2,)))
    assert [t.entries for t in oot] == [(1, 1), (1, 2), (2, 2)]
    assert oot[0] == MuTableau(Partition((2,)), (1, 1), 2)
    assert oot[1].to_json() == {"shape": [2], "bound": 2, "rows": [[1, 2]]}


@pytest.mark.parametrize("outer, inner, expected", [
    ((2, 2), (1,), 2),
    ((3, 3), (2,), 3),
    ((2, 1), (1,), 2),
    ((3, 2, 1), (), 16),
    ((2, 2), (2, 2), 1),
    ((5, 5, 3, 3, 2), (2, 2), 445445),
])
def test_count_syt(outer, inner, expected):
    assert count_syt(SkewShape.of(outer, inner)) == expected
