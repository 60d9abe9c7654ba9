import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcgroup.errors import InconsistentSystemError, PresentationError
from pcgroup.linalg.gfp import FpMatrix, echelonize, nullspace, rank, solve


def _times(rows, x, p):
    return [sum(a * b for a, b in zip(row, x)) % p for row in rows]


def test_rank_of_dependent_rows():
    assert rank(FpMatrix.from_rows(5, [[1, 2], [2, 4]])) == 1
    assert rank(FpMatrix.from_rows(7, [[1, 2], [2, 4]])) == 1
    assert rank(FpMatrix.from_rows(3, [[1, 0], [0, 1]])) == 2


def test_echelonize_pivots():
    form = echelonize(FpMatrix.from_rows(2, [[0, 1, 1], [0, 1, 0]]))
    assert form.rank == 2
    assert form.pivots == (1, 2)


def test_nullspace_over_gf2():
    assert nullspace(FpMatrix.from_rows(2, [[1, 1, 0], [0, 1, 1]])) == ((1, 1, 1),)


def test_solve_unique():
    sol = solve(FpMatrix.from_rows(5, [[2, 1], [1, 1]]), [3, 2])
    assert sol.particular == (1, 1)
    assert sol.nullspace == ()


def test_solve_inconsistent():
    with pytest.raises(InconsistentSystemError):
        solve(FpMatrix.from_rows(3, [[1, 1], [1, 1]]), [0, 1])


def test_solve_rejects_wrong_length():
    with pytest.raises(PresentationError):
        solve(FpMatrix.from_rows(3, [[1, 1]]), [0, 1])


@st.composite
def matrices(draw):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    rows = draw(st.integers(1, 5))
    cols = draw(st.integers(1, 6))
    entries = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    return p, entries, cols


@given(matrices())
@settings(max_examples=60)
def test_rank_nullity(data):
    p, rows, cols = data
    m = FpMatrix.from_rows(p, rows, cols=cols)
    basis = nullspace(m)
    assert rank(m) + len(basis) == cols
    for x in basis:
        assert _times(rows, x, p) == [0] * len(rows)


@given(matrices(), st.data())
@settings(max_examples=60)
def test_solve_finds_a_solution_of_consistent_systems(data, draw):
    p, rows, cols = data
    x = draw.draw(st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols))
    b = _times(rows, x, p)
    sol = solve(FpMatrix.from_rows(p, rows, cols=cols), b)
    assert _times(rows, sol.particular, p) == b
