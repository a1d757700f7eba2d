from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from axialmono.linalg import InconsistentSystem, nullspace, rank, solve

F = Fraction


def _apply(rows, x):
    return [sum(F(v) * x[c] for c, v in row.items()) for row in rows]


def test_rank_of_dependent_rows():
    rows = [{0: 1, 1: 2}, {0: 2, 1: 4}, {2: F(1, 3)}]
    assert rank(rows) == 2


def test_solve_square():
    rows = [{0: 2, 1: 1}, {0: 1, 1: 3}]
    x = solve(rows, [3, 5], 2)
    assert x == [F(4, 5), F(7, 5)]


def test_solve_free_variables_set_to_zero():
    # x0 + x1 = 2 with x1 free
    assert solve([{0: 1, 1: 1}], [2], 2) == [2, 0]


def test_inconsistent():
    with pytest.raises(InconsistentSystem):
        solve([{0: 1}, {0: 2}], [1, 3], 1)


def test_length_mismatch():
    with pytest.raises(ValueError):
        solve([{0: 1}], [1, 2], 1)


def test_nullspace_basis():
    rows = [{0: 1, 1: 1, 2: 1}]
    basis = nullspace(rows, 3)
    assert len(basis) == 2
    for v in basis:
        assert _apply(rows, [v.get(c, 0) for c in range(3)]) == [0]


def test_empty_system():
    assert rank([]) == 0
    assert len(nullspace([], 3)) == 3


matrices = st.lists(st.dictionaries(st.integers(0, 4), st.builds(F, st.integers(-5, 5),
                                                                  st.integers(1, 3)),
                                    max_size=4), max_size=5)


@given(matrices)
def test_rank_nullity(rows):
    assert rank(rows) + len(nullspace(rows, 5)) == 5


@given(matrices, st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_solve_recovers_consistent_rhs(rows, x_true):
    rhs = _apply(rows, x_true)
    x = solve(rows, rhs, 5)
    assert _apply(rows, x) == rhs
