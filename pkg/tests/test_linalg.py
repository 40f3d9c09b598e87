"""Exact linear algebra: row reduction, solving, and Smith normal form."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stasys.linalg import (
    det_sign,
    identity,
    inverse,
    left_inverse,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    rref,
    smith_normal_form,
    solve,
    transpose,
)

F = Fraction


def frac_matrix(rows):
    return [[F(x) for x in row] for row in rows]


def test_rref_identity():
    r, pivots = rref(frac_matrix([[2, 0], [0, 3]]))
    assert r == identity(2)
    assert pivots == [0, 1]


def test_rank_and_nullspace():
    a = frac_matrix([[1, 2, 3], [2, 4, 6]])
    assert rank(a) == 1
    null = nullspace(a, ncols=3)
    assert len(null) == 2
    for v in null:
        assert all(x == 0 for x in mat_vec(a, v))


def test_solve_consistent_and_inconsistent():
    a = frac_matrix([[1, 1], [1, -1]])
    x = solve(a, [F(3), F(1)])
    assert x == [F(2), F(1)]
    a2 = frac_matrix([[1, 1], [2, 2]])
    assert solve(a2, [F(1), F(3)]) is None


def test_inverse_round_trip():
    a = frac_matrix([[2, 1], [1, 1]])
    assert mat_mul(a, inverse(a)) == identity(2)


def test_left_inverse_of_tall_matrix():
    a = frac_matrix([[1, 0], [0, 1], [1, 1]])
    li = left_inverse(a)
    assert mat_mul(li, a) == identity(2)


def _assert_snf(m):
    u, d, v = smith_normal_form(m)
    nr, nc = len(m), len(m[0]) if m else 0
    # convention: M = U * D * V with U, V unimodular
    assert mat_mul(mat_mul(frac_matrix(u), frac_matrix(d)), frac_matrix(v)) == frac_matrix(m)
    assert abs(det_sign(u)) == 1 and abs(det_sign(v)) == 1
    diag = [d[i][i] for i in range(min(nr, nc))]
    for i in range(nr):
        for j in range(nc):
            if i != j:
                assert d[i][j] == 0
    nonzero = [x for x in diag if x]
    assert all(x > 0 for x in nonzero)
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    assert all(x == 0 for x in diag[len(nonzero):])
    return u, d, v


def test_snf_known_example():
    # classic: diag(1, 6) with divisibility, not diag(2, 3)
    _, d, _ = _assert_snf([[2, 0], [0, 3]])
    assert [d[0][0], d[1][1]] == [1, 6]


def test_snf_rectangular():
    _assert_snf([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    _assert_snf([[1, 2, 3], [4, 5, 6]])


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 4),
    st.integers(1, 4),
    st.data(),
)
def test_snf_random_matrices(nr, nc, data):
    m = [
        [data.draw(st.integers(-9, 9)) for _ in range(nc)]
        for _ in range(nr)
    ]
    _assert_snf(m)


def test_snf_preserves_rank():
    m = [[1, 2], [2, 4], [3, 6]]
    _, d, _ = smith_normal_form(m)
    assert sum(1 for i in range(2) if d[i][i]) == rank(frac_matrix(m))


def test_det_sign_values():
    assert det_sign([[1, 0], [0, 1]]) == 1
    assert det_sign([[0, 1], [1, 0]]) == -1
    assert det_sign([[1, 1], [1, 1]]) == 0
