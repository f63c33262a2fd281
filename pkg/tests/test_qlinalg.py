from fractions import Fraction

import pytest
from hypothesis import given

from zkbredon.qlinalg import (MatrixQ, SubspaceQ, intersect, kernel, left_inverse, q, q_str,
                              quotient_map, rank, rref, solve, solve_space)

from conftest import matrices


def test_parse_and_print():
    assert q("3/6") == Fraction(1, 2)
    assert q_str(Fraction(4, 2)) == "2"
    assert q_str(Fraction(-1, 3)) == "-1/3"


def test_hilbert_rank():
    H = MatrixQ(4, 4, [[Fraction(1, i + j + 1) for j in range(4)] for i in range(4)])
    assert rank(H) == 4
    assert solve(H, [1, 0, 0, 0])[0] == 16


def test_inconsistent_system():
    A = MatrixQ(2, 1, [[1], [1]])
    assert solve_space(A, [1, 2]) is None
    with pytest.raises(ValueError):
        solve(A, [1, 2])


def test_quotient_rejects_non_subspace():
    a = SubspaceQ.span([[1, 0, 0]], 3)
    b = SubspaceQ.span([[0, 1, 0]], 3)
    with pytest.raises(ValueError, match="not a subspace"):
        quotient_map(a, b)


@given(matrices())
def test_rank_nullity(A):
    assert rank(A) + kernel(A).dim == A.cols


@given(matrices())
def test_rref_idempotent(A):
    R, piv = rref(A)
    assert rref(R)[0] == R
    assert len(piv) == rank(A)


@given(matrices())
def test_kernel_is_killed(A):
    for v in kernel(A).basis.data:
        assert all(x == 0 for x in A.apply(v))


@given(matrices(), matrices())
def test_intersection_inside_both(A, B):
    if A.cols != B.cols:
        return
    a, b = kernel(A), kernel(B)
    both = intersect([a, b])
    assert a.contains_subspace(both) and b.contains_subspace(both)
    assert both.dim >= a.dim + b.dim - A.cols


@given(matrices())
def test_quotient_map(A):
    total = SubspaceQ.full(A.cols)
    sub = kernel(A)
    proj, lifts = quotient_map(total, sub)
    assert proj.rows == A.cols - sub.dim
    for v in sub.basis.data:
        assert all(x == 0 for x in proj.apply(v))
    for i, v in enumerate(lifts):
        assert list(proj.apply(v)) == [1 if j == i else 0 for j in range(proj.rows)]


@given(matrices())
def test_left_inverse(A):
    cols = SubspaceQ.span(A.columns(), A.rows).basis
    B = MatrixQ.from_columns(cols.data, A.rows)
    if B.cols:
        assert left_inverse(B) @ B == MatrixQ.identity(B.cols)
