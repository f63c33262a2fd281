import os

import pytest
from hypothesis import given

from zkbredon.groups import Perm, closure, dihedral_square, symmetric
from zkbredon.simplicial import SimplicialComplex, boundary, ngon, simplex
from zkbredon.zcomplex import (ZComplexError, betti_numbers, fixed_subcomplex, homology,
                               induced_map, translation_cell_map, triangulate)
from zkbredon.qlinalg import MatrixQ

from conftest import complexes


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_spheres(m):
    b = betti_numbers(triangulate(boundary(m)))
    assert b == [1] + [0] * (m - 1) + [1]


@pytest.mark.parametrize("n, b1", [(4, 2), (5, 10), (6, 34)])
def test_ngon_surfaces(n, b1):
    assert betti_numbers(triangulate(ngon(n)))[1] == b1


def test_simplex_is_a_cube():
    assert betti_numbers(triangulate(simplex(2))) == [1, 0, 0, 0]


def test_ghosts_double_components():
    K = SimplicialComplex(3, [(0,)])
    assert betti_numbers(triangulate(K))[0] == 4


def test_vertex_bound(monkeypatch):
    K = SimplicialComplex(9, [(0,)])
    with pytest.raises(ZComplexError, match="limited"):
        triangulate(K)
    monkeypatch.setenv("ZK_MAX_VERTICES", "9")
    assert triangulate(K).count(0) == 2 ** 9


@given(complexes())
def test_dd_zero(K):
    X = triangulate(K)
    assert X.check_dd()


@given(complexes())
def test_homology_bases_match_betti(K):
    X = triangulate(K)
    b = betti_numbers(X)
    assert [len(homology(X, n)) for n in range(X.top_dim + 1)] == b
    assert sum((-1) ** n * x for n, x in enumerate(b)) == X.euler_characteristic()


def test_fixed_points_are_subcomplexes():
    K = boundary(3)
    X = triangulate(K)
    H = closure(4, [Perm.from_cycles("(0 1)", 4)])
    F = fixed_subcomplex(K, H, X)
    assert F.check_dd()
    assert betti_numbers(F) == [1, 0, 1]


def test_identity_induces_identity():
    X = triangulate(boundary(2))
    for n in range(3):
        A = induced_map(X, X, lambda c: c, n)
        assert A == MatrixQ.identity(A.rows)


def test_reflection_reverses_top_class():
    X = triangulate(boundary(3))
    g = Perm.from_cycles("(1 3)", 4)
    assert induced_map(X, X, translation_cell_map(g), 3).data[0][0] == -1
    r = Perm.from_cycles("(0 1 2 3)", 4)
    assert induced_map(X, X, translation_cell_map(r), 3).data[0][0] == -1
    assert induced_map(X, X, translation_cell_map(r * r), 3).data[0][0] == 1
