import pytest

from zkbredon.bredon import (bredon_cochain, bredon_cohomology, compare_with_naive,
                             equivariant_cells, ext_table, homology_systems,
                             naive_bredon_cohomology, orbit_sum_oracle, ucss_consistency)
from zkbredon.coeffsys import constant_system, free_point_system, homology_system, zero_system
from zkbredon.groups import PermGroup, closure, Perm, dihedral_square, symmetric
from zkbredon.orbitcat import build_orbit_category
from zkbredon.simplicial import boundary, ngon, star
from zkbredon.zcomplex import betti_numbers, triangulate


def test_trivial_group_cells(sphere3):
    K, X = sphere3
    E = PermGroup(4)
    cells = equivariant_cells(K, E, ambient=X)
    assert all(len(o.members) == 1 and o.stabilizer == 0 for per in cells.orbits for o in per)


def test_diagonal_cells_fixed(sphere3, s4, cat_s4):
    K, X = sphere3
    cells = equivariant_cells(K, s4, cat_s4, X)
    top = len(cat_s4) - 1
    fixed = [o.representative for o in cells.orbits[0] if o.stabilizer == top]
    assert fixed == [(0,), (15,)]
    for n, per in enumerate(cells.orbits):
        assert sum(len(o.members) for o in per) == X.count(n)


def test_constant_coefficients(sphere3, d8, cat_d8, s4, cat_s4):
    K, X = sphere3
    for G, C in ((d8, cat_d8), (s4, cat_s4)):
        cells = equivariant_cells(K, G, C, X)
        H = bredon_cohomology(K, G, constant_system(C), cells)
        assert H == orbit_sum_oracle(X, G) == [1, 0, 0, 0]


def test_point_coefficients(sphere3, d8, cat_d8):
    K, X = sphere3
    cells = equivariant_cells(K, d8, cat_d8, X)
    H = bredon_cohomology(K, d8, free_point_system(cat_d8), cells)
    assert H == orbit_sum_oracle(X, d8, free_only=True) == [0, 0, 1, 1]


def test_zero_coefficients(sphere3, d8, cat_d8):
    K, X = sphere3
    assert bredon_cohomology(K, d8, zero_system(cat_d8)) == [0, 0, 0, 0]


@pytest.mark.parametrize("K", [boundary(2), ngon(4), star()])
def test_trivial_group_reduction(K):
    E = PermGroup(K.num_vertices)
    C = build_orbit_category(E)
    assert bredon_cohomology(K, E, constant_system(C)) == betti_numbers(triangulate(K))


def test_naive_oracle_agrees(d8, cat_d8):
    K = ngon(4)
    cells = equivariant_cells(K, d8, cat_d8)
    for M in (constant_system(cat_d8), free_point_system(cat_d8),
              homology_system(K, d8, 1, cat_d8)):
        checks = compare_with_naive(cells, M)
        assert all(checks.values()), checks
        dims, coh = naive_bredon_cohomology(cells, M)
        assert dims == bredon_cochain(cells, M).dims
        assert coh == bredon_cohomology(K, d8, M, cells)


def test_ext_table_point(sphere3, d8, cat_d8):
    K, X = sphere3
    t = ext_table(homology_systems(K, d8, cat_d8, X), free_point_system(cat_d8))
    assert t.raw == [[1, 0, 0, 0], [3, 0, 0, 0], [3, 1, 0, 0]]
    assert t.ext[0] == t.hom
    # Euler consistency per q
    for q in range(4):
        assert (sum((-1) ** p * t.raw[p][q] for p in range(3))
                == sum((-1) ** p * t.ext[p][q] for p in range(3)))


@pytest.mark.parametrize("coeff", ["constant", "point"])
@pytest.mark.parametrize("group", ["d8", "s4"])
def test_consistency(sphere3, coeff, group, request):
    K, _ = sphere3
    G = request.getfixturevalue(group)
    C = request.getfixturevalue("cat_" + group)
    M = constant_system(C) if coeff == "constant" else free_point_system(C)
    rep = ucss_consistency(K, G, M, threads=2)
    assert rep.ok, rep.checks


def test_star_rotation():
    K = star()
    G = closure(4, [Perm.from_cycles("(1 2 3)", 4)])
    C = build_orbit_category(G)
    assert bredon_cohomology(K, G, constant_system(C)) == orbit_sum_oracle(triangulate(K), G)
