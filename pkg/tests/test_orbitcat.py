import pytest

from zkbredon.groups import cyclic, dihedral_square, symmetric
from zkbredon.orbitcat import build_orbit_category, free_path_algebra_dimension, linear_quiver, Quiver


def test_counts(cat_d8, cat_s4):
    assert len(cat_d8) == 8
    assert len(cat_s4) == 11
    assert build_orbit_category(cyclic(2)).algebra_dimension() == 4


def test_algebra_dimensions(cat_d8, cat_s4):
    assert cat_d8.algebra_dimension() == 58
    assert cat_s4.algebra_dimension() == 146


def test_composition_associative(cat_d8):
    C = cat_d8
    table = C.composition_table
    for f in C.all_morphisms:
        for g in C.morphisms(src=f[1]):
            for h in C.morphisms(src=g[1]):
                assert table[h, table[g, f]] == table[table[h, g], f]


def test_identities(cat_s4):
    C = cat_s4
    for f in C.all_morphisms:
        assert C.compose(C.identity(f[1]), f) == f
        assert C.compose(f, C.identity(f[0])) == f


def test_endomorphisms_are_weyl(cat_d8):
    for i, c in enumerate(cat_d8.objects):
        assert cat_d8.hom_size(i, i) == c.weyl_order


@pytest.mark.parametrize("n", [3, 4, 5])
def test_path_algebra(n):
    assert free_path_algebra_dimension(linear_quiver(n)) == n * (n + 1) // 2


def test_cycle_gives_infinity():
    assert free_path_algebra_dimension(Quiver(2, [(0, 1), (1, 0)])) == float("inf")
