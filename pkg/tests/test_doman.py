import pytest
from hypothesis import given, settings, strategies as st

from zkbredon.coeffsys import (constant_system, direct_sum, free_point_system, homology_system,
                               zero_system, hom_space)
from zkbredon.doman import (h_fixed_cosets, injective_envelope, injective_resolution,
                            realize_injective, socle_parts, trivial_rep)
from zkbredon.groups import cyclic, longest_chain_length
from zkbredon.orbitcat import build_orbit_category


def test_h_fixed_cosets_examples(cat_s4):
    C = cat_s4
    e = 0
    top = len(C) - 1
    for k in range(len(C)):
        cosets, _ = h_fixed_cosets(C, k, e)
        assert len(cosets) == 24 // C.objects[k].order
    cosets, action = h_fixed_cosets(C, top, top)
    assert len(cosets) == 1
    c4 = next(i for i, c in enumerate(C.objects)
              if c.order == 4 and any(len(g.cycles()) == 9 for g in c.representative.elements))
    a4 = next(i for i, c in enumerate(C.objects) if c.order == 12)
    assert h_fixed_cosets(C, a4, c4)[0] == []


def test_free_atom_is_constant(cat_d8):
    atom = realize_injective(cat_d8, 0, trivial_rep(cat_d8, 0))
    assert atom.realized.dims == [1] * 8
    assert hom_space(atom.realized, constant_system(cat_d8))[0] == 1


def test_klein_atom(cat_d8):
    k = 4
    assert cat_d8.objects[k].order == 4
    atom = realize_injective(cat_d8, k, trivial_rep(cat_d8, k))
    assert atom.realized.dims == [0, 0, 0, 0, 1, 0, 0, 1]


def test_atom_dims_count_orbits(cat_s4):
    # trivial V: dim I(V)(G/K) = number of WH-orbits on (G/K)^H
    C = cat_s4
    for h in range(len(C)):
        atom = realize_injective(C, h, trivial_rep(C, h))
        for k in range(len(C)):
            _, action = h_fixed_cosets(C, k, h)
            pts = set(range(len(C.hom[h, k])))
            orbits = 0
            while pts:
                x = pts.pop()
                orb = {p[x] for p in action.values()}
                pts -= orb
                orbits += 1
            assert atom.realized.dims[k] == orbits


def test_socle_parts(cat_d8):
    assert [r.dim for r in socle_parts(constant_system(cat_d8)).reps] == [1] + [0] * 7
    assert [r.dim for r in socle_parts(free_point_system(cat_d8)).reps] == [1] + [0] * 7
    assert all(r.dim == 0 for r in socle_parts(zero_system(cat_d8)).reps)


def test_envelopes(cat_d8):
    Q = constant_system(cat_d8)
    env = injective_envelope(Q)
    assert env.system.dims == Q.dims
    env = injective_envelope(free_point_system(cat_d8))
    assert env.system.dims == [1] * 8
    assert injective_envelope(zero_system(cat_d8)).system.is_zero()


def test_point_resolution_d8(cat_d8):
    R = injective_resolution(free_point_system(cat_d8))
    assert R.is_exact() and R.is_minimal()
    assert [I.dims for I in R.terms] == [[1] * 8, [0, 1, 1, 1, 3, 3, 1, 3],
                                         [0, 0, 0, 0, 2, 2, 0, 2]]
    assert R.length == 2 <= longest_chain_length(cat_d8.group) - 1


def test_point_resolution_s4(cat_s4):
    R = injective_resolution(free_point_system(cat_s4))
    assert R.is_exact() and R.is_minimal()
    assert R.length == 3 <= longest_chain_length(cat_s4.group) - 1


def test_constant_is_injective(cat_s4):
    R = injective_resolution(constant_system(cat_s4))
    assert R.length == 0


def test_c2_point_needs_two_terms():
    C = build_orbit_category(cyclic(2))
    R = injective_resolution(free_point_system(C))
    assert len(R) == 2 and R.length == 1 == longest_chain_length(C.group) - 1


def test_homology_systems_resolve(sphere3, d8, cat_d8):
    K, X = sphere3
    for q in range(4):
        H = homology_system(K, d8, q, cat_d8, X)
        R = injective_resolution(H)
        assert R.is_exact() and R.is_minimal()
        for I in R.terms:
            I.validate()


@settings(max_examples=10)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_sums_resolve(cat_d8, picks):
    # direct sums of homology systems and point systems
    from zkbredon.simplicial import boundary
    from zkbredon.zcomplex import triangulate

    K = boundary(3)
    X = triangulate(K)
    parts = [homology_system(K, cat_d8.group, q, cat_d8, X) for q in picks]
    M = direct_sum(parts + [free_point_system(cat_d8)])
    R = injective_resolution(M)
    assert R.is_exact() and R.is_minimal()
