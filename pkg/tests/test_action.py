import pytest
from hypothesis import given

from zkbredon.action import (ActionError, aut_group, face_violations, fixed_point_shape,
                             strong_quotient, validate_action)
from zkbredon.groups import Perm, closure, dihedral, parse_group, symmetric
from zkbredon.simplicial import SimplicialComplex, boundary, ngon, star, trilinder

from conftest import complexes


def test_star_quotient():
    K = star()
    sq = strong_quotient(validate_action(K, parse_group("gens=(1 2 3)", 4)))
    assert sq.orbits == [(0,), (1, 2, 3)]
    assert sq.k == 1
    assert sq.quotient.num_vertices == 1 and sq.quotient.facets == ((0,),)


def test_bad_action_reports_witnesses():
    K = ngon(4)
    with pytest.raises(ActionError, match="face not preserved") as info:
        validate_action(K, parse_group("gens=(0 1)", 4))
    assert (1, 2) in [f for _, f in info.value.witnesses]


@pytest.mark.parametrize("K, order", [(boundary(3), 24), (ngon(4), 8), (ngon(5), 10),
                                      (ngon(6), 12), (trilinder(), 12), (star(), 6)])
def test_aut_orders(K, order):
    G = aut_group(K)
    assert G.order == order
    assert not face_violations(K, G)


@given(complexes(max_vertices=5))
def test_aut_group_preserves_faces(K):
    G = aut_group(K)
    assert not face_violations(K, G)
    assert closure(K.num_vertices, G.generators).order == G.order


def test_sphere_shapes_d8():
    K = boundary(3)
    act = validate_action(K, symmetric(4))
    cases = {"trivial": 3, "gens=(0 1)": 2, "gens=(0 1)(2 3)": 1, "gens=(0 1 2)": 1,
             "gens=(0 1 2 3)": 0, "sym": 0}
    for text, dim in cases.items():
        assert fixed_point_shape(act, parse_group(text, 4)).sphere_dim == dim


def test_trilinder_rotation_quotient():
    K = trilinder()
    g = Perm.from_cycles("(0 1 2)(3 4 5)", 6)
    sq = strong_quotient(validate_action(K, closure(6, [g])))
    assert sq.orbits == [(0, 1, 2), (3, 4, 5)]
    assert sq.k == 0
    assert sq.quotient.facets == ((0,), (1,))


def test_ngon_reflection_quotient():
    K = ngon(6)
    sq = strong_quotient(validate_action(K, closure(6, [dihedral(6).generators[1]])))
    assert sum(len(o) for o in sq.orbits) == 6
