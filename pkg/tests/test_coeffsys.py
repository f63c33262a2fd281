import pytest

from zkbredon.coeffsys import (CoefficientSystem, SystemError_, SystemMorphism, cokernel_system,
                               constant_system, direct_sum, free_point_system, hom_space,
                               homology_system, identity_morphism, kernel_system, template,
                               zero_system)
from zkbredon.qlinalg import MatrixQ


def test_constant_and_point(cat_d8):
    Q = constant_system(cat_d8)
    M = free_point_system(cat_d8)
    assert Q.dims == [1] * 8 and M.dims == [1] + [0] * 7
    assert hom_space(M, Q)[0] == 1
    assert hom_space(Q, M)[0] == 0
    assert hom_space(Q, Q)[0] == 1


def test_json_roundtrip(cat_d8):
    Q = constant_system(cat_d8)
    back = CoefficientSystem.from_json(Q.to_json(), cat_d8)
    assert back.dims == Q.dims and back.maps == Q.maps


def test_template_lists_morphisms(cat_d8):
    t = template(cat_d8)
    assert len(t["maps"]) == cat_d8.algebra_dimension() - 8


def test_broken_functor_is_rejected(cat_d8):
    data = constant_system(cat_d8).to_json()
    data["maps"][3]["matrix"] = [["2"]]
    with pytest.raises(SystemError_):
        CoefficientSystem.from_json(data, cat_d8)


def test_homology_dims_d8(sphere3, d8, cat_d8):
    K, X = sphere3
    dims = [homology_system(K, d8, q, cat_d8, X).dims for q in range(4)]
    assert dims == [[1, 1, 1, 1, 1, 2, 2, 2], [0, 0, 1, 1, 1, 0, 0, 0],
                    [0, 1, 0, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0, 0, 0]]


def test_hom_into_constant(sphere3, d8, cat_d8, s4, cat_s4):
    K, X = sphere3
    for G, C in ((d8, cat_d8), (s4, cat_s4)):
        Q = constant_system(C)
        dims = [hom_space(homology_system(K, G, q, C, X), Q)[0] for q in range(4)]
        assert dims == [1, 0, 0, 0]


def test_kernel_cokernel(cat_d8):
    Q = constant_system(cat_d8)
    M = free_point_system(cat_d8)
    _, basis = hom_space(M, Q)
    phi = basis[0]
    K, inc = kernel_system(phi)
    assert K.is_zero()
    Qt, proj = cokernel_system(phi)
    assert Qt.dims == [0] + [1] * 7
    assert phi.then(proj).is_zero()


def test_direct_sum_and_identity(cat_d8):
    S = direct_sum([constant_system(cat_d8), free_point_system(cat_d8)])
    S.validate()
    assert hom_space(S, S)[0] == 2 + 1 + 0
    assert identity_morphism(S).naturality_failure() is None


def test_zero(cat_s4):
    Z = zero_system(cat_s4)
    assert Z.is_zero()
    assert hom_space(Z, constant_system(cat_s4))[0] == 0
