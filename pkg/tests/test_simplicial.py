import pytest
from hypothesis import given

from zkbredon.simplicial import (ComplexError, SimplicialComplex, boundary, full_subcomplex, ngon,
                                 parse_complex, simplex, star)

from conftest import complexes


def test_boundary_faces():
    K = boundary(3)
    assert K.f_vector() == (4, 6, 4)
    assert K.dimension == 2


def test_ghost_vertices():
    K = SimplicialComplex(4, [(0, 1)])
    assert K.ghost_vertices == (2, 3)


def test_specifiers_agree_with_constructors():
    assert parse_complex("boundary:3") == boundary(3)
    assert parse_complex("simplex:2") == simplex(2)
    assert parse_complex("ngon:5") == ngon(5)
    assert parse_complex("star") == star()


@pytest.mark.parametrize("bad", ["ngon:2", "boundary:0", "cube:3", "simplex:x"])
def test_bad_specifiers(bad):
    with pytest.raises(ComplexError):
        parse_complex(bad)


def test_json_roundtrip():
    K = ngon(5)
    assert SimplicialComplex.from_json(K.to_json()) == K


@given(complexes())
def test_downward_closed(K):
    for m in K.face_masks:
        sub = m
        while sub:
            sub = (sub - 1) & m
            assert sub in K.face_masks


@given(complexes())
def test_full_subcomplex_of_everything_is_identity(K):
    assert full_subcomplex(K, range(K.num_vertices)) == K
