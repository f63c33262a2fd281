from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import settings

from zkbredon.groups import dihedral_square, symmetric
from zkbredon.orbitcat import build_orbit_category
from zkbredon.simplicial import SimplicialComplex, boundary
from zkbredon.zcomplex import triangulate

settings.register_profile("default", max_examples=30, deadline=None)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    from zkbredon.qlinalg import MatrixQ

    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    zero_heavy = st.one_of(st.just(Fraction(0)), small_fractions)
    data = draw(st.lists(st.lists(zero_heavy, min_size=c, max_size=c), min_size=r, max_size=r))
    return MatrixQ(r, c, data)


@st.composite
def complexes(draw, max_vertices=4):
    n = draw(st.integers(1, max_vertices))
    faces = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1), min_size=0, max_size=5))
    return SimplicialComplex(n, faces)


@pytest.fixture(scope="session")
def d8():
    return dihedral_square()


@pytest.fixture(scope="session")
def s4():
    return symmetric(4)


@pytest.fixture(scope="session")
def cat_d8(d8):
    return build_orbit_category(d8)


@pytest.fixture(scope="session")
def cat_s4(s4):
    return build_orbit_category(s4)


@pytest.fixture(scope="session")
def sphere3():
    K = boundary(3)
    return K, triangulate(K)
