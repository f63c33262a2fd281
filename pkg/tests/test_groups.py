import pytest
from hypothesis import given, strategies as st

from zkbredon.groups import (GroupError, Perm, PermGroup, cyclic, dihedral, dihedral_square,
                             longest_chain_length, parse_group, subconjugators, subgroup_classes,
                             symmetric)

perms4 = st.permutations(range(4)).map(lambda p: Perm(tuple(p)))


def test_cycle_notation():
    g = Perm.from_cycles("(0 1 2 3)", 4)
    assert g(3) == 0
    assert g.cycles() == "(0 1 2 3)"
    assert Perm.identity(3).cycles() == "()"


def test_bad_cycles():
    with pytest.raises(GroupError):
        Perm.from_cycles("(0 5)", 4)


@given(perms4, perms4, perms4)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms4)
def test_inverse(a):
    assert (a * a.inverse()).is_identity()


@given(perms4, perms4)
def test_composition_convention(a, b):
    assert all((a * b)(i) == a(b(i)) for i in range(4))


def test_orders():
    assert dihedral_square().order == 8
    assert symmetric(4).order == 24
    assert dihedral(5).order == 10
    assert cyclic(3).order == 3


def test_parse_group():
    G = parse_group("gens=(0 1 2 3),(0 1)(2 3)", 4)
    assert G == dihedral_square()
    assert parse_group("sym", 4).order == 24
    assert parse_group("trivial", 4).order == 1


@pytest.mark.parametrize("G, count", [(dihedral_square(), 8), (symmetric(4), 11),
                                      (cyclic(2), 2), (symmetric(3), 4)])
def test_class_counts(G, count):
    classes = subgroup_classes(G)
    assert len(classes) == count
    assert sum(len(c.all_conjugates) for c in classes) == len({s for c in classes
                                                                for s in c.all_conjugates})


def test_weyl_orders_d8():
    orders = sorted((c.order, c.weyl_order) for c in subgroup_classes(dihedral_square()))
    assert orders == [(1, 8), (2, 2), (2, 2), (2, 4), (4, 2), (4, 2), (4, 2), (8, 1)]


def test_longest_chains():
    assert longest_chain_length(dihedral_square()) == 4
    assert longest_chain_length(symmetric(4)) == 5
    assert longest_chain_length(PermGroup(3)) == 1


def test_subconjugators_parity():
    S4 = symmetric(4)
    classes = subgroup_classes(S4)
    c4 = next(c for c in classes if c.order == 4 and c.weyl_order == 2
              and any(len(set(g.cycles().split(")("))) == 1 and g.cycles().count(" ") == 3
                      for g in c.representative.elements))
    a4 = next(c for c in classes if c.order == 12)
    assert subconjugators(S4, c4.representative, a4.representative) == []
