"""
The reduced orbit category of a finite permutation group, fully materialized.

Objects are the subgroup classes of :func:`groups.subgroup_classes`.  A
morphism G/H_i -> G/H_j sending eH_i to gH_j is stored as the key
``(i, j, g)`` with g the least element of the coset gH_j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .groups import Perm, PermGroup, SubgroupClass, subconjugators, subgroup_classes

Morphism = tuple  # (src, dst, Perm)


class OrbitCategory:
    def __init__(self, group: PermGroup, bound: int = 120):
        self.group = group
        self.objects: list[SubgroupClass] = subgroup_classes(group, bound)
        self.hom: dict[tuple[int, int], list[Perm]] = {}
        n = len(self.objects)
        for i in range(n):
            for j in range(n):
                Hi = self.objects[i].representative
                Hj = self.objects[j].representative
                if Hi.order > Hj.order or Hj.order % Hi.order:
                    self.hom[i, j] = []
                else:
                    self.hom[i, j] = subconjugators(group, Hi, Hj)

    def __len__(self) -> int:
        return len(self.objects)

    def canon(self, j: int, g: Perm) -> Perm:
        """Least element of the coset g H_j."""
        return min(g * h for h in self.objects[j].representative.element_set)

    def morphisms(self, src: int | None = None, dst: int | None = None):
        for (i, j), reps in self.hom.items():
            if (src is None or i == src) and (dst is None or j == dst):
                for g in reps:
                    yield (i, j, g)

    @cached_property
    def all_morphisms(self) -> list[Morphism]:
        return sorted(self.morphisms(), key=lambda f: (f[0], f[1], f[2]))

    def identity(self, i: int) -> Morphism:
        return (i, i, Perm.identity(self.group.degree))

    def is_identity(self, f: Morphism) -> bool:
        return f[0] == f[1] and f[2] in self.objects[f[1]].representative

    def compose(self, second: Morphism, first: Morphism) -> Morphism:
        """second o first, where first: G/H_i -> G/H_j and second: G/H_j -> G/H_k."""
        i, j, g = first
        j2, k, h = second
        if j != j2:
            raise ValueError(f"morphisms are not composable: {first} then {second}")
        return (i, k, self.canon(k, g * h))

    @cached_property
    def composition_table(self) -> dict[tuple[Morphism, Morphism], Morphism]:
        table = {}
        for f in self.all_morphisms:
            for h in self.morphisms(src=f[1]):
                table[h, f] = self.compose(h, f)
        return table

    def weyl_endomorphism(self, i: int, n: Perm) -> Morphism:
        """The automorphism eH ↦ nH of G/H for n in the normalizer of H."""
        return (i, i, self.canon(i, n))

    def algebra_dimension(self) -> int:
        return sum(len(v) for v in self.hom.values())

    def hom_size(self, i: int, j: int) -> int:
        return len(self.hom[i, j])

    def labels(self) -> list[str]:
        return [c.label() for c in self.objects]

    def to_json(self) -> dict:
        n = len(self)
        return {
            "group": self.group.to_json(),
            "objects": [
                {"index": i, "order": c.order, "generators": [list(g.images) for g in
                                                               c.representative.generators],
                 "label": c.label(), "weyl_order": c.weyl_order,
                 "conjugates": len(c.all_conjugates)}
                for i, c in enumerate(self.objects)
            ],
            "hom_sizes": [[self.hom_size(i, j) for j in range(n)] for i in range(n)],
            "algebra_dimension": self.algebra_dimension(),
        }

    def as_quiver(self) -> "Quiver":
        """Irreducible morphisms between distinct objects plus one loop per Weyl generator.

        For display only; the category itself is kept with all morphisms.
        """
        n = len(self)
        edges = []
        for i in range(n):
            for j in range(n):
                if i == j or not self.hom[i, j]:
                    continue
                through = any(self.hom[i, k] and self.hom[k, j] for k in range(n) if k not in (i, j))
                if not through:
                    edges.extend((i, j) for _ in self.hom[i, j])
            gens = _weyl_generators(self, i)
            edges.extend((i, i) for _ in gens)
        return Quiver(n, edges)


def _weyl_generators(C: OrbitCategory, i: int) -> list[Perm]:
    reps = [g for g in C.hom[i, i] if not C.is_identity((i, i, g))]
    gens, got = [], {C.canon(i, Perm.identity(C.group.degree))}
    for g in reps:
        if g in got:
            continue
        gens.append(g)
        frontier = list(got)
        while frontier:
            new = []
            for a in frontier:
                for b in gens:
                    c = C.canon(i, a * b)
                    if c not in got:
                        got.add(c)
                        new.append(c)
            frontier = new
    return gens


def build_orbit_category(G: PermGroup, bound: int = 120) -> OrbitCategory:
    return OrbitCategory(G, bound)


def category_algebra_dimension(C: OrbitCategory) -> int:
    return C.algebra_dimension()


@dataclass(frozen=True)
class Quiver:
    vertices: int
    edges: list[tuple[int, int]]

    def __post_init__(self):
        for s, t in self.edges:
            if not (0 <= s < self.vertices and 0 <= t < self.vertices):
                raise ValueError(f"edge ({s}, {t}) has an endpoint out of range")


def linear_quiver(n: int) -> Quiver:
    """A_n: 0 -> 1 -> ... -> n-1."""
    return Quiver(n, [(i, i + 1) for i in range(n - 1)])


def free_path_algebra_dimension(Q: Quiver) -> int | float:
    """Number of paths, trivial ones included; ``math.inf`` if Q has an oriented cycle."""
    out: dict[int, list[int]] = {v: [] for v in range(Q.vertices)}
    for s, t in Q.edges:
        out[s].append(t)
    state = [0] * Q.vertices  # 0 new, 1 on stack, 2 done
    order: list[int] = []

    def visit(v):
        state[v] = 1
        for w in out[v]:
            if state[w] == 1:
                return True
            if state[w] == 0 and visit(w):
                return True
        state[v] = 2
        order.append(v)
        return False

    for v in range(Q.vertices):
        if state[v] == 0 and visit(v):
            return math.inf
    paths_from = {}
    for v in order:  # reverse topological: successors first
        paths_from[v] = 1 + sum(paths_from[w] for w in out[v])
    return sum(paths_from.values())
