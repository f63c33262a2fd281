"""Permutation actions on simplicial complexes, strong quotients and fixed-point shapes."""

from __future__ import annotations

from dataclasses import dataclass

from .groups import GroupError, Perm, PermGroup, closure
from .simplicial import SimplicialComplex, mask_of, members


class ActionError(ValueError):
    def __init__(self, message: str, witnesses=()):
        super().__init__(message)
        self.witnesses = list(witnesses)


@dataclass(frozen=True)
class ComplexAction:
    complex: SimplicialComplex
    group: PermGroup


def face_violations(K: SimplicialComplex, G: PermGroup) -> list[tuple[Perm, tuple[int, ...]]]:
    bad = []
    for g in G.generators:
        for m in sorted(K.face_masks):
            if g.apply_mask(m) not in K.face_masks:
                bad.append((g, members(m)))
    return bad


def validate_action(K: SimplicialComplex, G: PermGroup) -> ComplexAction:
    if G.degree != K.num_vertices:
        raise ActionError(f"group degree {G.degree} != number of vertices {K.num_vertices}")
    bad = face_violations(K, G)
    if bad:
        g, face = bad[0]
        img = tuple(sorted(g(v) for v in face))
        raise ActionError(f"face not preserved: {g.cycles()} sends {list(face)} to {list(img)}",
                          bad)
    return ComplexAction(K, G)


def _degree_profile(K: SimplicialComplex, v: int) -> tuple[int, ...]:
    counts = [0] * (K.num_vertices + 1)
    for m in K.face_masks:
        if m >> v & 1:
            counts[bin(m).count("1")] += 1
    return tuple(counts)


def _extend(K: SimplicialComplex, fixed: dict[int, int], profile) -> dict[int, int] | None:
    """Backtracking search for one automorphism extending the partial map ``fixed``."""
    n = K.num_vertices
    faces = K.face_masks
    # faces grouped by their largest vertex, checked once that vertex is assigned
    by_top: dict[int, list[int]] = {}
    for m in faces:
        if m:
            by_top.setdefault(m.bit_length() - 1, []).append(m)

    order = list(range(n))
    img = [-1] * n
    used = [False] * n

    def ok(upto: int) -> bool:
        for m in by_top.get(upto, ()):
            t = 0
            for v in members(m):
                t |= 1 << img[v]
            if t not in faces:
                return False
        return True

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        choices = [fixed[v]] if v in fixed else range(n)
        for w in choices:
            if used[w] or profile[v] != profile[w]:
                continue
            img[v], used[w] = w, True
            if ok(v) and rec(i + 1):
                return True
            img[v], used[w] = -1, False
        return False

    return {v: img[v] for v in range(n)} if rec(0) else None


def aut_group(K: SimplicialComplex, max_vertices: int = 10) -> PermGroup:
    """Full automorphism group, via a point-stabilizer chain of extension searches."""
    n = K.num_vertices
    if n > max_vertices:
        raise ActionError(f"aut_group is limited to {max_vertices} vertices (got {n})")
    profile = [_degree_profile(K, v) for v in range(n)]
    gens: list[Perm] = []
    order = 1
    base: dict[int, int] = {}
    for i in range(n):
        orbit = 0
        for j in range(n):
            found = _extend(K, {**base, i: j}, profile)
            if found is not None:
                orbit += 1
                p = Perm(tuple(found[v] for v in range(n)))
                if not p.is_identity():
                    gens.append(p)
        order *= orbit
        base[i] = i
    return PermGroup(n, gens, order=order)


@dataclass
class StrongQuotient:
    orbits: list[tuple[int, ...]]
    face_orbit_indices: list[int]
    quotient: SimplicialComplex
    k: int
    vertex_map: list[int]

    def to_json(self) -> dict:
        return {
            "orbits": [list(o) for o in self.orbits],
            "face_orbits": self.face_orbit_indices,
            "quotient": self.quotient.to_json(),
            "k": self.k,
            "vertex_map": self.vertex_map,
        }


def vertex_orbits(n: int, gens) -> list[tuple[int, ...]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i in range(n):
            a, b = find(i), find(g(i))
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted((tuple(v) for v in groups.values()), key=lambda o: o[0])


def strong_quotient(action: ComplexAction) -> StrongQuotient:
    K, G = action.complex, action.group
    orbits = vertex_orbits(K.num_vertices, G.generators)
    vertex_map = [0] * K.num_vertices
    for i, o in enumerate(orbits):
        for v in o:
            vertex_map[v] = i
    face_orbits = [i for i, o in enumerate(orbits) if mask_of(o) in K.face_masks]
    new_index = {o: j for j, o in enumerate(face_orbits)}
    orbit_masks = [mask_of(o) for o in orbits]
    qfaces = []
    for m in K.face_masks:
        hit = {vertex_map[v] for v in members(m)}
        if all(orbit_masks[o] & m == orbit_masks[o] for o in hit):
            qfaces.append([new_index[o] for o in sorted(hit)])
    quotient = SimplicialComplex(len(face_orbits), qfaces)
    return StrongQuotient(orbits, face_orbits, quotient,
                          len(orbits) - len(face_orbits), vertex_map)


@dataclass
class FixedPointShape:
    quotient: StrongQuotient
    description: str
    sphere_dim: int | None

    def to_json(self) -> dict:
        out = {"description": self.description, **self.quotient.to_json()}
        if self.sphere_dim is not None:
            out["sphere"] = f"S^{self.sphere_dim}"
        return out


def is_simplex_boundary(K: SimplicialComplex) -> bool:
    n = K.num_vertices
    return n >= 2 and len(K.face_masks) == 2 ** n - 1 and ((1 << n) - 1) not in K.face_masks


def fixed_point_shape(action: ComplexAction, H: PermGroup) -> FixedPointShape:
    if not H.is_subgroup_of(action.group):
        raise GroupError("H is not a subgroup of the acting group")
    sq = strong_quotient(ComplexAction(action.complex, H))
    m = sq.quotient.num_vertices
    desc = f"Z(K//H;(X,A)) x A^{sq.k}  with K//H on {m} vertices"
    sphere = None
    if is_simplex_boundary(action.complex):
        r = len(sq.orbits)
        sphere = r - 1 if r > 1 else 0
    return FixedPointShape(sq, desc, sphere)


def restrict(action: ComplexAction, gens) -> ComplexAction:
    H = closure(action.group.degree, gens)
    if not H.is_subgroup_of(action.group):
        raise GroupError("generators do not lie in the acting group")
    return ComplexAction(action.complex, H)
