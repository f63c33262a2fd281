"""
Small permutation groups: closure, subgroup classes, normalizers, Weyl groups.

Permutations act on the left: ``g(i) = g.images[i]`` and ``(g * h)(i) = g(h(i))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GroupError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise GroupError(f"{list(self.images)} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Perm":
        """Parse cycle notation on 0-indexed points, e.g. ``(0 1)(2 3)``."""
        img = list(range(degree))
        text = text.strip()
        if text in ("", "()", "e"):
            return cls(tuple(img))
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", text):
            raise GroupError(f"cannot parse cycle notation {text!r}")
        for cyc in re.findall(r"\(([^)]*)\)", text):
            pts = [int(x) for x in re.split(r"[\s,]+", cyc.strip()) if x]
            if len(set(pts)) != len(pts):
                raise GroupError(f"repeated point in cycle ({cyc})")
            for a, b in zip(pts, pts[1:] + pts[:1]):
                if not (0 <= a < degree):
                    raise GroupError(f"point {a} outside degree {degree}")
                img[a] = b
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def apply_mask(self, mask: int) -> int:
        out = 0
        i = 0
        while mask:
            if mask & 1:
                out |= 1 << self.images[i]
            mask >>= 1
            i += 1
        return out

    def cycles(self) -> str:
        seen, parts = set(), []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            parts.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(parts) or "()"

    def __repr__(self) -> str:
        return f"Perm{self.cycles()}"


def _close(degree: int, gens: Sequence[Perm], limit: int | None = None) -> frozenset[Perm]:
    ident = Perm.identity(degree)
    els = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = g * a
                if b not in els:
                    els.add(b)
                    new.append(b)
                    if limit is not None and len(els) > limit:
                        raise GroupError(f"group order exceeds the bound {limit}")
        frontier = new
    return frozenset(els)


class PermGroup:
    """Finite permutation group; elements are enumerated on first use."""

    def __init__(self, degree: int, generators: Iterable[Perm] = (),
                 elements: Iterable[Perm] | None = None, order: int | None = None):
        self.degree = degree
        gens = tuple(sorted(set(generators)))
        for g in gens:
            if g.degree != degree:
                raise GroupError(f"generator {g} has degree {g.degree}, expected {degree}")
        self.generators = tuple(g for g in gens if not g.is_identity())
        if elements is not None:
            self.__dict__["element_set"] = frozenset(elements)
        self._order = order

    @cached_property
    def element_set(self) -> frozenset[Perm]:
        return _close(self.degree, self.generators)

    @cached_property
    def elements(self) -> tuple[Perm, ...]:
        return tuple(sorted(self.element_set))

    @property
    def order(self) -> int:
        if self._order is not None:
            return self._order
        return len(self.element_set)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, g: Perm) -> bool:
        return g in self.element_set

    def __iter__(self):
        return iter(self.elements)

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self.element_set <= other.element_set

    def __eq__(self, other) -> bool:
        return (isinstance(other, PermGroup) and self.degree == other.degree
                and self.element_set == other.element_set)

    def __hash__(self):
        return hash((self.degree, self.element_set))

    def conjugate(self, g: Perm) -> frozenset[Perm]:
        """g H g^-1 as an element set."""
        gi = g.inverse()
        return frozenset(g * h * gi for h in self.element_set)

    def __repr__(self) -> str:
        gens = ",".join(g.cycles() for g in self.generators) or "e"
        return f"PermGroup(degree={self.degree}, order={self.order}, gens={gens})"

    def to_json(self) -> dict:
        return {"degree": self.degree, "generators": [list(g.images) for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> "PermGroup":
        try:
            degree = int(data["degree"])
            gens = [Perm(tuple(int(x) for x in g)) for g in data.get("generators", [])]
        except KeyError as e:
            raise GroupError(f"group JSON is missing key {e}") from None
        return closure(degree, gens)


def closure(degree: int, gens: Iterable[Perm]) -> PermGroup:
    gens = [g if isinstance(g, Perm) else Perm(tuple(g)) for g in gens]
    return PermGroup(degree, gens)


def subgroup_from_elements(degree: int, elements: Iterable[Perm]) -> PermGroup:
    els = frozenset(elements)
    return PermGroup(degree, _small_generating_set(els, degree), elements=els)


def _small_generating_set(els: frozenset[Perm], degree: int) -> list[Perm]:
    gens: list[Perm] = []
    got = frozenset([Perm.identity(degree)])
    for g in sorted(els):
        if g not in got:
            gens.append(g)
            got = _close(degree, gens)
            if got == els:
                break
    return gens


def parse_group(text: str, degree: int) -> PermGroup:
    """``gens=(0 1 2 3),(0 1)(2 3)``; also accepts ``sym``/``trivial`` shorthands."""
    text = text.strip()
    if text in ("trivial", "e"):
        return PermGroup(degree)
    if text in ("sym", "full"):
        gens = [Perm.from_cycles(f"(0 {i})", degree) for i in range(1, degree)]
        return closure(degree, gens)
    if text.startswith("gens="):
        text = text[5:]
    parts = [p for p in re.split(r"\)\s*,\s*\(", text) if p.strip()]
    gens = []
    for i, p in enumerate(parts):
        if len(parts) > 1:
            p = ("" if p.startswith("(") else "(") + p + ("" if p.endswith(")") else ")")
        gens.append(Perm.from_cycles(p, degree))
    return closure(degree, gens)


# ---------------------------------------------------------------------------
# subgroups


@dataclass
class SubgroupClass:
    representative: PermGroup
    all_conjugates: list[frozenset[Perm]]
    normalizer: PermGroup
    weyl_order: int
    weyl_coset_reps: list[Perm] = field(repr=False)

    @property
    def order(self) -> int:
        return self.representative.order

    def label(self) -> str:
        gens = ",".join(g.cycles() for g in self.representative.generators)
        return f"<{gens}>" if gens else "{e}"


def _canon_key(els: frozenset[Perm]) -> tuple:
    return tuple(g.images for g in sorted(els))


def all_subgroups(G: PermGroup, bound: int = 120) -> list[frozenset[Perm]]:
    """Every subgroup, found by closing the cyclic subgroups under joins."""
    if G.order > bound:
        raise GroupError(f"group order {G.order} exceeds the subgroup enumeration bound {bound}")
    n = G.degree
    found: set[frozenset[Perm]] = set()
    for g in G.elements:
        found.add(_close(n, [g]))
    frontier = list(found)
    while frontier:
        new = []
        current = list(found)
        for A in frontier:
            for B in current:
                if A <= B or B <= A:
                    continue
                J = _close(n, list(A | B))
                if J not in found:
                    found.add(J)
                    new.append(J)
        frontier = new
    return sorted(found, key=lambda s: (len(s), _canon_key(s)))


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    Hs = H.element_set
    els = [g for g in G.elements if H.conjugate(g) == Hs]
    return subgroup_from_elements(G.degree, els)


def left_coset_reps(N: PermGroup, H: PermGroup) -> list[Perm]:
    """Minimal representative of each left coset gH inside N, sorted; identity first."""
    seen: set[Perm] = set()
    reps = []
    for g in N.elements:
        if g in seen:
            continue
        coset = {g * h for h in H.element_set}
        seen |= coset
        reps.append(min(coset))
    return sorted(reps)


def weyl(G: PermGroup, H: PermGroup) -> tuple[PermGroup, list[Perm]]:
    if not H.is_subgroup_of(G):
        raise GroupError("H is not a subgroup of G")
    N = normalizer(G, H)
    return N, left_coset_reps(N, H)


def subgroup_classes(G: PermGroup, bound: int = 120) -> list[SubgroupClass]:
    """One entry per conjugacy class of subgroups, ordered by (order, minimal element set)."""
    subs = all_subgroups(G, bound)
    classes: list[SubgroupClass] = []
    assigned: set[frozenset[Perm]] = set()
    for S in subs:
        if S in assigned:
            continue
        rep = subgroup_from_elements(G.degree, S)
        conj = sorted({rep.conjugate(g) for g in G.elements}, key=_canon_key)
        assigned.update(conj)
        # the chosen representative is the lexicographically least conjugate
        rep = subgroup_from_elements(G.degree, conj[0])
        N, reps = weyl(G, rep)
        classes.append(SubgroupClass(rep, conj, N, N.order // rep.order, reps))
    classes.sort(key=lambda c: (c.order, _canon_key(c.representative.element_set)))
    return classes


def subconjugators(G: PermGroup, H: PermGroup, K: PermGroup) -> list[Perm]:
    """Minimal coset representatives g of gK with g^-1 H g contained in K."""
    Ks = K.element_set
    out, seen = [], set()
    for g in G.elements:
        if g in seen:
            continue
        coset = {g * k for k in Ks}
        seen |= coset
        gi = g.inverse()
        if all(gi * h * g in Ks for h in H.generators):
            out.append(min(coset))
    return sorted(out)


def longest_chain_length(G: PermGroup, bound: int = 120) -> int:
    """Largest number of subgroups in a strictly increasing chain {e} < ... < G."""
    subs = all_subgroups(G, bound)
    best = {}
    for S in subs:  # sorted by order, so proper subgroups come first
        best[S] = 1 + max((best[T] for T in best if len(T) < len(S) and T < S), default=0)
    return best[G.element_set]


def find_class(classes: Sequence[SubgroupClass], elements: frozenset[Perm]) -> int:
    for i, c in enumerate(classes):
        if len(elements) == c.order and elements in c.all_conjugates:
            return i
    raise GroupError("subgroup not found among the classes")


# standard groups on small point sets

def cyclic(n: int, degree: int | None = None) -> PermGroup:
    degree = degree or n
    return closure(degree, [Perm(tuple([*range(1, n), 0] + list(range(n, degree))))])


def dihedral_square() -> PermGroup:
    """D8 = <(0 1 2 3), (0 1)(2 3)> acting on the corners of a square."""
    return closure(4, [Perm.from_cycles("(0 1 2 3)", 4), Perm.from_cycles("(0 1)(2 3)", 4)])


def dihedral(n: int) -> PermGroup:
    """Symmetries of the n-gon, order 2n."""
    rot = Perm(tuple((i + 1) % n for i in range(n)))
    ref = Perm(tuple((-i) % n for i in range(n)))
    return closure(n, [rot, ref])


def symmetric(n: int) -> PermGroup:
    if n <= 1:
        return PermGroup(max(n, 0))
    gens = [Perm.from_cycles("(0 1)", n)]
    if n > 2:
        gens.append(Perm(tuple([*range(1, n), 0])))
    return closure(n, gens)
