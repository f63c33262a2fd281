"""Abstract simplicial complexes on a fixed vertex set, ghost vertices allowed."""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class ComplexError(ValueError):
    pass


def mask_of(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _face_key(face: tuple[int, ...]):
    return (len(face), face)


class SimplicialComplex:
    """Downward-closed family of subsets of {0, ..., num_vertices - 1}.

    The empty face is always present. Vertices that are not faces are ghost
    vertices: they take part in the polyhedral product as an A-factor.
    """

    def __init__(self, num_vertices: int, faces: Iterable[Iterable[int]] = ()):
        if num_vertices < 0:
            raise ComplexError("num_vertices must be non-negative")
        self.num_vertices = num_vertices
        masks = {0}
        for f in faces:
            f = tuple(f)
            for v in f:
                if not (0 <= v < num_vertices):
                    raise ComplexError(f"vertex {v} out of range for {num_vertices} vertices")
            masks.add(mask_of(f))
        # downward closure
        todo = list(masks)
        while todo:
            m = todo.pop()
            for v in members(m):
                s = m & ~(1 << v)
                if s not in masks:
                    masks.add(s)
                    todo.append(s)
        self.face_masks: frozenset[int] = frozenset(masks)

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted((members(m) for m in self.face_masks), key=_face_key))

    @cached_property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        ms = self.face_masks
        out = [f for f in self.faces
               if not any((mask_of(f) | (1 << v)) in ms for v in range(self.num_vertices)
                          if v not in f)]
        return tuple(f for f in out if f)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Vertices of K proper (singletons that are faces); ghosts excluded."""
        return tuple(v for v in range(self.num_vertices) if (1 << v) in self.face_masks)

    @property
    def ghost_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.num_vertices) if (1 << v) not in self.face_masks)

    def is_face(self, face: Iterable[int]) -> bool:
        return mask_of(face) in self.face_masks

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def f_vector(self) -> tuple[int, ...]:
        """Number of faces with k+1 vertices, k = 0 .. dim (empty face excluded)."""
        counts = [0] * (self.dimension + 1)
        for f in self.faces:
            if f:
                counts[len(f) - 1] += 1
        return tuple(counts)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimplicialComplex) and self.num_vertices == other.num_vertices
                and self.face_masks == other.face_masks)

    def __hash__(self):
        return hash((self.num_vertices, self.face_masks))

    def __repr__(self) -> str:
        return f"SimplicialComplex({self.num_vertices}, facets={list(map(list, self.facets))})"

    def to_json(self) -> dict:
        return {"vertices": self.num_vertices, "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        try:
            return cls(int(data["vertices"]), data.get("facets", []))
        except KeyError as e:
            raise ComplexError(f"complex JSON is missing key {e}") from None


def make_complex(num_vertices: int, generators: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex(num_vertices, generators)


def simplex(m: int) -> SimplicialComplex:
    """Full simplex on m+1 vertices."""
    if m < 0:
        raise ComplexError("simplex dimension must be >= 0")
    return SimplicialComplex(m + 1, [range(m + 1)])


def boundary(m: int) -> SimplicialComplex:
    """Boundary of the m-simplex: every proper subset of {0..m}."""
    if m < 1:
        raise ComplexError("boundary(m) needs m >= 1; use ghost vertices for the empty complex")
    return SimplicialComplex(m + 1, combinations(range(m + 1), m))


def ngon(n: int) -> SimplicialComplex:
    if n < 3:
        raise ComplexError("an n-gon needs n >= 3")
    return SimplicialComplex(n, [(i, (i + 1) % n) for i in range(n)])


def full_subcomplex(K: SimplicialComplex, I: Sequence[int]) -> SimplicialComplex:
    """{sigma & I : sigma in K}, re-indexed over sorted(I)."""
    I = sorted(set(I))
    for v in I:
        if not 0 <= v < K.num_vertices:
            raise ComplexError(f"vertex {v} not in the vertex set")
    pos = {v: i for i, v in enumerate(I)}
    faces = [[pos[v] for v in f if v in pos] for f in K.faces]
    return SimplicialComplex(len(I), faces)


# complexes used as worked examples

def star() -> SimplicialComplex:
    """Vertex 0 joined to each of 1, 2, 3."""
    return SimplicialComplex(4, [(0, 1), (0, 2), (0, 3)])


def trilinder() -> SimplicialComplex:
    """Two filled triangles {0,1,2}, {3,4,5} joined by the edges 03, 14, 25."""
    return SimplicialComplex(6, [(0, 1, 2), (3, 4, 5), (0, 3), (1, 4), (2, 5)])


def e_tree() -> SimplicialComplex:
    """Dynkin diagram E7 as a tree: chain 0-1-2-3-4-5 with a branch 6 off vertex 2."""
    return SimplicialComplex(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)])


def parse_complex(spec: str) -> SimplicialComplex:
    """``boundary:m``, ``simplex:m``, ``ngon:n`` or one of the named examples."""
    name, _, arg = spec.partition(":")
    builders = {"boundary": boundary, "simplex": simplex, "ngon": ngon}
    named = {"star": star, "trilinder": trilinder, "e7": e_tree}
    if name in builders:
        try:
            return builders[name](int(arg))
        except ValueError as e:
            raise ComplexError(f"bad complex specifier {spec!r}: {e}") from None
    if name in named and not arg:
        return named[name]()
    raise ComplexError(f"unknown complex specifier {spec!r}")
