"""
The real moment-angle complex Z(K; (D^1, S^0)) as an order complex.

A vertex is a subset S of the vertex set of K (the cube corner whose
coordinates are +1 on S and -1 elsewhere).  A d-cell is a chain
S_0 < S_1 < ... < S_d whose changing set S_d - S_0 is a face of K.
Coordinate permutations act by g.S and preserve inclusion, so they act
simplicially without orientation signs, and fixed-point sets are literal
subcomplexes.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import cached_property
from typing import Callable, Sequence

from .groups import Perm, PermGroup
from .qlinalg import ONE, ZERO, Echelon, MatrixQ, sparse_rank
from .simplicial import SimplicialComplex

Cell = tuple  # tuple of bitmasks, strictly increasing under inclusion

DEFAULT_MAX_VERTICES = 8


class ZComplexError(ValueError):
    pass


def _max_vertices(override: int | None) -> int:
    if override is not None:
        return override
    env = os.environ.get("ZK_MAX_VERTICES")
    return int(env) if env else DEFAULT_MAX_VERTICES


class ChainComplexQ:
    """Finite simplicial chain complex with rational coefficients.

    ``boundary[n][i]`` is the boundary of the i-th n-cell as a sparse
    dict {index of (n-1)-cell: +-1}.
    """

    def __init__(self, cells_by_dim: Sequence[Sequence[Cell]]):
        dims = [sorted(cs) for cs in cells_by_dim]
        while dims and not dims[-1]:
            dims.pop()
        self.cells_by_dim: list[list[Cell]] = dims
        self.index: list[dict[Cell, int]] = [{c: i for i, c in enumerate(cs)} for cs in dims]
        self.boundary: list[list[dict[int, int]]] = [[{} for _ in dims[0]]] if dims else []
        for n in range(1, len(dims)):
            lower = self.index[n - 1]
            col = []
            for c in dims[n]:
                b = {}
                for j in range(len(c)):
                    face = c[:j] + c[j + 1:]
                    try:
                        b[lower[face]] = -1 if j % 2 else 1
                    except KeyError:
                        raise ZComplexError(f"face {face} of {c} missing from the complex") from None
                col.append(b)
            self.boundary.append(col)

    @property
    def top_dim(self) -> int:
        return len(self.cells_by_dim) - 1

    def count(self, n: int) -> int:
        return len(self.cells_by_dim[n]) if 0 <= n < len(self.cells_by_dim) else 0

    def cells(self, n: int) -> list[Cell]:
        return self.cells_by_dim[n] if 0 <= n < len(self.cells_by_dim) else []

    @property
    def num_cells(self) -> int:
        return sum(len(c) for c in self.cells_by_dim)

    def boundary_matrix(self, n: int) -> MatrixQ:
        """Dense matrix of d_n : C_n -> C_{n-1} (rows: (n-1)-cells, columns: n-cells)."""
        rows, cols = self.count(n - 1), self.count(n)
        data = [[ZERO] * cols for _ in range(rows)]
        if n >= 1:
            for j, b in enumerate(self.boundary[n]):
                for i, s in b.items():
                    data[i][j] = Fraction(s)
        return MatrixQ(rows, cols, data)

    def boundary_rows(self, n: int) -> list[dict]:
        """Rows of d_n as sparse dicts over n-cell indices."""
        rows = [dict() for _ in range(self.count(n - 1))]
        if n >= 1:
            for j, b in enumerate(self.boundary[n]):
                for i, s in b.items():
                    rows[i][j] = Fraction(s)
        return rows

    def boundary_rank(self, n: int) -> int:
        if n < 1 or n > self.top_dim:
            return 0
        cols = ({i: Fraction(s) for i, s in b.items()} for b in self.boundary[n])
        return sparse_rank(cols)

    def check_dd(self) -> bool:
        for n in range(2, self.top_dim + 1):
            for b in self.boundary[n]:
                acc: dict[int, int] = {}
                for i, s in b.items():
                    for k, t in self.boundary[n - 1][i].items():
                        acc[k] = acc.get(k, 0) + s * t
                if any(acc.values()):
                    return False
        return True

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * len(c) for n, c in enumerate(self.cells_by_dim))

    def subcomplex(self, keep: Callable[[Cell], bool]) -> "ChainComplexQ":
        return ChainComplexQ([[c for c in cs if keep(c)] for cs in self.cells_by_dim])

    @cached_property
    def homology_basis(self) -> "HomologyBasis":
        return HomologyBasis(self)


def triangulate(K: SimplicialComplex, max_vertices: int | None = None) -> ChainComplexQ:
    m = K.num_vertices
    bound = _max_vertices(max_vertices)
    if m > bound:
        raise ZComplexError(f"triangulate is limited to {bound} vertices (got {m}); "
                            "raise max_vertices or ZK_MAX_VERTICES to override")
    faces = sorted(K.face_masks)
    full = (1 << m) - 1
    cells: list[list[Cell]] = [[] for _ in range(K.dimension + 2)]

    def extend(chain: list[int], s0: int, change: int):
        cells[len(chain) - 1].append(tuple(chain))
        for f in faces:
            if f & s0 or f == change or f & change != change:
                continue
            chain.append(s0 | f)
            extend(chain, s0, f)
            chain.pop()

    for s0 in range(full + 1):
        extend([s0], s0, 0)
    return ChainComplexQ(cells)


def invariant_masks(m: int, H: PermGroup) -> frozenset[int]:
    return frozenset(s for s in range(1 << m) if all(g.apply_mask(s) == s for g in H.generators))


def fixed_subcomplex(K: SimplicialComplex, H: PermGroup,
                     ambient: ChainComplexQ | None = None,
                     max_vertices: int | None = None) -> ChainComplexQ:
    """Chains all of whose subsets are H-invariant: the fixed set Z(K)^H."""
    from .action import validate_action

    validate_action(K, H)
    if ambient is None:
        ambient = triangulate(K, max_vertices)
    inv = invariant_masks(K.num_vertices, H)
    return ambient.subcomplex(lambda c: all(s in inv for s in c))


def betti_numbers(C: ChainComplexQ) -> list[int]:
    ranks = [C.boundary_rank(n) for n in range(C.top_dim + 2)]
    return [C.count(n) - ranks[n] - ranks[n + 1] for n in range(C.top_dim + 1)]


def _sparse(b: dict) -> dict:
    return {i: Fraction(s) for i, s in b.items()}


class _DegreeHomology:
    """Cycle representatives for H_n plus the data to read off coordinates."""

    def __init__(self, C: ChainComplexQ, n: int):
        self.n = n
        N = C.count(n)
        self.size = N
        # boundaries B_n, fully reduced so that reduction is a linear projection
        self.bounds = Echelon(N)
        if n + 1 <= C.top_dim:
            for b in C.boundary[n + 1]:
                self.bounds.add(_sparse(b))
        # cycles Z_n from the kernel of d_n
        if n == 0:
            cycles = [{i: ONE} for i in range(N)]
        else:
            ech = Echelon(N)
            for row in C.boundary_rows(n):
                if row:
                    ech.add(row)
            cycles = []
            for f in range(N):
                if f in ech.rows:
                    continue
                v = {f: ONE}
                for p, r in ech.rows.items():
                    c = r.get(f)
                    if c:
                        v[p] = -c
                cycles.append(v)
        self.classes: list[dict] = []
        self.residues = Echelon(N, track=0)
        self._slot: dict[int, int] = {}  # insertion index -> class index
        for z in cycles:
            r = self.bounds.reduce(z)
            if not r:
                continue
            idx = self.residues._inserted
            if self.residues.add(r):
                self._slot[idx] = len(self.classes)
                self.classes.append(z)

    @property
    def betti(self) -> int:
        return len(self.classes)

    def coordinates(self, z: dict) -> list[Fraction]:
        r = self.bounds.reduce(z)
        coords = [ZERO] * self.betti
        combo: dict = {}
        rest = self.residues.reduce(r, combo)
        if rest:
            raise ZComplexError("chain is not a cycle of this complex")
        # reduce() subtracted sum c_p * row_p, and row_p = sum combos[p][k] * residue_k
        for k, c in combo.items():
            coords[self._slot[k]] = -c
        return coords


class HomologyBasis:
    """Lazily computed homology bases, one degree at a time."""

    def __init__(self, C: ChainComplexQ):
        self.complex = C
        self._deg: dict[int, _DegreeHomology] = {}

    def degree(self, n: int) -> _DegreeHomology:
        if n not in self._deg:
            self._deg[n] = _DegreeHomology(self.complex, n)
        return self._deg[n]

    def betti(self, n: int) -> int:
        if n < 0 or n > self.complex.top_dim:
            return 0
        return self.degree(n).betti

    def classes(self, n: int) -> list[dict]:
        if n < 0 or n > self.complex.top_dim:
            return []
        return self.degree(n).classes

    def coordinates(self, n: int, cycle: dict) -> list[Fraction]:
        return self.degree(n).coordinates(cycle)


def homology(C: ChainComplexQ, n: int) -> list[dict]:
    """Cycle representatives (sparse, in cell coordinates) of a basis of H_n(C; Q)."""
    if n < 0:
        raise ValueError("homological degree must be >= 0")
    return C.homology_basis.classes(n)


def translation_cell_map(g: Perm) -> Callable[[Cell], Cell]:
    def f(c: Cell) -> Cell:
        return tuple(g.apply_mask(s) for s in c)
    return f


def identity_cell_map(c: Cell) -> Cell:
    return c


def chain_map(source: ChainComplexQ, target: ChainComplexQ,
              cell_map: Callable[[Cell], Cell], n: int, z: dict) -> dict:
    out: dict[int, Fraction] = {}
    cells, index = source.cells(n), target.index[n] if n <= target.top_dim else {}
    for i, a in z.items():
        img = cell_map(cells[i])
        if len(set(img)) != len(img):
            raise ZComplexError(f"cell map collapses {cells[i]}")
        j = index.get(img)
        if j is None:
            raise ZComplexError(f"image {img} of cell {cells[i]} is not in the target")
        v = out.get(j, ZERO) + a
        if v:
            out[j] = v
        else:
            out.pop(j, None)
    return out


def induced_map(source: ChainComplexQ, target: ChainComplexQ,
                cell_map: Callable[[Cell], Cell], n: int) -> MatrixQ:
    """Matrix of H_n(source) -> H_n(target) in the stored homology bases.

    ``cell_map`` must be injective on the vertices of each cell and order
    preserving, so it carries oriented simplices to oriented simplices.
    """
    src = source.homology_basis
    tgt = target.homology_basis
    cols = []
    for z in src.classes(n):
        w = chain_map(source, target, cell_map, n, z)
        cols.append(tgt.coordinates(n, w))
    return MatrixQ.from_columns(cols, tgt.betti(n))
