"""
Exact linear algebra over the rationals.

Everything is built on :class:`fractions.Fraction`.  Matrices are dense and
immutable from the caller's point of view; elimination runs on sparse row
dictionaries internally because the boundary matrices fed in from
:mod:`zkbredon.zcomplex` are very sparse.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


def q(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational (floats are refused)")


def q_str(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class MatrixQ:
    """Dense rational matrix, stored row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence] | None = None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = tuple(tuple(ZERO for _ in range(cols)) for _ in range(rows))
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ValueError(f"entries do not match shape {rows}x{cols}")
            self.data = tuple(tuple(q(x) for x in r) for r in data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "MatrixQ":
        rows = list(rows)
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "MatrixQ":
        columns = list(columns)
        return cls(rows, len(columns), [[c[i] for c in columns] for i in range(rows)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatrixQ":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "MatrixQ":
        return cls(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> "MatrixQ":
        return MatrixQ(self.cols, self.rows, [self.column(j) for j in range(self.cols)])

    def __matmul__(self, other: "MatrixQ") -> "MatrixQ":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.columns()
        out = []
        for r in self.data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum((a * c[k] for k, a in nz), ZERO) for c in ocols])
        return MatrixQ(self.rows, other.cols, out)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} against {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(r, v) if a), ZERO) for r in self.data)

    def __add__(self, other: "MatrixQ") -> "MatrixQ":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return MatrixQ(self.rows, self.cols,
                       [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other: "MatrixQ") -> "MatrixQ":
        return self + other.scale(-1)

    def scale(self, c) -> "MatrixQ":
        c = q(c)
        return MatrixQ(self.rows, self.cols, [[c * a for a in r] for r in self.data])

    def __eq__(self, other) -> bool:
        return isinstance(other, MatrixQ) and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def is_zero(self) -> bool:
        return all(not a for r in self.data for a in r)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(q_str(a) for a in r) for r in self.data)
        return f"MatrixQ({self.rows}x{self.cols}: [{body}])"

    def to_json(self) -> list[list[str]]:
        return [[q_str(a) for a in r] for r in self.data]

    @classmethod
    def from_json(cls, rows: list, shape: tuple[int, int]) -> "MatrixQ":
        return cls(shape[0], shape[1], rows)


def hstack(blocks: Sequence[MatrixQ], rows: int) -> MatrixQ:
    data = [[] for _ in range(rows)]
    for b in blocks:
        if b.rows != rows:
            raise ValueError("row mismatch in hstack")
        for i in range(rows):
            data[i].extend(b.data[i])
    return MatrixQ(rows, sum(b.cols for b in blocks), data)


def vstack(blocks: Sequence[MatrixQ], cols: int) -> MatrixQ:
    data = []
    for b in blocks:
        if b.cols != cols:
            raise ValueError("column mismatch in vstack")
        data.extend(b.data)
    return MatrixQ(len(data), cols, data)


def block_diag(blocks: Sequence[MatrixQ]) -> MatrixQ:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    data = [[ZERO] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            data[r0 + i][c0:c0 + b.cols] = b.data[i]
        r0 += b.rows
        c0 += b.cols
    return MatrixQ(rows, cols, data)


# ---------------------------------------------------------------------------
# sparse elimination core

SparseRow = dict  # column index -> nonzero Fraction


def to_sparse(row: Iterable) -> SparseRow:
    return {j: q(a) for j, a in enumerate(row) if a}


def densify(row: SparseRow, n: int) -> list:
    out = [ZERO] * n
    for j, a in row.items():
        out[j] = a
    return out


def _axpy(target: SparseRow, c: Fraction, src: SparseRow) -> None:
    """target -= c * src, dropping cancellations."""
    for j, a in src.items():
        v = target.get(j, ZERO) - c * a
        if v:
            target[j] = v
        else:
            target.pop(j, None)


class Echelon:
    """Incrementally maintained reduced row echelon basis.

    Rows are kept fully reduced: every stored row is 1 at its pivot and 0 at
    every other stored pivot, so ``reduce`` is a linear projection whose
    kernel is exactly the span of the stored rows.
    """

    def __init__(self, ncols: int, track: int | None = None):
        self.ncols = ncols
        self.rows: dict[int, SparseRow] = {}
        # optional bookkeeping: coefficient of each inserted vector in each row
        self.track = track
        self.combos: dict[int, SparseRow] = {}
        self._inserted = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def reduce(self, v: SparseRow, combo: SparseRow | None = None) -> SparseRow:
        v = dict(v)
        for p in [j for j in v if j in self.rows]:
            c = v.get(p)
            if not c:
                continue
            _axpy(v, c, self.rows[p])
            if combo is not None:
                _axpy(combo, c, self.combos[p])
        return v

    def add(self, v: SparseRow) -> bool:
        """Insert v; return True when it was independent of the stored rows."""
        idx = self._inserted
        self._inserted += 1
        combo = {idx: ONE} if self.track is not None else None
        r = self.reduce(v, combo)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {j: a * inv for j, a in r.items()}
        if combo is not None:
            combo = {j: a * inv for j, a in combo.items()}
        for other_p, other in self.rows.items():
            c = other.get(p)
            if c:
                _axpy(other, c, r)
                if combo is not None:
                    _axpy(self.combos[other_p], c, combo)
        self.rows[p] = r
        if combo is not None:
            self.combos[p] = combo
        return True

    def contains(self, v: SparseRow) -> bool:
        return not self.reduce(v)

    def sorted_rows(self) -> list[SparseRow]:
        return [self.rows[p] for p in sorted(self.rows)]


def sparse_rank(rows: Iterable[SparseRow]) -> int:
    """Rank by forward elimination only (no back substitution)."""
    pivots: dict[int, SparseRow] = {}
    for row in rows:
        v = dict(row)
        while v:
            p = min(v)
            prow = pivots.get(p)
            if prow is None:
                inv = 1 / v[p]
                pivots[p] = {j: a * inv for j, a in v.items()}
                break
            _axpy(v, v[p], prow)
    return len(pivots)


# ---------------------------------------------------------------------------
# public operations


def rref(m: MatrixQ) -> tuple[MatrixQ, list[int]]:
    """Reduced row echelon form and the strictly increasing pivot columns."""
    ech = Echelon(m.cols)
    for r in m.data:
        ech.add(to_sparse(r))
    piv = ech.pivots
    out = [densify(ech.rows[p], m.cols) for p in piv]
    out += [[ZERO] * m.cols for _ in range(m.rows - len(piv))]
    return MatrixQ(m.rows, m.cols, out), piv


def rank(m: MatrixQ) -> int:
    return sparse_rank(to_sparse(r) for r in m.data)


@dataclass(frozen=True)
class SubspaceQ:
    """Subspace of Q^ambient_dim spanned by the (independent) rows of ``basis``."""

    ambient_dim: int
    basis: MatrixQ

    def __post_init__(self):
        if self.basis.cols != self.ambient_dim:
            raise ValueError("basis rows must have length ambient_dim")

    @property
    def dim(self) -> int:
        return self.basis.rows

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "SubspaceQ":
        """Independent spanning set extracted from arbitrary vectors (canonical RREF rows)."""
        ech = Echelon(ambient_dim)
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("vector length differs from ambient dimension")
            ech.add(to_sparse(v))
        rows = [densify(r, ambient_dim) for r in ech.sorted_rows()]
        return cls(ambient_dim, MatrixQ(len(rows), ambient_dim, rows))

    @classmethod
    def full(cls, n: int) -> "SubspaceQ":
        return cls(n, MatrixQ.identity(n))

    @classmethod
    def zero(cls, n: int) -> "SubspaceQ":
        return cls(n, MatrixQ(0, n))

    def vectors(self) -> list[tuple]:
        return list(self.basis.data)

    def contains(self, v: Sequence) -> bool:
        ech = Echelon(self.ambient_dim)
        for r in self.basis.data:
            ech.add(to_sparse(r))
        return ech.contains(to_sparse(v))

    def contains_subspace(self, other: "SubspaceQ") -> bool:
        ech = Echelon(self.ambient_dim)
        for r in self.basis.data:
            ech.add(to_sparse(r))
        return all(ech.contains(to_sparse(v)) for v in other.basis.data)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SubspaceQ) and other.ambient_dim == self.ambient_dim
                and other.dim == self.dim and self.contains_subspace(other))

    def __hash__(self):
        return hash((self.ambient_dim, self.dim))


def kernel(m: MatrixQ) -> SubspaceQ:
    """Null space {x : m x = 0}; basis read off the free columns of the RREF."""
    ech = Echelon(m.cols)
    for r in m.data:
        ech.add(to_sparse(r))
    piv = set(ech.rows)
    basis = []
    for f in range(m.cols):
        if f in piv:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for p, row in ech.rows.items():
            c = row.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return SubspaceQ(m.cols, MatrixQ(len(basis), m.cols, basis))


def image(m: MatrixQ) -> SubspaceQ:
    """Column space of m."""
    return SubspaceQ.span(m.columns(), m.rows)


def solve_space(A: MatrixQ, b: Sequence) -> tuple[tuple, SubspaceQ] | None:
    """All solutions of A x = b: (particular solution, kernel), or None if inconsistent."""
    if len(b) != A.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {A.rows}")
    n = A.cols
    ech = Echelon(n + 1)
    for r, bi in zip(A.data, b):
        row = to_sparse(r)
        if bi:
            row[n] = q(bi)
        ech.add(row)
    if n in ech.rows:
        return None
    x = [ZERO] * n
    for p, row in ech.rows.items():
        x[p] = row.get(n, ZERO)
    return tuple(x), kernel(A)


def solve(A: MatrixQ, b: Sequence) -> tuple:
    """A particular solution of A x = b; raises ValueError if there is none."""
    sol = solve_space(A, b)
    if sol is None:
        raise ValueError("linear system is inconsistent")
    return sol[0]


def solve_matrix(A: MatrixQ, B: MatrixQ) -> MatrixQ:
    """X with A X = B, column by column."""
    cols = [solve(A, c) for c in B.columns()]
    return MatrixQ.from_columns(cols, A.cols)


def intersect(subspaces: Sequence[SubspaceQ], ambient_dim: int | None = None) -> SubspaceQ:
    """Common intersection; the empty list gives the full ambient space."""
    subspaces = list(subspaces)
    if not subspaces:
        if ambient_dim is None:
            raise ValueError("ambient_dim is required for an empty intersection")
        return SubspaceQ.full(ambient_dim)
    n = subspaces[0].ambient_dim
    if ambient_dim is not None and ambient_dim != n:
        raise ValueError("ambient dimension mismatch")
    if any(s.ambient_dim != n for s in subspaces):
        raise ValueError("ambient dimension mismatch")
    # x lies in every S_i  <=>  x is orthogonal to every annihilator of S_i
    constraints = []
    for s in subspaces:
        constraints.extend(kernel(s.basis).basis.data)
    if not constraints:
        return SubspaceQ.full(n)
    k = kernel(MatrixQ(len(constraints), n, constraints))
    return SubspaceQ.span(k.basis.data, n)


def extend_basis(sub: Sequence[Sequence], total: Sequence[Sequence], n: int) -> list[tuple]:
    """Vectors from ``total`` that complete ``sub`` to a basis of span(sub + total)."""
    ech = Echelon(n)
    for v in sub:
        ech.add(to_sparse(v))
    extra = []
    for v in total:
        if ech.add(to_sparse(v)):
            extra.append(tuple(q(a) for a in v))
    return extra


def quotient_map(total: SubspaceQ, sub: SubspaceQ) -> tuple[MatrixQ, list[tuple]]:
    """Projection total -> total/sub and ambient lifts of the quotient basis.

    The projection is a (dim quotient) x ambient matrix; restricted to ``total``
    it is surjective with kernel exactly ``sub`` and it sends the i-th returned
    lift to the i-th unit vector.
    """
    if sub.ambient_dim != total.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if not total.contains_subspace(sub):
        raise ValueError("not a subspace")
    n = total.ambient_dim
    sub_vecs = list(sub.basis.data)
    comp = extend_basis(sub_vecs, total.basis.data, n)
    rest = extend_basis(sub_vecs + comp, MatrixQ.identity(n).data, n)
    full = sub_vecs + comp + rest  # basis of Q^n, as columns of a change-of-basis
    P = MatrixQ.from_columns(full, n)
    # coordinates in the new basis: solve P c = e_i
    Pinv = solve_matrix(P, MatrixQ.identity(n))
    k = len(sub_vecs)
    proj = MatrixQ(len(comp), n, [Pinv.data[k + i] for i in range(len(comp))])
    return proj, comp


def left_inverse(B: MatrixQ) -> MatrixQ:
    """Some L with L B = I for a matrix B of full column rank."""
    n, k = B.shape
    cols = list(B.columns())
    rest = extend_basis(cols, MatrixQ.identity(n).data, n)
    if len(cols) + len(rest) != n:
        raise ValueError("matrix does not have full column rank")
    P = MatrixQ.from_columns(cols + rest, n)
    Pinv = solve_matrix(P, MatrixQ.identity(n))
    return MatrixQ(k, n, Pinv.data[:k])


def coordinates(B: MatrixQ, v: Sequence) -> tuple:
    """Coefficients c with B c = v, for B of full column rank."""
    sol = solve_space(B, v)
    if sol is None:
        raise ValueError("vector is not in the column span")
    return sol[0]
