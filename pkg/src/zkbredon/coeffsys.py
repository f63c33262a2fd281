"""
Bredon coefficient systems over Q: contravariant functors on the orbit category.

A system stores ``dims[i]`` and, for every morphism f = (i, j, g) : G/H_i -> G/H_j,
the matrix of M(f) : M(G/H_j) -> M(G/H_i), shape dims[i] x dims[j].
Functoriality reads M(h o f) = M(f) M(h).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groups import Perm, PermGroup
from .orbitcat import Morphism, OrbitCategory
from .qlinalg import (ZERO, MatrixQ, SubspaceQ, block_diag, coordinates, image, kernel,
                      quotient_map, solve_matrix)


class SystemError_(ValueError):
    """Malformed coefficient system or non-natural family of maps."""


class CoefficientSystem:
    def __init__(self, category: OrbitCategory, dims: Sequence[int],
                 maps: dict[Morphism, MatrixQ], name: str = "", validate: bool = True):
        self.category = category
        self.dims = list(dims)
        self.maps = dict(maps)
        self.name = name
        if len(self.dims) != len(category):
            raise SystemError_(f"expected {len(category)} dimensions, got {len(self.dims)}")
        if validate:
            self.validate()

    def __call__(self, f: Morphism) -> MatrixQ:
        return self.maps[f]

    def validate(self) -> None:
        C = self.category
        for f in C.all_morphisms:
            if f not in self.maps:
                raise SystemError_(f"no matrix for morphism {_fmt(f)}")
            A = self.maps[f]
            if A.shape != (self.dims[f[0]], self.dims[f[1]]):
                raise SystemError_(f"matrix for {_fmt(f)} has shape {A.shape}, "
                                   f"expected {(self.dims[f[0]], self.dims[f[1]])}")
        for i in range(len(C)):
            if self.maps[C.identity(i)] != MatrixQ.identity(self.dims[i]):
                raise SystemError_(f"identity of object {i} is not sent to the identity")
        for (h, f), hf in C.composition_table.items():
            if self.maps[hf] != self.maps[f] @ self.maps[h]:
                raise SystemError_(f"functoriality fails for {_fmt(h)} o {_fmt(f)}")

    def is_zero(self) -> bool:
        return not any(self.dims)

    def total_dim(self) -> int:
        return sum(self.dims)

    def weyl_matrix(self, i: int, n: Perm) -> MatrixQ:
        """Action of a normalizer element n on M(G/H_i); n -> M(eH ↦ nH) is a homomorphism."""
        return self.maps[self.category.weyl_endomorphism(i, n)]

    def to_json(self, matrices: bool = True) -> dict:
        out = {"group": self.category.group.to_json(), "dims": self.dims}
        if matrices:
            out["maps"] = [
                {"src": f[0], "dst": f[1], "coset": list(f[2].images),
                 "matrix": self.maps[f].to_json()}
                for f in self.category.all_morphisms
            ]
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: dict, category: OrbitCategory | None = None) -> "CoefficientSystem":
        from .orbitcat import build_orbit_category

        if category is None:
            category = build_orbit_category(PermGroup.from_json(data["group"]))
        dims = [int(d) for d in data["dims"]]
        maps = {}
        for k, entry in enumerate(data.get("maps", [])):
            try:
                i, j = int(entry["src"]), int(entry["dst"])
                g = category.canon(j, Perm(tuple(int(x) for x in entry["coset"])))
                rows = entry["matrix"]
            except (KeyError, ValueError, IndexError) as e:
                raise SystemError_(f"maps[{k}]: malformed entry ({e})") from None
            f = (i, j, g)
            if g not in category.hom.get((i, j), []):
                raise SystemError_(f"maps[{k}]: {_fmt(f)} is not a morphism of the orbit category")
            try:
                maps[f] = MatrixQ(dims[i], dims[j], rows if dims[i] else [])
            except (ValueError, ZeroDivisionError) as e:
                raise SystemError_(f"maps[{k}]: {e}") from None
        for i in range(len(category)):
            maps.setdefault(category.identity(i), MatrixQ.identity(dims[i]))
        for f in category.all_morphisms:
            if f not in maps and (dims[f[0]] == 0 or dims[f[1]] == 0):
                maps[f] = MatrixQ(dims[f[0]], dims[f[1]])
        return cls(category, dims, maps, name=data.get("name", ""))


def _fmt(f: Morphism) -> str:
    return f"G/H{f[0]} -> G/H{f[1]} via {f[2].cycles()}"


def template(category: OrbitCategory) -> dict:
    """Skeleton JSON listing every morphism; matrices are left for the user to fill."""
    return {
        "group": category.group.to_json(),
        "objects": category.labels(),
        "dims": [0] * len(category),
        "maps": [{"src": i, "dst": j, "coset": list(g.images), "matrix": []}
                 for (i, j, g) in category.all_morphisms if i != j or not category.is_identity((i, j, g))],
    }


# ---------------------------------------------------------------------------
# constructions


def constant_system(C: OrbitCategory) -> CoefficientSystem:
    one = MatrixQ.identity(1)
    return CoefficientSystem(C, [1] * len(C), {f: one for f in C.all_morphisms}, name="constant")


def zero_system(C: OrbitCategory) -> CoefficientSystem:
    return CoefficientSystem(C, [0] * len(C), {f: MatrixQ(0, 0) for f in C.all_morphisms},
                             name="zero")


def free_point_system(C: OrbitCategory) -> CoefficientSystem:
    """Q at G/{e} with trivial Weyl action, zero at every other object."""
    dims = [1 if c.order == 1 else 0 for c in C.objects]
    maps = {f: MatrixQ(dims[f[0]], dims[f[1]],
                       [[Fraction(1)]] if dims[f[0]] and dims[f[1]] else
                       [[] for _ in range(dims[f[0]])])
            for f in C.all_morphisms}
    return CoefficientSystem(C, dims, maps, name="M")


def homology_system(K, G: PermGroup, n: int, category: OrbitCategory | None = None,
                    ambient=None, max_vertices: int | None = None) -> CoefficientSystem:
    """G/H ↦ H_n(Z(K)^H; Q), a morphism with representative g acting by x ↦ g.x."""
    from .action import validate_action
    from .orbitcat import build_orbit_category
    from .zcomplex import induced_map, translation_cell_map, triangulate, fixed_subcomplex

    validate_action(K, G)
    C = category or build_orbit_category(G)
    if ambient is None:
        ambient = triangulate(K, max_vertices)
    fixed = [fixed_subcomplex(K, c.representative, ambient) for c in C.objects]
    dims = [X.homology_basis.betti(n) for X in fixed]
    maps = {}
    for f in C.all_morphisms:
        i, j, g = f
        # X^{H_j} -> X^{H_i}, x ↦ g.x  (lands in X^{H_i} because g^-1 H_i g <= H_j)
        maps[f] = induced_map(fixed[j], fixed[i], translation_cell_map(g), n)
    return CoefficientSystem(C, dims, maps, name=f"H_{n}")


def direct_sum(systems: Sequence[CoefficientSystem]) -> CoefficientSystem:
    if not systems:
        raise SystemError_("direct_sum needs at least one system")
    C = systems[0].category
    for M in systems:
        if M.category is not C:
            raise SystemError_("systems live over different categories")
    dims = [sum(M.dims[i] for M in systems) for i in range(len(C))]
    maps = {f: block_diag([M.maps[f] for M in systems]) for f in C.all_morphisms}
    return CoefficientSystem(C, dims, maps, validate=False)


# ---------------------------------------------------------------------------
# morphisms of systems


@dataclass
class SystemMorphism:
    source: CoefficientSystem
    target: CoefficientSystem
    components: list[MatrixQ]  # components[i] : source(G/H_i) -> target(G/H_i)

    def __post_init__(self):
        C = self.source.category
        if self.target.category is not C:
            raise SystemError_("source and target live over different categories")
        for i, A in enumerate(self.components):
            if A.shape != (self.target.dims[i], self.source.dims[i]):
                raise SystemError_(f"component {i} has shape {A.shape}")

    def naturality_failure(self) -> Morphism | None:
        M, N, phi = self.source, self.target, self.components
        for f in M.category.all_morphisms:
            i, j, _ = f
            if phi[i] @ M.maps[f] != N.maps[f] @ phi[j]:
                return f
        return None

    def validate(self) -> "SystemMorphism":
        bad = self.naturality_failure()
        if bad is not None:
            raise SystemError_(f"naturality square fails at {_fmt(bad)}")
        return self

    def then(self, other: "SystemMorphism") -> "SystemMorphism":
        """other o self."""
        return SystemMorphism(self.source, other.target,
                              [b @ a for a, b in zip(self.components, other.components)])

    def is_zero(self) -> bool:
        return all(A.is_zero() for A in self.components)

    def flat(self) -> list[Fraction]:
        out = []
        for A in self.components:
            for r in A.data:
                out.extend(r)
        return out


def identity_morphism(M: CoefficientSystem) -> SystemMorphism:
    return SystemMorphism(M, M, [MatrixQ.identity(d) for d in M.dims])


def _unknown_layout(M: CoefficientSystem, N: CoefficientSystem):
    offsets, k = [], 0
    for i in range(len(M.dims)):
        offsets.append(k)
        k += N.dims[i] * M.dims[i]
    return offsets, k


def hom_space(M: CoefficientSystem, N: CoefficientSystem) -> tuple[int, list[SystemMorphism]]:
    """All natural transformations M -> N: the kernel of the stacked naturality equations."""
    if M.category is not N.category:
        raise SystemError_("systems live over different categories")
    C = M.category
    offsets, nvars = _unknown_layout(M, N)
    rows = []
    # phi_i M(f) - N(f) phi_j = 0 for f : i -> j, entrywise (a, b) with a < N_i, b < M_j
    for f in C.all_morphisms:
        i, j, _ = f
        if C.is_identity(f):
            continue
        Mf, Nf = M.maps[f], N.maps[f]
        mi, mj, ni, nj = M.dims[i], M.dims[j], N.dims[i], N.dims[j]
        for a in range(ni):
            for b in range(mj):
                row = {}
                for c in range(mi):  # phi_i[a, c] * Mf[c, b]
                    v = Mf.data[c][b]
                    if v:
                        key = offsets[i] + a * mi + c
                        row[key] = row.get(key, ZERO) + v
                for c in range(nj):  # - Nf[a, c] * phi_j[c, b]
                    v = Nf.data[a][c]
                    if v:
                        key = offsets[j] + c * mj + b
                        row[key] = row.get(key, ZERO) - v
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    dense = [[r.get(k, ZERO) for k in range(nvars)] for r in rows]
    ker = kernel(MatrixQ(len(dense), nvars, dense))
    basis = [_unflatten(M, N, offsets, vec) for vec in ker.basis.data]
    return ker.dim, basis


def _unflatten(M, N, offsets, vec) -> SystemMorphism:
    comps = []
    for i in range(len(M.dims)):
        mi, ni = M.dims[i], N.dims[i]
        o = offsets[i]
        comps.append(MatrixQ(ni, mi, [vec[o + a * mi:o + (a + 1) * mi] for a in range(ni)]))
    return SystemMorphism(M, N, comps)


def hom_dimension(M: CoefficientSystem, N: CoefficientSystem) -> int:
    return hom_space(M, N)[0]


def express(phi: SystemMorphism, basis: Sequence[SystemMorphism]) -> tuple:
    """Coordinates of phi in a basis of a Hom space."""
    if not basis:
        if not phi.is_zero():
            raise SystemError_("morphism is not in the span of the empty basis")
        return ()
    B = MatrixQ.from_columns([b.flat() for b in basis], len(phi.flat()))
    return coordinates(B, phi.flat())


# ---------------------------------------------------------------------------
# kernels and cokernels


def _restricted(A: MatrixQ, B_src: MatrixQ, B_dst: MatrixQ) -> MatrixQ:
    """Matrix of A in column bases: solve B_dst X = A B_src."""
    if B_src.cols == 0 or B_dst.cols == 0:
        return MatrixQ(B_dst.cols, B_src.cols)
    return solve_matrix(B_dst, A @ B_src)


def kernel_system(phi: SystemMorphism) -> tuple[CoefficientSystem, SystemMorphism]:
    """Objectwise kernel and its inclusion into the source."""
    phi.validate()
    M = phi.source
    C = M.category
    bases = []
    for i, A in enumerate(phi.components):
        k = kernel(A)
        bases.append(MatrixQ.from_columns(k.basis.data, M.dims[i]) if k.dim
                     else MatrixQ(M.dims[i], 0))
    dims = [B.cols for B in bases]
    maps = {f: _restricted(M.maps[f], bases[f[1]], bases[f[0]]) for f in C.all_morphisms}
    K = CoefficientSystem(C, dims, maps)
    return K, SystemMorphism(K, M, bases)


def cokernel_system(phi: SystemMorphism) -> tuple[CoefficientSystem, SystemMorphism]:
    """Objectwise cokernel and the projection from the target."""
    phi.validate()
    N = phi.target
    C = N.category
    projs, lifts = [], []
    for i, A in enumerate(phi.components):
        n = N.dims[i]
        P, comp = quotient_map(SubspaceQ.full(n), image(A) if A.cols else SubspaceQ.zero(n))
        projs.append(P)
        lifts.append(MatrixQ.from_columns(comp, n) if comp else MatrixQ(n, 0))
    dims = [P.rows for P in projs]
    maps = {}
    for f in C.all_morphisms:
        i, j, _ = f
        maps[f] = projs[i] @ N.maps[f] @ lifts[j] if dims[i] and dims[j] else MatrixQ(dims[i], dims[j])
    Q = CoefficientSystem(C, dims, maps)
    return Q, SystemMorphism(N, Q, projs)


def image_dims(phi: SystemMorphism) -> list[int]:
    from .qlinalg import rank
    return [rank(A) for A in phi.components]
