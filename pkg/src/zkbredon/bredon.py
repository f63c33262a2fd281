"""
Bredon cohomology of Z(K; (D^1, S^0)) with coefficients in a coefficient system.

Two routes: the direct cochain complex C^n = Hom(C_n(X), M), assembled one
cell orbit at a time (C_n is a sum of representables, so evaluation at an
orbit representative is an isomorphism), and the Hom/Ext route against an
injective resolution of M.  A brute-force natural-transformation solve over
the cellular chain systems serves as an oracle for the first.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .action import validate_action
from .coeffsys import (CoefficientSystem, SystemError_, SystemMorphism, hom_space,
                       homology_system)
from .doman import Resolution, injective_resolution
from .groups import Perm, PermGroup
from .orbitcat import OrbitCategory, build_orbit_category
from .qlinalg import ZERO, MatrixQ, sparse_rank
from .simplicial import SimplicialComplex
from .zcomplex import Cell, ChainComplexQ, translation_cell_map, triangulate


class BredonError(ValueError):
    pass


@dataclass
class CellOrbit:
    representative: Cell
    stabilizer: int  # index of the subgroup class; the stabilizer equals its representative
    members: dict[Cell, Perm] = field(repr=False)  # cell -> some x with x.rep = cell


@dataclass
class EquivariantCellStructure:
    ambient: ChainComplexQ
    category: OrbitCategory
    orbits: list[list[CellOrbit]]
    locate: dict[Cell, tuple[int, Perm]] = field(repr=False)  # cell -> (orbit index, x)

    def orbit_sizes(self, n: int) -> list[int]:
        return [len(o.members) for o in self.orbits[n]]

    def to_json(self) -> dict:
        return {
            "orbits": [[{"representative": list(o.representative), "stabilizer": o.stabilizer,
                         "size": len(o.members)} for o in per]
                       for per in self.orbits],
        }


def _stabilizer(G: PermGroup, c: Cell) -> frozenset[Perm]:
    return frozenset(g for g in G.elements if all(g.apply_mask(s) == s for s in c))


def equivariant_cells(K: SimplicialComplex, G: PermGroup, category: OrbitCategory | None = None,
                      ambient: ChainComplexQ | None = None,
                      max_vertices: int | None = None) -> EquivariantCellStructure:
    """Partition the cells of Z(K) into G-orbits.

    Each orbit's representative is the lex-least member whose stabilizer is
    literally the chosen representative of its subgroup class, so that
    M(G/H_i) can be read without conjugating.
    """
    validate_action(K, G)
    C = category or build_orbit_category(G)
    X = ambient or triangulate(K, max_vertices)
    class_of = {c.representative.element_set: i for i, c in enumerate(C.objects)}
    orbits: list[list[CellOrbit]] = []
    locate: dict[Cell, tuple[int, Perm]] = {}
    elements = sorted(G.elements)
    for n in range(X.top_dim + 1):
        per: list[CellOrbit] = []
        seen: set[Cell] = set()
        for c in X.cells(n):
            if c in seen:
                continue
            images: dict[Cell, Perm] = {}
            for g in elements:
                d = translation_cell_map(g)(c)
                images.setdefault(d, g)
            seen.update(images)
            rep = None
            for d in sorted(images):
                if _stabilizer(G, d) in class_of:
                    rep = d
                    break
            if rep is None:
                raise BredonError(f"no cell in the orbit of {c} has a class representative "
                                  "as stabilizer")
            back = images[rep].inverse()
            members = {d: g * back for d, g in images.items()}  # (g back).rep = g.c = d
            idx = len(per)
            for d, x in members.items():
                locate[d] = (idx, x)
            per.append(CellOrbit(rep, class_of[_stabilizer(G, rep)], members))
        orbits.append(per)
    return EquivariantCellStructure(X, C, orbits, locate)


@dataclass
class CochainComplexQ:
    """C^0 -> C^1 -> ...; ``diff[n]`` is the matrix of C^n -> C^{n+1}."""

    dims: list[int]
    diff: list[MatrixQ]
    offsets: list[list[int]] = field(default_factory=list)

    def _columns(self, n: int) -> list[dict[int, Fraction]]:
        D = self.diff[n]
        cols = [dict() for _ in range(D.cols)]
        for i, row in enumerate(D.data):
            for j, v in enumerate(row):
                if v:
                    cols[j][i] = v
        return cols

    def check_dd(self) -> bool:
        for n in range(len(self.diff) - 1):
            second = self._columns(n + 1)
            for col in self._columns(n):
                acc: dict[int, Fraction] = {}
                for i, v in col.items():
                    for k, w in second[i].items():
                        acc[k] = acc.get(k, ZERO) + v * w
                if any(acc.values()):
                    return False
        return True

    def cohomology_dims(self) -> list[int]:
        ranks = [sparse_rank(self._columns(n)) for n in range(len(self.diff))]
        out = []
        for n, dim in enumerate(self.dims):
            r_out = ranks[n] if n < len(ranks) else 0
            r_in = ranks[n - 1] if n >= 1 else 0
            out.append(dim - r_out - r_in)
        return out

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * d for n, d in enumerate(self.dims))


def bredon_cochain(cells: EquivariantCellStructure, M: CoefficientSystem) -> CochainComplexQ:
    C = cells.category
    if M.category is not C:
        raise SystemError_("coefficient system lives over a different orbit category")
    offsets, dims = [], []
    for per in cells.orbits:
        off, acc = [], 0
        for o in per:
            off.append(acc)
            acc += M.dims[o.stabilizer]
        offsets.append(off)
        dims.append(acc)
    diff = []
    for n in range(len(cells.orbits) - 1):
        data = [[ZERO] * dims[n] for _ in range(dims[n + 1])]
        for a, o in enumerate(cells.orbits[n + 1]):
            i = o.stabilizer
            c = o.representative
            row0 = offsets[n + 1][a]
            for t in range(len(c)):
                face = c[:t] + c[t + 1:]
                sign = -1 if t % 2 else 1
                b, x = cells.locate[face]
                j = cells.orbits[n][b].stabilizer
                # phi_i(x.d*) = M((i, j, x)) phi_j(d*)
                block = M.maps[(i, j, C.canon(j, x))]
                col0 = offsets[n][b]
                for r in range(block.rows):
                    row = data[row0 + r]
                    for s, v in enumerate(block.data[r]):
                        if v:
                            row[col0 + s] += sign * v
        diff.append(MatrixQ(dims[n + 1], dims[n], data))
    cx = CochainComplexQ(dims, diff, offsets)
    if not cx.check_dd():
        raise BredonError("d o d != 0 in the Bredon cochain complex")
    return cx


def bredon_cohomology(K: SimplicialComplex, G: PermGroup, M: CoefficientSystem,
                      cells: EquivariantCellStructure | None = None) -> list[int]:
    cells = cells or equivariant_cells(K, G, M.category)
    return bredon_cochain(cells, M).cohomology_dims()


# ---------------------------------------------------------------------------
# brute-force oracle


def cellular_chain_system(cells: EquivariantCellStructure, n: int):
    """G/H ↦ Q[n-cells fixed by H], with (i, j, g) acting by c ↦ g.c.

    Returns the system and, per object, its list of fixed cells.
    """
    C = cells.category
    X = cells.ambient
    fixed = []
    for obj in C.objects:
        H = obj.representative
        fixed.append([c for c in X.cells(n)
                      if all(g.apply_mask(s) == s for g in H.generators for s in c)])
    index = [{c: a for a, c in enumerate(cs)} for cs in fixed]
    maps = {}
    for f in C.all_morphisms:
        i, j, g = f
        move = translation_cell_map(g)
        data = [[ZERO] * len(fixed[j]) for _ in fixed[i]]
        for b, c in enumerate(fixed[j]):
            data[index[i][move(c)]][b] = Fraction(1)
        maps[f] = MatrixQ(len(fixed[i]), len(fixed[j]), data)
    return CoefficientSystem(C, [len(cs) for cs in fixed], maps, name=f"C_{n}",
                             validate=False), fixed


def _boundary_morphism(cells: EquivariantCellStructure, n: int, src, dst) -> SystemMorphism:
    """The cellular boundary C_n -> C_{n-1} as a map of chain systems."""
    (Cn, fixed_n), (Cm, fixed_m) = src, dst
    comps = []
    for k in range(len(cells.category)):
        pos = {c: a for a, c in enumerate(fixed_m[k])}
        data = [[ZERO] * len(fixed_n[k]) for _ in fixed_m[k]]
        for b, c in enumerate(fixed_n[k]):
            for t in range(len(c)):
                data[pos[c[:t] + c[t + 1:]]][b] += -1 if t % 2 else 1
        comps.append(MatrixQ(len(fixed_m[k]), len(fixed_n[k]), data))
    return SystemMorphism(Cn, Cm, comps)


def naive_bredon_cohomology(cells: EquivariantCellStructure, M: CoefficientSystem,
                            max_cells: int = 200) -> tuple[list[int], list[int]]:
    """(dim Hom(C_n, M) for all n, cohomology dims), by solving for natural transformations."""
    X = cells.ambient
    if X.num_cells > max_cells:
        raise BredonError(f"naive oracle is limited to {max_cells} cells (got {X.num_cells})")
    top = X.top_dim
    chains = [cellular_chain_system(cells, n) for n in range(top + 1)]
    homs = [hom_space(ch[0], M) for ch in chains]
    ranks = []
    for n in range(top):
        d = _boundary_morphism(cells, n + 1, chains[n + 1], chains[n])
        ranks.append(sparse_rank({a: v for a, v in enumerate(d.then(phi).flat()) if v}
                                 for phi in homs[n][1]))
    dims = [h[0] for h in homs]
    coh = [dims[n] - (ranks[n] if n < top else 0) - (ranks[n - 1] if n else 0)
           for n in range(top + 1)]
    return dims, coh


# ---------------------------------------------------------------------------
# Hom / Ext route


@dataclass
class ExtTable:
    raw: list[list[int]]  # raw[p][q] = dim Hom(H_q, I^p)
    ext: list[list[int]]  # ext[p][q] = dim Ext^{p,q}
    hom: list[int]        # dim Hom(H_q, M)

    def total(self, n: int) -> int:
        return sum(row[n - p] for p, row in enumerate(self.ext) if 0 <= n - p < len(row))

    def to_json(self) -> dict:
        return {"raw_hom": self.raw, "ext": self.ext, "hom": self.hom}


def _rank_of_post(basis: list[SystemMorphism], d: SystemMorphism) -> int:
    return sparse_rank({a: v for a, v in enumerate(phi.then(d).flat()) if v} for phi in basis)


def ext_table(H: list[CoefficientSystem], M: CoefficientSystem,
              resolution: Resolution | None = None, threads: int = 1) -> ExtTable:
    """Ext^{p,q}(H_q, M) from Hom(H_q, I^0) -> Hom(H_q, I^1) -> ..."""
    R = resolution or injective_resolution(M)
    P, Q = len(R.terms), len(H)

    def column(q):
        bases = [hom_space(H[q], I) for I in R.terms]
        raw = [b[0] for b in bases]
        ranks = [_rank_of_post(bases[p][1], R.differential(p)) for p in range(P - 1)]
        ext = [raw[p] - (ranks[p] if p < P - 1 else 0) - (ranks[p - 1] if p else 0)
               for p in range(P)]
        return raw, ext, hom_space(H[q], M)[0]

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            cols = list(pool.map(column, range(Q)))
    else:
        cols = [column(q) for q in range(Q)]
    raw = [[cols[q][0][p] for q in range(Q)] for p in range(P)]
    ext = [[cols[q][1][p] for q in range(Q)] for p in range(P)]
    return ExtTable(raw, ext, [c[2] for c in cols])


def homology_systems(K: SimplicialComplex, G: PermGroup, C: OrbitCategory,
                     ambient: ChainComplexQ | None = None) -> list[CoefficientSystem]:
    X = ambient or triangulate(K)
    return [homology_system(K, G, q, C, X) for q in range(X.top_dim + 1)]


def hom_route(K: SimplicialComplex, G: PermGroup, M: CoefficientSystem,
              ambient: ChainComplexQ | None = None) -> list[int]:
    """dim Hom(H_n, M); equals H^n_G when M is injective (the UCSS collapses)."""
    return [hom_space(Hq, M)[0] for Hq in homology_systems(K, G, M.category, ambient)]


# ---------------------------------------------------------------------------
# cross-validation


@dataclass
class Consistency:
    H: list[int]
    table: ExtTable
    injective: bool
    checks: dict[str, bool]
    details: dict[str, object]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"H": self.H, **self.table.to_json(), "injective": self.injective,
                "checks": self.checks, "details": self.details}


def ucss_consistency(K: SimplicialComplex, G: PermGroup, M: CoefficientSystem,
                     threads: int = 1) -> Consistency:
    C = M.category
    X = triangulate(K)
    cells = equivariant_cells(K, G, C, X)
    H = bredon_cochain(cells, M).cohomology_dims()
    Hq = homology_systems(K, G, C, X)
    R = injective_resolution(M)
    table = ext_table(Hq, M, R, threads)
    injective = len(R.terms) <= 1
    n_top = len(Hq) - 1
    H = H + [0] * (n_top + 1 - len(H))
    checks = {
        "a_injective_collapse": (not injective) or H == table.hom,
        "b_ext_bound": all(H[n] <= table.total(n) for n in range(len(H))),
        "c_degree_zero": H[0] == (table.ext[0][0] if table.ext else 0),
        "d_euler": (sum((-1) ** n * h for n, h in enumerate(H))
                    == sum((-1) ** (p + q) * e for p, row in enumerate(table.ext)
                           for q, e in enumerate(row))),
        "ext0_is_hom": (not table.ext) or table.ext[0] == table.hom,
    }
    details = {"resolution_dims": [I.dims for I in R.terms],
               "ext_totals": [table.total(n) for n in range(len(H))]}
    return Consistency(H, table, injective, checks, details)


def orbit_sum_oracle(X: ChainComplexQ, G: PermGroup, free_only: bool = False) -> list[int]:
    """Betti numbers of the G-invariant chains of X, a basis being orbit sums.

    Over Q this is H_*(X/G), the Bredon cohomology with constant coefficients.
    With ``free_only`` the cells with nontrivial stabilizer are quotiented
    out first, giving H_*(X/G, X_sing/G), the Bredon cohomology with M
    concentrated at G/e.  No orbit category is involved.
    """
    gens = list(G.generators)
    per_dim: list[list[frozenset[Cell]]] = []
    for n in range(X.top_dim + 1):
        seen, orbits = set(), []
        for c in X.cells(n):
            if c in seen:
                continue
            orb, frontier = {c}, [c]
            while frontier:
                new = []
                for d in frontier:
                    for g in gens:
                        e = translation_cell_map(g)(d)
                        if e not in orb:
                            orb.add(e)
                            new.append(e)
                frontier = new
            seen |= orb
            if free_only and len(orb) != G.order:
                continue
            orbits.append(frozenset(orb))
        per_dim.append(orbits)
    ranks = [0]
    for n in range(1, len(per_dim)):
        where = {c: k for k, orb in enumerate(per_dim[n - 1]) for c in orb}
        cols = []
        for orb in per_dim[n]:
            v: dict[int, Fraction] = {}
            for c in orb:
                for t in range(len(c)):
                    k = where.get(c[:t] + c[t + 1:])
                    if k is not None:
                        v[k] = v.get(k, ZERO) + (-1 if t % 2 else 1)
            cols.append({k: a for k, a in v.items() if a})
        ranks.append(sparse_rank(cols))
    ranks.append(0)
    return [len(per_dim[n]) - ranks[n] - ranks[n + 1] for n in range(len(per_dim))]


def yoneda_transformation(cells: EquivariantCellStructure, M: CoefficientSystem, n: int,
                          cochain: list, chain) -> SystemMorphism:
    """The natural transformation C_n -> M determined by an orbit-sum cochain.

    Its value on the cell x.c* (c* the representative of orbit o, fixed by H_k)
    is M((k, o, x)) applied to the o-block of ``cochain``.
    """
    C = cells.category
    system, fixed = chain
    offsets, off = [], 0
    for o in cells.orbits[n]:
        offsets.append(off)
        off += M.dims[o.stabilizer]
    comps = []
    for k in range(len(C)):
        cols = []
        for c in fixed[k]:
            b, x = cells.locate[c]
            j = cells.orbits[n][b].stabilizer
            block = cochain[offsets[b]:offsets[b] + M.dims[j]]
            cols.append(M.maps[(k, j, C.canon(j, x))].apply(block))
        comps.append(MatrixQ.from_columns(cols, M.dims[k]) if cols else MatrixQ(M.dims[k], 0))
    return SystemMorphism(system, M, comps)


def compare_with_naive(cells: EquivariantCellStructure, M: CoefficientSystem,
                       max_cells: int = 200) -> dict[str, bool]:
    """Check the orbit-sum cochain complex against the natural-transformation spaces.

    The Yoneda map must land in natural transformations, be injective, have
    the dimension of the brute-force solution space, and intertwine the two
    differentials.
    """
    X = cells.ambient
    if X.num_cells > max_cells:
        raise BredonError(f"naive comparison is limited to {max_cells} cells (got {X.num_cells})")
    cx = bredon_cochain(cells, M)
    chains = [cellular_chain_system(cells, n) for n in range(X.top_dim + 1)]
    out = {"natural": True, "dims": True, "injective": True, "differential": True}
    images = []
    for n, dim in enumerate(cx.dims):
        vecs = []
        for e in range(dim):
            v = [ZERO] * dim
            v[e] = Fraction(1)
            phi = yoneda_transformation(cells, M, n, v, chains[n])
            if phi.naturality_failure() is not None:
                out["natural"] = False
            vecs.append(phi)
        images.append(vecs)
        if hom_space(chains[n][0], M)[0] != dim:
            out["dims"] = False
        if sparse_rank({a: x for a, x in enumerate(p.flat()) if x} for p in vecs) != dim:
            out["injective"] = False
    for n in range(len(cx.dims) - 1):
        d = _boundary_morphism(cells, n + 1, chains[n + 1], chains[n])
        D = cx.diff[n]
        for e, phi in enumerate(images[n]):
            lhs = d.then(phi).flat()
            col = D.column(e)
            rhs = yoneda_transformation(cells, M, n + 1, list(col), chains[n + 1]).flat()
            if lhs != rhs:
                out["differential"] = False
                break
    return out
