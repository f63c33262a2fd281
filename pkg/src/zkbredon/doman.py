"""
Doman's injective coefficient systems over Q, injective envelopes and resolutions.

For a subgroup class H and a left Q[WH]-module V, the injective I(V) is

    I(V)(G/K) = Hom_{Q WH}(Q[(G/K)^H], V),

with (G/K)^H = {gK : g^-1 H g <= K}, on which WH acts by n.(gK) = (ng)K.
An element of I(V)(G/K) is stored as the list of its values F(gK) in V,
flattened coset by coset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .coeffsys import CoefficientSystem, SystemMorphism, cokernel_system, direct_sum, zero_system
from .groups import Perm, longest_chain_length
from .orbitcat import OrbitCategory
from .qlinalg import (ZERO, MatrixQ, SubspaceQ, intersect, kernel, left_inverse, rank,
                      solve_matrix, vstack)


class EnvelopeError(RuntimeError):
    pass


@dataclass
class WeylRep:
    """Left action of WH on Q^dim, one matrix per Weyl coset representative."""

    h: int
    dim: int
    matrices: dict[Perm, MatrixQ]

    def check(self, C: OrbitCategory) -> None:
        reps = list(self.matrices)
        for a in reps:
            for b in reps:
                ab = C.canon(self.h, a * b)
                if self.matrices[ab] != self.matrices[a] @ self.matrices[b]:
                    raise ValueError(f"not a representation at {a.cycles()}, {b.cycles()}")
        ident = C.canon(self.h, Perm.identity(C.group.degree))
        if self.matrices[ident] != MatrixQ.identity(self.dim):
            raise ValueError("identity does not act trivially")


def trivial_rep(C: OrbitCategory, h: int, dim: int = 1) -> WeylRep:
    one = MatrixQ.identity(dim)
    return WeylRep(h, dim, {C.canon(h, n): one for n in C.objects[h].weyl_coset_reps})


def h_fixed_cosets(C: OrbitCategory, k: int, h: int) -> tuple[list[Perm], dict[Perm, list[int]]]:
    """(G/H_k)^{H_h} as minimal coset representatives, and the WH-action on it.

    The action maps each Weyl coset representative n to the permutation of
    coset indices x ↦ n.x.
    """
    cosets = C.hom[h, k]
    pos = {g: a for a, g in enumerate(cosets)}
    action = {}
    for n in C.objects[h].weyl_coset_reps:
        action[C.canon(h, n)] = [pos[C.canon(k, n * g)] for g in cosets]
    return cosets, action


@dataclass
class InjectiveAtom:
    h: int
    rep: WeylRep
    realized: CoefficientSystem
    bases: list[MatrixQ] = field(repr=False)  # per object: columns span the equivariant maps
    cosets: list[list[Perm]] = field(repr=False)


def _equivariant_basis(rep: WeylRep, action: dict[Perm, list[int]], npts: int) -> MatrixQ:
    d = rep.dim
    nvars = npts * d
    if nvars == 0:
        return MatrixQ(0, 0)
    rows = []
    # F(n.x) - rho(n) F(x) = 0
    for n, perm in action.items():
        R = rep.matrices[n]
        for x in range(npts):
            y = perm[x]
            for a in range(d):
                row = [ZERO] * nvars
                row[y * d + a] += 1
                for b in range(d):
                    row[x * d + b] -= R.data[a][b]
                rows.append(row)
    ker = kernel(MatrixQ(len(rows), nvars, rows)) if rows else SubspaceQ.full(nvars)
    if ker.dim == 0:
        return MatrixQ(nvars, 0)
    return MatrixQ.from_columns(ker.basis.data, nvars)


def realize_injective(C: OrbitCategory, h: int, rep: WeylRep) -> InjectiveAtom:
    d = rep.dim
    cosets, bases = [], []
    for k in range(len(C)):
        cs, action = h_fixed_cosets(C, k, h)
        cosets.append(cs)
        bases.append(_equivariant_basis(rep, action, len(cs)))
    dims = [B.cols for B in bases]
    maps = {}
    for f in C.all_morphisms:
        i, j, g = f
        if not dims[i] or not dims[j]:
            maps[f] = MatrixQ(dims[i], dims[j])
            continue
        # precompose with fbar : (G/H_i)^H -> (G/H_j)^H, xH_i ↦ x g H_j
        pos_j = {c: a for a, c in enumerate(cosets[j])}
        ni, nj = len(cosets[i]) * d, len(cosets[j]) * d
        pull = [[ZERO] * nj for _ in range(ni)]
        for a, x in enumerate(cosets[i]):
            b = pos_j[C.canon(j, x * g)]
            for t in range(d):
                pull[a * d + t][b * d + t] = Fraction(1)
        maps[f] = solve_matrix(bases[i], MatrixQ(ni, nj, pull) @ bases[j])
    realized = CoefficientSystem(C, dims, maps, name=f"I(V_{h})")
    return InjectiveAtom(h, rep, realized, bases, cosets)


@dataclass
class SocleParts:
    """V_H inside M(G/H) with its Weyl action, for every object H."""

    subspaces: list[MatrixQ]  # columns: basis of V_H in M(G/H) coordinates
    reps: list[WeylRep]


def socle_parts(M: CoefficientSystem) -> SocleParts:
    C = M.category
    subspaces, reps = [], []
    for h, obj in enumerate(C.objects):
        n = M.dims[h]
        kers = []
        for f in C.morphisms(dst=h):
            if C.objects[f[0]].order < obj.order:
                kers.append(kernel(M.maps[f]))
        V = intersect(kers, n)
        B = MatrixQ.from_columns(V.basis.data, n) if V.dim else MatrixQ(n, 0)
        subspaces.append(B)
        mats = {}
        for w in obj.weyl_coset_reps:
            w = C.canon(h, w)
            mats[w] = (solve_matrix(B, M.weyl_matrix(h, w) @ B) if V.dim else MatrixQ(0, 0))
        reps.append(WeylRep(h, V.dim, mats))
    return SocleParts(subspaces, reps)


def _equivariant_projection(M: CoefficientSystem, h: int, B: MatrixQ, rep: WeylRep) -> MatrixQ:
    """WH-equivariant p : M(G/H) -> V (in V coordinates), identity on V."""
    C = M.category
    L = left_inverse(B)
    acc = None
    reps = C.objects[h].weyl_coset_reps
    for w in reps:
        w = C.canon(h, w)
        winv = C.canon(h, w.inverse())
        term = rep.matrices[w] @ L @ M.weyl_matrix(h, winv)
        acc = term if acc is None else acc + term
    return acc.scale(Fraction(1, len(reps)))


@dataclass
class Envelope:
    system: CoefficientSystem
    embedding: SystemMorphism
    atoms: list[InjectiveAtom]


def injective_envelope(M: CoefficientSystem) -> Envelope:
    C = M.category
    socle = socle_parts(M)
    atoms, parts = [], []
    for h in range(len(C)):
        rep = socle.reps[h]
        if rep.dim == 0:
            continue
        atom = realize_injective(C, h, rep)
        proj = _equivariant_projection(M, h, socle.subspaces[h], rep)
        comps = []
        for k in range(len(C)):
            # x ↦ (gK ↦ p(M(phi_g) x)) with phi_g : G/H -> G/K, eH ↦ gK
            if atom.realized.dims[k] == 0 or M.dims[k] == 0:
                comps.append(MatrixQ(atom.realized.dims[k], M.dims[k]))
                continue
            blocks = [proj @ M.maps[(h, k, g)] for g in atom.cosets[k]]
            values = vstack(blocks, M.dims[k])
            comps.append(solve_matrix(atom.bases[k], values))
        atoms.append(atom)
        parts.append(comps)
    if not atoms:
        E = zero_system(C)
        emb = SystemMorphism(M, E, [MatrixQ(0, d) for d in M.dims])
        if not M.is_zero():
            raise EnvelopeError("envelope construction failed: nonzero system with zero socle")
        return Envelope(E, emb, [])
    E = direct_sum([a.realized for a in atoms])
    comps = [vstack([p[k] for p in parts], M.dims[k]) for k in range(len(C))]
    emb = SystemMorphism(M, E, comps)
    bad = emb.naturality_failure()
    if bad is not None:
        raise EnvelopeError(f"envelope construction failed: embedding not natural at {bad}")
    for k, A in enumerate(comps):
        if rank(A) != M.dims[k]:
            raise EnvelopeError(f"envelope construction failed: not injective at object {k}")
    return Envelope(E, emb, atoms)


@dataclass
class Resolution:
    """0 -> M -> I^0 -> I^1 -> ...; maps[0] is M -> I^0, maps[p+1] is I^p -> I^{p+1}."""

    source: CoefficientSystem
    terms: list[CoefficientSystem]
    maps: list[SystemMorphism]
    atoms: list[list[InjectiveAtom]]

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def length(self) -> int:
        """Index of the last nonzero term, so 0 -> M -> I^0 has length 0; -1 for M = 0."""
        return len(self.terms) - 1

    def differential(self, p: int) -> SystemMorphism:
        """I^p -> I^{p+1}."""
        return self.maps[p + 1]

    def is_exact(self) -> bool:
        C = self.source.category
        if not self.terms:
            return self.source.is_zero()
        for k in range(len(C)):
            if rank(self.maps[0].components[k]) != self.source.dims[k]:
                return False
            for p, I in enumerate(self.terms):
                r_in = rank(self.maps[p].components[k])
                r_out = rank(self.maps[p + 1].components[k]) if p + 1 < len(self.maps) else 0
                if r_in + r_out != I.dims[k]:
                    return False
        for a, b in zip(self.maps, self.maps[1:]):
            if not a.then(b).is_zero():
                return False
        return True

    def is_minimal(self) -> bool:
        """Every differential vanishes on the socle of its source.

        The socle (V_H at G/H) is a semisimple subsystem, and a resolution is
        minimal exactly when each I^p is an essential extension of the image
        of the previous map, i.e. when d^p kills socle(I^p).
        """
        for p, I in enumerate(self.terms):
            if p + 1 >= len(self.maps):
                break
            d = self.maps[p + 1]
            soc = socle_parts(I)
            for h, B in enumerate(soc.subspaces):
                if B.cols and not (d.components[h] @ B).is_zero():
                    return False
        return True


def injective_resolution(M: CoefficientSystem, max_len: int | None = None) -> Resolution:
    """Minimal injective resolution; ``max_len`` bounds the length (last index).

    The default is L - 1 with L the number of subgroups in a longest chain.
    """
    C = M.category
    if max_len is None:
        max_len = longest_chain_length(C.group) - 1
    terms, maps, atoms = [], [], []
    if M.is_zero():
        return Resolution(M, terms, maps, atoms)
    env = injective_envelope(M)
    terms.append(env.system)
    maps.append(env.embedding)
    atoms.append(env.atoms)
    Q, proj = cokernel_system(env.embedding)
    while not Q.is_zero():
        if len(terms) > max_len:
            raise EnvelopeError(f"resolution longer than {max_len}; "
                                "this contradicts the global dimension bound")
        env = injective_envelope(Q)
        terms.append(env.system)
        maps.append(proj.then(env.embedding))
        atoms.append(env.atoms)
        Q, proj = cokernel_system(env.embedding)
    return Resolution(M, terms, maps, atoms)
