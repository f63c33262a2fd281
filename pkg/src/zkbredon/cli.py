"""``zk`` command line.  Every subcommand prints one deterministic JSON document."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .action import (ActionError, aut_group, fixed_point_shape, strong_quotient, validate_action,
                     vertex_orbits)
from .bredon import (BredonError, equivariant_cells, ext_table, homology_systems,
                     ucss_consistency)
from .coeffsys import (CoefficientSystem, SystemError_, constant_system, free_point_system,
                       hom_space, homology_system, template, zero_system)
from .doman import EnvelopeError, injective_envelope, injective_resolution
from .groups import GroupError, PermGroup, parse_group
from .orbitcat import build_orbit_category
from .simplicial import ComplexError, SimplicialComplex, parse_complex
from .zcomplex import ZComplexError, fixed_subcomplex, homology, triangulate

DOMAIN_ERRORS = (ComplexError, GroupError, ActionError, ZComplexError, SystemError_,
                 EnvelopeError, BredonError)


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    complex: str | None = None
    group: str | None = None
    subgroup: str | None = None
    coeff: str = "constant"
    source: str | None = None
    degree: int | None = None
    matrices: bool = False
    cycles: bool = False
    output: Path | None = None
    threads: int = 1
    max_vertices: int | None = None
    extra: dict = field(default_factory=dict)


def _read_json(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from None


def load_complex(spec: str) -> SimplicialComplex:
    if spec.endswith(".json"):
        data = _read_json(spec)
        try:
            return SimplicialComplex.from_json(data)
        except (KeyError, TypeError) as e:
            raise InputError(f"{spec}: expected {{'vertices', 'facets'}} ({e})") from None
    return parse_complex(spec)


def load_group(spec: str | None, degree: int) -> PermGroup:
    if spec is None:
        return PermGroup(degree)
    if spec.endswith(".json"):
        return PermGroup.from_json(_read_json(spec))
    return parse_group(spec, degree)


def load_coeff(spec: str, C, K=None, G=None, max_vertices=None) -> CoefficientSystem:
    if spec == "constant":
        return constant_system(C)
    if spec in ("point", "free-point", "M"):
        return free_point_system(C)
    if spec == "zero":
        return zero_system(C)
    if spec.startswith("homology:"):
        if K is None:
            raise InputError("homology coefficients need --complex")
        return homology_system(K, G, int(spec.split(":")[1]), C, max_vertices=max_vertices)
    return CoefficientSystem.from_json(_read_json(spec), C)


def _dump(obj, cfg: RunConfig) -> None:
    text = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    if cfg.output:
        cfg.output.write_text(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands


def _setup(cfg: RunConfig, need_group: bool = True):
    if cfg.complex is None:
        raise InputError("--complex is required")
    K = load_complex(cfg.complex)
    G = load_group(cfg.group, K.num_vertices) if need_group else None
    if G is not None:
        validate_action(K, G)
    return K, G


def cmd_validate(cfg):
    K, G = _setup(cfg)
    return {"valid": True, "vertices": K.num_vertices, "f_vector": list(K.f_vector()),
            "group_order": G.order}


def cmd_aut(cfg):
    K, _ = _setup(cfg, need_group=False)
    G = aut_group(K)
    return {"order": G.order, "generators": [g.cycles() for g in G.generators],
            "group": G.to_json()}


def cmd_orbits(cfg):
    K, G = _setup(cfg)
    return {"orbits": [list(o) for o in vertex_orbits(K.num_vertices, G.generators)]}


def cmd_quotient(cfg):
    K, G = _setup(cfg)
    return strong_quotient(validate_action(K, G)).to_json()


def cmd_fixed(cfg):
    K, G = _setup(cfg)
    H = load_group(cfg.subgroup, K.num_vertices) if cfg.subgroup else G
    shape = fixed_point_shape(validate_action(K, G), H)
    X = fixed_subcomplex(K, H, max_vertices=cfg.max_vertices)
    out = shape.to_json()
    out["betti"] = [X.homology_basis.betti(n) for n in range(X.top_dim + 1)]
    return out


def cmd_homology(cfg):
    K, G = _setup(cfg)
    X = triangulate(K, cfg.max_vertices)
    if G.order > 1:
        X = fixed_subcomplex(K, G, X)
    out = {"betti": [X.homology_basis.betti(n) for n in range(X.top_dim + 1)],
           "cells": X.num_cells}
    if cfg.cycles:
        out["cycles"] = [[{str(i): str(v) for i, v in sorted(z.items())} for z in homology(X, n)]
                         for n in range(X.top_dim + 1)]
    return out


def cmd_orbitcat(cfg):
    degree = load_complex(cfg.complex).num_vertices if cfg.complex else cfg.degree
    if degree is None:
        raise InputError("give --complex or --degree")
    G = load_group(cfg.group, degree)
    return build_orbit_category(G).to_json()


def _category(cfg):
    if cfg.complex:
        K, G = _setup(cfg)
    else:
        if cfg.degree is None:
            raise InputError("give --complex or --degree")
        K, G = None, load_group(cfg.group, cfg.degree)
    return K, G, build_orbit_category(G)


def cmd_template(cfg):
    _, _, C = _category(cfg)
    return template(C)


def cmd_hom(cfg):
    K, G, C = _category(cfg)
    if cfg.source is None:
        raise InputError("--source is required")
    M = load_coeff(cfg.source, C, K, G, cfg.max_vertices)
    N = load_coeff(cfg.coeff, C, K, G, cfg.max_vertices)
    dim, basis = hom_space(M, N)
    out = {"dim": dim}
    if cfg.matrices:
        out["basis"] = [[A.to_json() for A in phi.components] for phi in basis]
    return out


def cmd_envelope(cfg):
    K, G, C = _category(cfg)
    M = load_coeff(cfg.coeff, C, K, G, cfg.max_vertices)
    env = injective_envelope(M)
    out = {"dims": env.system.dims,
           "atoms": [{"subgroup": a.h, "dim": a.rep.dim, "dims": a.realized.dims}
                     for a in env.atoms]}
    if cfg.matrices:
        out["system"] = env.system.to_json()
        out["embedding"] = [A.to_json() for A in env.embedding.components]
    return out


def cmd_resolve(cfg):
    K, G, C = _category(cfg)
    M = load_coeff(cfg.coeff, C, K, G, cfg.max_vertices)
    R = injective_resolution(M)
    out = {"length": R.length, "num_terms": len(R), "dims": [I.dims for I in R.terms], "exact": R.is_exact(),
           "minimal": R.is_minimal(), "objects": C.labels()}
    if cfg.matrices:
        out["terms"] = [I.to_json() for I in R.terms]
        out["maps"] = [[A.to_json() for A in d.components] for d in R.maps]
    return out


def cmd_ext(cfg):
    K, G = _setup(cfg)
    C = build_orbit_category(G)
    M = load_coeff(cfg.coeff, C, K, G, cfg.max_vertices)
    X = triangulate(K, cfg.max_vertices)
    table = ext_table(homology_systems(K, G, C, X), M, threads=cfg.threads)
    return table.to_json()


def cmd_bredon(cfg):
    K, G = _setup(cfg)
    C = build_orbit_category(G)
    M = load_coeff(cfg.coeff, C, K, G, cfg.max_vertices)
    rep = ucss_consistency(K, G, M, threads=cfg.threads)
    out = rep.to_json()
    if cfg.matrices:
        out["cells"] = equivariant_cells(K, G, C).to_json()
    return out


def cmd_paper_suite(cfg):
    from .suite import run_suite

    rows = run_suite()
    cfg.extra["failed"] = sum(1 for r in rows if not r["pass"])
    return {"results": rows, "passed": sum(r["pass"] for r in rows), "total": len(rows)}


COMMANDS = {
    "validate": cmd_validate, "aut": cmd_aut, "orbits": cmd_orbits, "quotient": cmd_quotient,
    "fixed": cmd_fixed, "homology": cmd_homology, "orbitcat": cmd_orbitcat,
    "coeffsys-template": cmd_template, "hom": cmd_hom, "envelope": cmd_envelope,
    "resolve": cmd_resolve, "ext": cmd_ext, "bredon": cmd_bredon, "paper-suite": cmd_paper_suite,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zk", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--complex", help="boundary:m, simplex:m, ngon:n, star, trilinder, e7 or a JSON file")
        s.add_argument("--group", help="'gens=(0 1 2 3),(0 1)(2 3)', 'sym', 'trivial' or a JSON file")
        s.add_argument("--subgroup", help="subgroup generators, for `fixed`")
        s.add_argument("--coeff", default="constant",
                       help="constant, point, zero, homology:q or a JSON file")
        s.add_argument("--source", help="source system for `hom` (same forms as --coeff)")
        s.add_argument("--degree", type=int, help="permutation degree when no complex is given")
        s.add_argument("--matrices", action="store_true", help="include all matrices")
        s.add_argument("--cycles", action="store_true", help="include cycle representatives")
        s.add_argument("--output", type=Path)
        s.add_argument("--threads", type=int, default=1)
        s.add_argument("--max-vertices", type=int)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    cfg = RunConfig(**{k: v for k, v in vars(ns).items()})
    try:
        result = COMMANDS[cfg.command](cfg)
    except InputError as e:
        _dump({"error": str(e)}, cfg)
        return 1
    except DOMAIN_ERRORS as e:
        out = {"error": str(e)}
        if isinstance(e, ActionError) and e.witnesses:
            out["witnesses"] = [{"perm": g.cycles(), "face": list(f)} for g, f in e.witnesses]
        _dump(out, cfg)
        return 1
    _dump(result, cfg)
    return 1 if cfg.extra.get("failed") else 0


if __name__ == "__main__":
    sys.exit(main())
