"""Minimal injective resolutions of the point system and the H_q(Z(K)) systems.

    python scripts/resolution_report.py --group 'gens=(0 1 2 3),(0 1)(2 3)' --complex boundary:3
"""

import argparse

from zkbredon.coeffsys import free_point_system, homology_system
from zkbredon.doman import injective_resolution
from zkbredon.groups import longest_chain_length, parse_group
from zkbredon.orbitcat import build_orbit_category
from zkbredon.simplicial import parse_complex
from zkbredon.zcomplex import triangulate


def show(name, M):
    R = injective_resolution(M)
    print(f"{name}: length {R.length}, exact={R.is_exact()}, minimal={R.is_minimal()}")
    for p, (I, atoms) in enumerate(zip(R.terms, R.atoms)):
        where = ", ".join(f"H{a.h}^{a.rep.dim}" for a in atoms)
        print(f"  I^{p} = {I.dims}   atoms: {where}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--complex", default="boundary:3")
    ap.add_argument("--group", default="gens=(0 1 2 3),(0 1)(2 3)")
    args = ap.parse_args()
    K = parse_complex(args.complex)
    G = parse_group(args.group, K.num_vertices)
    C = build_orbit_category(G)
    print("objects:", ", ".join(f"{i}={l}" for i, l in enumerate(C.labels())))
    print("longest subgroup chain:", longest_chain_length(G))
    show("point system", free_point_system(C))
    X = triangulate(K)
    for q in range(X.top_dim + 1):
        show(f"H_{q}", homology_system(K, G, q, C, X))


if __name__ == "__main__":
    main()
