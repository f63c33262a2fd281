"""Fixed sets of Z(K) for every subgroup class of Aut(K), against 2^k Z(K//H).

    python scripts/fixed_point_survey.py boundary:3 ngon:5 trilinder
"""

import sys

from zkbredon.action import aut_group
from zkbredon.simplicial import parse_complex
from zkbredon.suite import fixed_point_identity


def survey(spec):
    K = parse_complex(spec)
    G = aut_group(K)
    print(f"{spec}: |Aut| = {G.order}")
    for label, fixed, predicted in fixed_point_identity(K, G):
        mark = "ok" if fixed == predicted else "MISMATCH"
        print(f"  {label:32s} b = {fixed}  2^k b(Z(K//H)) = {predicted}  {mark}")


if __name__ == "__main__":
    for spec in sys.argv[1:] or ["boundary:3", "ngon:4", "star", "trilinder"]:
        survey(spec)
