import json

import pytest

from zkbredon.cli import main

D8 = "gens=(0 1 2 3),(0 1)(2 3)"


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_homology(capsys):
    code, out = run(capsys, "homology", "--complex", "ngon:4")
    assert code == 0 and out["betti"] == [1, 2, 1]


def test_quotient_from_file(capsys, tmp_path):
    path = tmp_path / "star4.json"
    path.write_text(json.dumps({"vertices": 4, "facets": [[0, 1], [0, 2], [0, 3]]}))
    code, out = run(capsys, "quotient", "--complex", str(path), "--group", "gens=(1 2 3)")
    assert code == 0
    assert out["k"] == 1 and out["quotient"] == {"vertices": 1, "facets": [[0]]}


def test_bredon_constant(capsys):
    code, out = run(capsys, "bredon", "--complex", "boundary:3", "--group", D8,
                    "--coeff", "constant")
    assert code == 0
    assert out["H"] == [1, 0, 0, 0]
    assert all(out["checks"].values())


def test_domain_error(capsys):
    code, out = run(capsys, "validate", "--complex", "ngon:4", "--group", "gens=(0 1)")
    assert code == 1 and "face not preserved" in out["error"]
    assert {"perm": "(0 1)", "face": [1, 2]} in out["witnesses"]


def test_malformed_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"vertices": 3,')
    code, out = run(capsys, "validate", "--complex", str(path))
    assert code == 1 and "line" in out["error"]


def test_usage_error(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["homology", "--no-such-flag"]) == 2


def test_resolve_and_envelope(capsys):
    code, out = run(capsys, "resolve", "--degree", "4", "--group", D8, "--coeff", "point")
    assert code == 0 and out["length"] == 2 and out["exact"] and out["minimal"]
    code, out = run(capsys, "envelope", "--degree", "4", "--group", D8, "--coeff", "point",
                    "--matrices")
    assert out["dims"] == [1] * 8 and "embedding" in out


def test_hom_and_template(capsys, tmp_path):
    code, out = run(capsys, "hom", "--complex", "boundary:3", "--group", D8,
                    "--source", "homology:0", "--coeff", "constant")
    assert code == 0 and out["dim"] == 1
    code, t = run(capsys, "coeffsys-template", "--degree", "4", "--group", D8)
    assert len(t["maps"]) == 50
    # fill the template with the constant system and read it back
    t["dims"] = [1] * 8
    for entry in t["maps"]:
        entry["matrix"] = [["1"]]
    path = tmp_path / "const.json"
    path.write_text(json.dumps(t))
    code, out = run(capsys, "hom", "--degree", "4", "--group", D8, "--source", str(path),
                    "--coeff", "constant")
    assert code == 0 and out["dim"] == 1


def test_ext(capsys):
    code, out = run(capsys, "ext", "--complex", "boundary:3", "--group", D8, "--coeff", "point",
                    "--threads", "2")
    assert out["raw_hom"] == [[1, 0, 0, 0], [3, 0, 0, 0], [3, 1, 0, 0]]


@pytest.mark.parametrize("argv", [
    ["orbitcat", "--degree", "4", "--group", "sym"],
    ["bredon", "--complex", "ngon:4", "--group", D8, "--coeff", "point", "--matrices"],
    ["fixed", "--complex", "boundary:3", "--group", "sym", "--subgroup", "gens=(0 1)"],
])
def test_deterministic(capsys, argv):
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_fixed_shape(capsys):
    code, out = run(capsys, "fixed", "--complex", "boundary:3", "--group", "sym",
                    "--subgroup", "gens=(0 1)(2 3)")
    assert out["sphere"] == "S^1" and out["betti"] == [1, 1]


def test_aut_and_orbits(capsys):
    code, out = run(capsys, "aut", "--complex", "trilinder")
    assert out["order"] == 12
    code, out = run(capsys, "orbits", "--complex", "ngon:5", "--group", "gens=(0 1 2 3 4)")
    assert out["orbits"] == [[0, 1, 2, 3, 4]]
