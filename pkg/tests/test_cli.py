import json
from pathlib import Path

import pytest

from kempfness.cli import dump_json, main

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"
CUT_CUBE = str(DATA / "cut_cube.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


class TestValidate:
    def test_cut_cube(self, capsys):
        code, out, _ = run(capsys, "validate", "--input", CUT_CUBE)
        assert code == 0
        assert out.splitlines()[0] == "simple: true, m=8, n=3, G: rank 5"
        assert "regular: true" in out and "complete: true" in out

    def test_three_rays(self, capsys):
        code, out, _ = run(capsys, "validate", "--input", str(DATA / "three_rays_fan.json"))
        assert code == 0
        assert out.startswith("complete: false")

    def test_torsion_fan(self, capsys):
        code, out, _ = run(capsys, "validate", "--input", str(DATA / "torsion_fan.json"), "--format", "json")
        assert json.loads(out)["G"] == {"rank": 2, "torsion": [2]}

    def test_malformed_json(self, capsys, tmp_path):
        code, _, err = run(capsys, "validate", "--input", write(tmp_path, "bad.json", "{not json"))
        assert code == 2 and "error" in err

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "validate", "--input", str(tmp_path / "nope.json"))[0] == 2

    def test_invalid_fan(self, capsys, tmp_path):
        path = write(tmp_path, "line.json", {"n": 2, "rays": [[1, 0], [-1, 0]], "maximal_cones": [[1, 2]]})
        code, _, err = run(capsys, "validate", "--input", path)
        assert code == 2 and "line" in err.lower()

    def test_unbounded_polytope(self, capsys, tmp_path):
        path = write(tmp_path, "half.json", {"n": 1, "A": [[1]], "b": [0]})
        assert run(capsys, "validate", "--input", path)[0] == 2

    def test_non_simplicial(self, capsys, tmp_path):
        fan = {"n": 3, "rays": [[1, 0, 1], [0, 1, 1], [-1, 0, 1], [0, -1, 1]], "maximal_cones": [[1, 2, 3, 4]]}
        assert run(capsys, "validate", "--input", write(tmp_path, "sq.json", fan))[0] == 3


class TestBetti:
    def test_cut_cube(self, capsys):
        code, out, _ = run(capsys, "betti", "--input", CUT_CUBE)
        assert code == 0
        assert out.splitlines()[0] == "betti: (1, 0, 0, 10, 16, 5, 5, 16, 10, 0, 0, 1)"
        assert "torsion: none" in out and "poincare duality: true" in out

    def test_simplex3(self, capsys):
        code, out, _ = run(capsys, "betti", "--input", str(DATA / "simplex3.json"), "--format", "json")
        assert json.loads(out)["betti"] == [1, 0, 0, 0, 0, 0, 0, 1]

    def test_square(self, capsys):
        code, out, _ = run(capsys, "betti", "--input", str(DATA / "square.json"), "--format", "json")
        data = json.loads(out)
        assert data["betti"] == [1, 0, 0, 2, 0, 0, 1] and data["poincare_duality"]

    def test_incomplete_fan(self, capsys):
        code, out, _ = run(capsys, "betti", "--input", str(DATA / "three_rays_fan.json"), "--format", "json")
        data = json.loads(out)
        assert data["betti"] == [1, 0, 0, 3, 2] and not data["complete"]
        assert "poincare_duality" not in data

    def test_not_simple(self, capsys):
        assert run(capsys, "betti", "--input", str(DATA / "square_pyramid.json"))[0] == 3

    def test_json_round_trip(self, capsys):
        _, out, _ = run(capsys, "betti", "--input", CUT_CUBE, "--format", "json")
        assert dump_json(json.loads(out)) == out

    def test_deterministic_across_jobs_and_cache(self, capsys):
        outs = {
            run(capsys, "betti", "--input", CUT_CUBE, "--format", "json", *extra)[1]
            for extra in ([], ["--jobs", "3"], ["--no-cache"], ["--jobs", "2", "--no-cache"])
        }
        assert len(outs) == 1

    def test_cache_written(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setenv("KEMPFNESS_CACHE_DIR", str(tmp_path / "c"))
        run(capsys, "betti", "--input", str(DATA / "square.json"))
        files = list((tmp_path / "c").rglob("*.json"))
        assert len(files) == 16
        assert not list((tmp_path / "c").rglob("*.tmp"))

    def test_bad_jobs(self, capsys):
        assert run(capsys, "betti", "--input", CUT_CUBE, "--jobs", "0")[0] == 2


class TestRing:
    def test_degree_3(self, capsys):
        code, out, _ = run(capsys, "ring", "--input", CUT_CUBE, "--degree", "3")
        lines = out.splitlines()
        assert lines[0] == "H^3 = Z^10: 10 generators"
        gens = sorted(l.strip()[1:-1] for l in lines[1:])
        expected = "u_1v_4 u_1v_7 u_2v_4 u_2v_5 u_2v_8 u_3v_6 u_3v_8 u_5v_6 u_5v_7 u_7v_8".split()
        assert gens == sorted(expected)

    def test_degree_5_has_binomial(self, capsys):
        _, out, _ = run(capsys, "ring", "--input", CUT_CUBE, "--degree", "5", "--format", "json")
        gens = json.loads(out)["generators"]
        assert len(gens) == 5
        assert any("+" in g["cocycle"] or " - " in g["cocycle"] for g in gens)

    def test_cp2_degree_5(self, capsys):
        _, out, _ = run(capsys, "ring", "--input", str(DATA / "cp2_fan.json"), "--degree", "5", "--format", "json")
        assert len(json.loads(out)["generators"]) == 1

    def test_products(self, capsys):
        _, out, _ = run(capsys, "ring", "--input", CUT_CUBE, "--degree", "3", "--products", "--format", "json")
        table = json.loads(out)["products"]
        pairs = {(t["left"], t["right"]) for t in table}
        assert ("u_1v_4", "u_3v_6") in pairs
        assert ("u_1v_4", "u_1v_7") not in pairs


class TestQuadrics:
    def test_cut_cube(self, capsys):
        code, out, _ = run(capsys, "quadrics", "--input", CUT_CUBE, "--facet-order", "1,2,3,4,5,6,7,8")
        assert code == 0
        for eq in (
            "|z_1|^2 + |z_4|^2 - 3 = 0",
            "|z_2|^2 + |z_5|^2 - 3 = 0",
            "|z_3|^2 + |z_6|^2 - 3 = 0",
            "|z_1|^2 - |z_2|^2 + |z_7|^2 - 2 = 0",
            "|z_2|^2 + |z_3|^2 + |z_8|^2 - 5 = 0",
        ):
            assert eq in out.splitlines()
        assert "Cb = (3, 3, 3, 2, 5)" in out

    def test_simplex(self, capsys):
        _, out, _ = run(capsys, "quadrics", "--input", str(DATA / "simplex2.json"))
        assert "|z_1|^2 + |z_2|^2 + |z_3|^2 - 1 = 0" in out

    def test_check(self, capsys):
        _, out, _ = run(capsys, "quadrics", "--input", CUT_CUBE, "--check", "--samples", "200")
        last = out.splitlines()[-1]
        assert last.startswith("max residual") and "< 1e-09" in last
        assert last.endswith("rank 5/5 at 200/200 points")

    def test_bad_facet_order(self, capsys):
        assert run(capsys, "quadrics", "--input", CUT_CUBE, "--facet-order", "1,4,2,3,5,6,7,8")[0] == 2
        assert run(capsys, "quadrics", "--input", CUT_CUBE, "--facet-order", "1,2,3")[0] == 2

    def test_fan_input(self, capsys):
        assert run(capsys, "quadrics", "--input", str(DATA / "cp2_fan.json"))[0] == 2

    def test_not_simple(self, capsys):
        assert run(capsys, "quadrics", "--input", str(DATA / "square_pyramid.json"))[0] == 3

    def test_json_round_trip_and_seed(self, capsys):
        args = ("quadrics", "--input", CUT_CUBE, "--check", "--samples", "50", "--format", "json")
        _, a, _ = run(capsys, *args, "--seed", "4")
        _, b, _ = run(capsys, *args, "--seed", "4")
        assert a == b and dump_json(json.loads(a)) == a


class TestMassey:
    def test_cut_cube(self, capsys):
        code, out, _ = run(capsys, "massey", "--input", CUT_CUBE, "u_1v_4", "u_2v_5", "u_3v_6")
        assert code == 0
        assert out.splitlines()[0] == "defined, NON-trivial, rep ±u_1u_2u_3u_5v_4v_6"

    def test_cp2_trivial(self, capsys):
        code, out, _ = run(capsys, "massey", "--input", str(DATA / "cp2_fan.json"), "v_1", "v_1", "v_2")
        assert code == 0 and out.startswith("defined, trivial")

    def test_not_defined(self, capsys):
        code, out, _ = run(capsys, "massey", "--input", CUT_CUBE, "u_1v_4", "u_3v_6", "u_2v_5")
        assert code == 0 and out.startswith("not defined")

    def test_non_cocycle(self, capsys):
        assert run(capsys, "massey", "--input", CUT_CUBE, "u_1", "u_2v_5", "u_3v_6")[0] == 4

    def test_unparseable(self, capsys):
        assert run(capsys, "massey", "--input", CUT_CUBE, "w_1", "u_2v_5", "u_3v_6")[0] == 4
        assert run(capsys, "massey", "--input", CUT_CUBE, "u_9v_1", "u_2v_5", "u_3v_6")[0] == 4

    def test_json(self, capsys):
        _, out, _ = run(capsys, "massey", "--input", CUT_CUBE, "u_1v_4", "u_2v_5", "u_3v_6", "--format", "json")
        data = json.loads(out)
        assert data["defined"] and data["trivial"] is False and data["degree"] == 8
        assert dump_json(data) == out


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
