import json

import pytest

from tirs import fixtures
from tirs.cli import run
from tirs.functors import rho
from tirs.io import save_structure
from tirs.ploscica import dual_graph


@pytest.fixture
def files(tmp_path):
    paths = {}

    def save(name, obj):
        p = tmp_path / f"{name}.json"
        save_structure(obj, p)
        paths[name] = str(p)
        return paths[name]

    save("n5", fixtures.n5())
    save("m3", fixtures.m3())
    save("dual_n5", dual_graph(fixtures.n5()))
    save("nt4", fixtures.nt4())
    save("diag", fixtures.diagonal_frame())
    save("f2x1", fixtures.f2x1())
    paths["dir"] = str(tmp_path)
    return paths


def write_json(tmp_path, name, payload):
    p = tmp_path / name
    p.write_text(json.dumps(payload))
    return str(p)


class TestCheck:
    def test_lattice_ok(self, files, capsys):
        assert run(["check", files["n5"]]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out == {"kind": "lattice", "elements": 5, "verdict": True}

    def test_tirs_graph_ok(self, files):
        assert run(["check", files["dual_n5"]]) == 0

    def test_non_tirs_graph_fails(self, files, capsys):
        assert run(["check", files["nt4"]]) == 1
        err = json.loads(capsys.readouterr().err)
        assert err["Ti"]["witnesses"][0]["elements"] == ["x", "y"]

    def test_frame(self, files):
        assert run(["check", files["diag"]]) == 0
        assert run(["check", files["f2x1"]]) == 1

    def test_missing_file(self, files):
        assert run(["check", files["dir"] + "/nope.json"]) == 2

    def test_garbage_file(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("not json")
        assert run(["check", str(p)]) == 2


class TestTransforms:
    def test_dual(self, files, capsys):
        assert run(["dual", files["n5"]]) == 0
        out = json.loads(capsys.readouterr().out)
        assert len(out["vertices"]) == 3
        assert len(out["edges"]) == 5

    def test_dual_wants_lattice(self, files):
        assert run(["dual", files["dual_n5"]]) == 2

    def test_rho_then_gr(self, files, capsys, tmp_path):
        assert run(["rho", files["dual_n5"]]) == 0
        frame_json = capsys.readouterr().out
        p = tmp_path / "frame.json"
        p.write_text(frame_json)
        assert run(["gr", str(p)]) == 0
        out = json.loads(capsys.readouterr().out)
        assert len(out["vertices"]) == 3

    def test_canext_both(self, files, capsys):
        assert run(["canext", files["n5"]]) == 0
        blobs = capsys.readouterr().out.split("\n}\n{")
        head = json.loads(blobs[0] + "}")
        assert head["cross_check"] is True

    def test_canext_single_method(self, files, capsys):
        assert run(["canext", files["m3"], "--method", "tandem"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert len(out["closed_sets"]) == 5


class TestRoundtrip:
    def test_lattice(self, files, capsys):
        assert run(["roundtrip", files["m3"]]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["roundtrip"] is True

    def test_graph(self, files):
        assert run(["roundtrip", files["dual_n5"]]) == 0

    def test_frame(self, files):
        assert run(["roundtrip", files["diag"]]) == 0

    def test_non_tirs_graph_is_an_input_error(self, files):
        assert run(["roundtrip", files["nt4"]]) == 2


class TestPti:
    def test_lattice_form(self, files, capsys):
        assert run(["check-pti", files["n5"]]) == 0
        out = json.loads(capsys.readouterr().out)
        assert {"x": "b", "y": "a", "w": "b", "z": "c",
                "status": "satisfied"} in out["pairs"]

    def test_frame_form(self, files):
        assert run(["check-pti", "--frame", files["diag"]]) == 0
        assert run(["check-pti", "--frame", files["f2x1"]]) == 1


class TestMorphisms:
    def test_valid_graph_morphism(self, files, tmp_path, capsys):
        g = dual_graph(fixtures.n5())
        loop = write_json(tmp_path, "loop.json",
                          {"vertices": ["v"], "edges": [["v", "v"]]})
        mor = write_json(tmp_path, "mor.json",
                         {"map": [[v, "v"] for v in g.vertices]})
        assert run(["check-morphism", files["dual_n5"], loop, mor]) == 0
        assert run(["check-naturality", files["dual_n5"], loop, mor]) == 0

    def test_invalid_morphism(self, files, tmp_path):
        # map p1 to p0: edge (p1, p2) has no image edge (p0, p2)
        mor = write_json(tmp_path, "mor.json",
                         {"map": [["p0", "p0"], ["p1", "p0"], ["p2", "p2"]]})
        assert run(["check-morphism", files["dual_n5"], files["dual_n5"],
                    mor]) == 1

    def test_sort_mismatch(self, files, tmp_path):
        mor = write_json(tmp_path, "mor.json", {"map": [["a", "a"]]})
        assert run(["check-morphism", files["diag"], files["diag"],
                    mor]) == 2


class TestGen:
    def test_requires_seed(self):
        assert run(["gen", "--kind", "poset", "--size", "3"]) == 2

    def test_seeded(self, capsys):
        assert run(["gen", "--kind", "poset", "--size", "3", "--seed", "1",
                    "--count", "2"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert len(out) == 2

    def test_exhaustive(self, capsys):
        assert run(["gen", "--kind", "poset", "--size", "3",
                    "--exhaustive"]) == 0
        assert len(json.loads(capsys.readouterr().out)) == 5


class TestExportDot:
    def test_graph(self, files, capsys):
        assert run(["export-dot", files["dual_n5"]]) == 0
        assert capsys.readouterr().out.count("->") == 2

    def test_lattice_needs_hasse(self, files, capsys):
        assert run(["export-dot", files["n5"]]) == 2
        assert run(["export-dot", files["n5"], "--hasse"]) == 0
        assert capsys.readouterr().out.count("->") == 5


class TestSuite:
    def test_runs_green(self, capsys, monkeypatch):
        monkeypatch.setenv("TIRS_SUITE_MAXSIZE", "4")
        assert run(["suite", "--seed", "0"]) == 0
        lines = [l for l in capsys.readouterr().out.splitlines() if l]
        assert len(lines) == 13
        assert all(l.startswith("PASS ") for l in lines)


class TestUsage:
    def test_no_command(self):
        assert run([]) == 2

    def test_unknown_command(self):
        assert run(["frobnicate"]) == 2
