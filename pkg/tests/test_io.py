import json

import pytest

from tirs import fixtures
from tirs.errors import UnsupportedKind
from tirs.functors import rho
from tirs.io import (detect_kind, dump_structure, export_dot, hasse_dot,
                     load_structure, parse_structure, save_structure)
from tirs.lattice import FiniteLattice
from tirs.ploscica import dual_graph
from tirs.structures import Frame, Graph


class TestDetect:
    def test_kinds(self):
        assert detect_kind({"elements": [], "covers": []}) == "lattice"
        assert detect_kind({"vertices": [], "edges": []}) == "graph"
        assert detect_kind({"x1": [], "x2": [], "r": []}) == "frame"
        assert detect_kind({"map": []}) == "graph-morphism"
        assert detect_kind({"map1": [], "map2": []}) == "frame-morphism"

    def test_unknown(self):
        with pytest.raises(UnsupportedKind):
            detect_kind({"nodes": []})


class TestRoundtrip:
    def test_lattice(self, tmp_path):
        L = fixtures.n5()
        p = tmp_path / "n5.json"
        save_structure(L, p)
        back = load_structure(p)
        assert isinstance(back, FiniteLattice)
        assert back.elements == L.elements and back.leq == L.leq

    def test_graph_with_meta(self, tmp_path):
        g = dual_graph(fixtures.n5())
        p = tmp_path / "g.json"
        save_structure(g, p)
        back = load_structure(p)
        assert back == g
        assert back.meta == g.meta

    def test_frame(self, tmp_path):
        f = rho(dual_graph(fixtures.m3()))
        p = tmp_path / "f.json"
        save_structure(f, p)
        back = load_structure(p)
        assert back == f

    def test_dump_is_stable_json(self):
        s = dump_structure(fixtures.diagonal_frame())
        assert json.loads(s) == json.loads(dump_structure(
            fixtures.diagonal_frame()))

    def test_morphism_payload_stays_raw(self):
        payload = {"map": [["a", "b"]]}
        assert parse_structure(payload) is payload


class TestDot:
    def test_graph_loops_suppressed(self):
        g = dual_graph(fixtures.n5())
        out = export_dot(g)
        assert out.count("->") == 2
        assert '"p1" -> "p2";' in out

    def test_graph_loops_included(self):
        out = export_dot(dual_graph(fixtures.n5()), include_loops=True)
        assert out.count("->") == 5

    def test_frame(self):
        out = export_dot(fixtures.diagonal_frame())
        assert '"1:a" [shape=box];' in out
        assert '"2:a" [shape=ellipse];' in out
        assert out.count("->") == 3

    def test_lattice_rejected(self):
        with pytest.raises(UnsupportedKind):
            export_dot(fixtures.n5())

    def test_other_rejected(self):
        with pytest.raises(UnsupportedKind):
            export_dot({"not": "a structure"})

    def test_hasse_n5(self):
        out = hasse_dot(fixtures.n5())
        assert out.count("->") == 5
        assert "rankdir=BT" in out
        assert '"0" -> "a";' in out
