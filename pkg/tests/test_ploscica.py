import pytest

from tirs import fixtures
from tirs.errors import DegenerateLattice, MismatchedCarrier
from tirs.lattice import build_lattice
from tirs.ploscica import dual_graph, maximal_pairs, mph_leq
from tirs.structures import check_graph

from oracles import brute_maximal_pairs


def pair_generators(L):
    return [(L.name(p.x), L.name(p.y)) for p in maximal_pairs(L)]


class TestMaximalPairs:
    def test_c2(self):
        assert pair_generators(fixtures.c2()) == [("1", "0")]

    def test_n5(self):
        assert pair_generators(fixtures.n5()) == \
            [("a", "b"), ("b", "c"), ("c", "a")]

    def test_m3_six_pairs(self):
        got = pair_generators(fixtures.m3())
        assert sorted(got) == sorted((x, y) for x in "abc" for y in "abc"
                                     if x != y)

    @pytest.mark.parametrize("name", ["C2", "C3", "B2", "M3", "N5"])
    def test_against_subset_oracle(self, name):
        L = fixtures.all_lattices()[name]
        got = {(p.ones, p.zeros) for p in maximal_pairs(L)}
        assert got == brute_maximal_pairs(L)

    def test_degenerate(self):
        with pytest.raises(DegenerateLattice):
            maximal_pairs(build_lattice(["x"], []))


class TestDualGraph:
    def test_c2_single_loop(self):
        g = dual_graph(fixtures.c2())
        assert g.vertices == ("p0",)
        assert g.edges == {("p0", "p0")}

    def test_n5_edge_table(self):
        g = dual_graph(fixtures.n5())
        assert g.vertices == ("p0", "p1", "p2")
        assert g.edges == {("p0", "p0"), ("p1", "p1"), ("p2", "p2"),
                           ("p1", "p2"), ("p2", "p0")}
        # E is not transitive: p1 E p2 and p2 E p0 but not p1 E p0
        assert not g.has("p1", "p0")

    def test_b2_discrete(self):
        g = dual_graph(fixtures.b2())
        assert len(g.vertices) == 2
        assert g.edges == {(v, v) for v in g.vertices}

    def test_m3_edge_rule(self):
        g = dual_graph(fixtures.m3())
        assert len(g.vertices) == 6
        pairs = {v: tuple(g.meta[v]["ones"]) for v in g.vertices}
        for u in g.vertices:
            for v in g.vertices:
                x = min(set(pairs[u]) - {"1"})  # the filter atom
                z = min(set(g.meta[v]["zeros"]) - {"0"})  # the ideal atom
                assert g.has(u, v) == (x != z)

    @pytest.mark.parametrize("name", ["C2", "C3", "B2", "M3", "N5"])
    def test_duals_are_tirs(self, name):
        g = dual_graph(fixtures.all_lattices()[name])
        assert check_graph(g).is_tirs

    def test_vertex_metadata_carries_the_pair(self):
        g = dual_graph(fixtures.n5())
        assert g.meta["p0"] == {"ones": ["1", "a", "c"], "zeros": ["0", "b"]}


class TestMphOrder:
    def test_reflexive(self):
        for p in maximal_pairs(fixtures.n5()):
            assert mph_leq(p, p)

    def test_n5_inclusions(self):
        f1, f2, f3 = maximal_pairs(fixtures.n5())
        assert mph_leq(f3, f1)  # {c,1} inside {a,c,1}
        assert not mph_leq(f1, f2)  # a not above b

    def test_mismatched_carriers(self):
        p1 = maximal_pairs(fixtures.n5())[0]
        p2 = maximal_pairs(fixtures.m3())[0]
        with pytest.raises(MismatchedCarrier):
            mph_leq(p1, p2)
