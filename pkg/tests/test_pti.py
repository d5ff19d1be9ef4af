import pytest

from tirs import fixtures
from tirs.errors import NotRS
from tirs.functors import rho
from tirs.galois import closed_sets
from tirs.pti import (PTiWitness, check_pti, check_pti_frame_form,
                      pti_bridge_suite)
from tirs.ploscica import dual_graph


def rho_dual(L):
    return rho(dual_graph(L))


class TestLatticeForm:
    @pytest.mark.parametrize("name", ["C2", "C3", "B2", "M3", "N5"])
    def test_fixtures_satisfy_pti(self, name):
        rep, _ = check_pti(fixtures.all_lattices()[name])
        assert rep

    def test_n5_witness_for_b_a(self):
        _, wits = check_pti(fixtures.n5())
        by_pair = {(w.x, w.y): w for w in wits}
        assert by_pair[("b", "a")] == PTiWitness("b", "a", "b", "c",
                                                 "satisfied")
        assert all(w.status == "satisfied" for w in wits)

    def test_c2_has_one_pair(self):
        _, wits = check_pti(fixtures.c2())
        assert wits == [PTiWitness("1", "0", "1", "0", "satisfied")]

    def test_m3_all_off_diagonal_pairs(self):
        _, wits = check_pti(fixtures.m3())
        assert {(w.x, w.y) for w in wits} == \
            {(x, y) for x in "abc" for y in "abc" if x != y}

    def test_closed_set_lattices_satisfy_pti(self):
        for L in fixtures.all_lattices().values():
            gl = closed_sets(rho_dual(L))
            rep, _ = check_pti(gl.as_lattice, all_witnesses=True)
            assert rep


class TestFrameForm:
    def test_diagonal_true(self):
        assert check_pti_frame_form(fixtures.diagonal_frame())

    def test_f2x1_false(self):
        rep = check_pti_frame_form(fixtures.f2x1())
        assert not rep
        assert rep.witnesses[0].condition == "PTi-frame"

    def test_rho_duals_true(self):
        for L in fixtures.all_lattices().values():
            assert check_pti_frame_form(rho_dual(L))

    def test_ladder_truncations_true(self):
        for n in (3, 4, 5):
            assert check_pti_frame_form(fixtures.ladder_truncation(n))

    def test_all_witnesses_flag(self):
        rep = check_pti_frame_form(fixtures.f2x1(), all_witnesses=True)
        assert len(rep.witnesses) >= 1


class TestBridge:
    def test_fixture_frames(self):
        assert pti_bridge_suite(fixtures.diagonal_frame())
        assert pti_bridge_suite(fixtures.ladder_truncation(3))

    def test_rho_duals(self):
        for L in fixtures.all_lattices().values():
            assert pti_bridge_suite(rho_dual(L))

    def test_rejects_non_rs_input(self):
        with pytest.raises(NotRS):
            pti_bridge_suite(fixtures.f2x1())
