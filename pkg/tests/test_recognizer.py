import pytest

from latbic.recognizer import (decide_lpm, decide_lpm_via_minors,
                               decide_lpm_via_oracle, cross_check,
                               bicircular_connected, HypothesisViolation,
                               BudgetExceeded)
from latbic.catalog import FamilySpec, family_generate, excluded_minor
from latbic.bicircular import bicircular
from latbic.multigraph import graph_from_edges, subdivide_edge
from latbic.enumeration import connected_multigraphs


def k4():
    return graph_from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


class TestDecideLpm:
    def test_g1_210_yes_family_f1(self):
        g, _ = family_generate(FamilySpec("F1", "G1", {"r": 2, "d": 1, "b": 0}))
        dec = decide_lpm(g)
        assert dec.verdict == "yes" and dec.route == "family"
        assert dec.certificate.family == "F1"

    def test_w3_no(self):
        g, _ = excluded_minor("W3")
        dec = decide_lpm(g)
        assert dec.verdict == "no"

    def test_k4_yes_f0(self):
        dec = decide_lpm(k4())
        assert dec.verdict == "yes"
        assert dec.certificate.family == "F0"

    def test_disconnected_matroid_refused(self):
        g = graph_from_edges([(1, 2), (2, 3), (3, 1), (1, 4)])  # leaf edge
        with pytest.raises(HypothesisViolation):
            decide_lpm(g)

    def test_per_component_flag(self):
        g = graph_from_edges([(1, 2), (1, 2), (1, 2),
                              (5, 6), (5, 6), (5, 6)])
        dec = decide_lpm(g, per_component=True)
        assert dec.verdict == "yes"

    def test_edgeless_trivially_yes(self):
        g = graph_from_edges([], isolated=[1])
        dec = decide_lpm(g)
        assert dec.verdict == "yes"
        assert dec.connectivity["empty_matroid"]


class TestDecideViaMinors:
    def test_3k3_certificate(self):
        g, _ = excluded_minor("B1")
        dec = decide_lpm_via_minors(g)
        assert dec.verdict == "no"
        assert dec.certificate["name"] == "B1"
        assert dec.certificate["delete"] == [] and dec.certificate["contract"] == []

    def test_theta_yes(self):
        g = graph_from_edges([(1, 3), (3, 2), (1, 4), (4, 2), (1, 2)])
        assert decide_lpm_via_minors(g).verdict == "yes"

    def test_triple_subdivided_k4_gives_c24(self):
        g, _ = subdivide_edge(k4(), 1, 2)
        g, _ = subdivide_edge(g, 4, 2)
        g, _ = subdivide_edge(g, 6, 2)
        dec = decide_lpm_via_minors(g)
        assert dec.verdict == "no"
        assert dec.certificate["name"] == "C24"

    def test_budget(self):
        g, _ = family_generate(FamilySpec("F2", "2K3", {"r": 5, "b": 4}))
        with pytest.raises(BudgetExceeded):
            decide_lpm_via_minors(g, max_edges=12)


class TestCrossCheck:
    def test_2k3_11_three_yes(self):
        g, _ = family_generate(FamilySpec("F2", "2K3", {"r": 1, "b": 1}))
        rep = cross_check(g)
        assert rep.agree and rep.verdicts == ("yes", "yes", "yes")

    def test_r3_three_no(self):
        g, _ = excluded_minor("R3")
        rep = cross_check(g)
        assert rep.agree and rep.verdicts == ("no", "no", "no")

    def test_small_population_sample(self):
        checked = 0
        for m, g in connected_multigraphs(5):
            if not bicircular_connected(g):
                continue
            rep = cross_check(g)
            assert rep.agree, (g, rep.verdicts, rep.error)
            checked += 1
        assert checked > 20


class TestConnectivityRule:
    def test_matches_matroid_on_small_graphs(self):
        for m, g in connected_multigraphs(6):
            assert bicircular_connected(g) == bicircular(g).is_connected(), g

    def test_certificates_replay(self):
        g, _ = family_generate(FamilySpec("F1", "G1", {"r": 1, "d": 0, "b": 1},
                                          {"red": 2}))
        dec = decide_lpm(g)
        assert dec.verdict == "yes"
        from latbic.multigraph import graphs_isomorphic
        assert graphs_isomorphic(dec.certificate.replay(), g)

        dec2 = decide_lpm_via_oracle(g)
        assert dec2.verdict == "yes"
