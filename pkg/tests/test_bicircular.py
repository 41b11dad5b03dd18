import itertools
import random

import pytest

from latbic.bicircular import (bicircular, is_bicircular_independent,
                               classify_circuit, is_circuit, bicircular_rank)
from latbic.matroid import is_isomorphic, uniform, extend_series
from latbic.multigraph import graph_from_edges, delete_edge, contract_edge, \
    subdivide_edge
from latbic.enumeration import connected_multigraphs


def theta(*arc_lens):
    pairs = []
    nxt = 3
    for L in arc_lens:
        chain = [1] + list(range(nxt, nxt + L - 1)) + [2]
        nxt += L - 1
        pairs.extend(zip(chain, chain[1:]))
    return graph_from_edges(pairs)


def k4():
    return graph_from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


class TestUniformIdentifications:
    def test_k4_is_u46(self):
        assert is_isomorphic(bicircular(k4()), uniform(4, 6)) is not None

    def test_2k3_is_u36(self):
        g = graph_from_edges([(1, 2), (1, 2), (1, 3), (1, 3), (2, 3), (2, 3)])
        assert is_isomorphic(bicircular(g), uniform(3, 6)) is not None

    def test_k3_110_is_u35(self):
        g = graph_from_edges([(1, 2), (1, 3), (1, 3), (2, 3), (2, 3)])
        assert is_isomorphic(bicircular(g), uniform(3, 5)) is not None

    @pytest.mark.parametrize("n", range(3, 9))
    def test_theta_n(self, n):
        # distribute n edges over three arcs
        a = n - 2
        g = theta(a, 1, 1)
        assert is_isomorphic(bicircular(g), uniform(n - 1, n)) is not None

    @pytest.mark.parametrize("m", range(1, 6))
    def test_mk2_prime(self, m):
        pairs = [(1, 2)] * m + [(1, 1), (2, 2)]
        g = graph_from_edges(pairs)
        assert is_isomorphic(bicircular(g), uniform(2, m + 2)) is not None


class TestIndependence:
    def test_single_loop_independent(self):
        g = graph_from_edges([(1, 1)])
        assert is_bicircular_independent(g, [1])

    def test_two_loops_dependent(self):
        g = graph_from_edges([(1, 1), (1, 1)])
        assert not is_bicircular_independent(g, [1, 2])

    def test_any_five_of_k4_dependent(self):
        g = k4()
        for sub in itertools.combinations(g.edge_ids(), 5):
            assert not is_bicircular_independent(g, sub)

    def test_foreign_edge(self):
        with pytest.raises(KeyError):
            is_bicircular_independent(graph_from_edges([(1, 2)]), [7])


class TestClassify:
    def test_theta_graph(self):
        g = theta(2, 2, 1)
        kind = classify_circuit(g, g.edge_ids())
        assert kind.kind == "theta"
        assert len(kind.paths) == 3

    def test_tight_handcuff(self):
        g = graph_from_edges([(1, 1), (1, 1)])
        kind = classify_circuit(g, [1, 2])
        assert kind.kind == "tight-handcuff"

    def test_loose_handcuff(self):
        g = graph_from_edges([(1, 1), (1, 2), (2, 2)])
        kind = classify_circuit(g, [1, 2, 3])
        assert kind.kind == "loose-handcuff"

    def test_subdivided_tight(self):
        g = graph_from_edges([(1, 2), (2, 1), (1, 3), (3, 1)])
        kind = classify_circuit(g, g.edge_ids())
        assert kind.kind == "tight-handcuff"

    def test_not_a_circuit_rejected(self):
        g = theta(1, 1, 1)
        with pytest.raises(ValueError):
            classify_circuit(g, [1, 2])

    def test_every_circuit_classifies(self):
        for _, g in connected_multigraphs(5):
            m = bicircular(g)
            for cm in m.circuit_masks():
                edges = sorted(m.set_of(cm))
                kind = classify_circuit(g, edges)
                assert kind.kind in ("theta", "tight-handcuff", "loose-handcuff")


class TestMinorCommutation:
    def test_exhaustive_small(self):
        rng = random.Random(7)
        count = 0
        for _, g in connected_multigraphs(5):
            m = bicircular(g)
            eids = g.edge_ids()
            e = rng.choice(eids)
            # deletion always commutes element-wise
            md = bicircular(delete_edge(g, e))
            md2 = m.delete([e])
            assert md.ground == md2.ground and md.bases == md2.bases
            # contraction of a non-loop edge
            if not g.is_loop(e):
                mc = bicircular(contract_edge(g, e))
                mc2 = m.contract([e])
                assert mc.ground == mc2.ground and mc.bases == mc2.bases
            count += 1
        assert count > 100


class TestRankFormula:
    def test_against_matroid_rank(self):
        for _, g in connected_multigraphs(6):
            assert bicircular(g).rank_value == bicircular_rank(g)

    def test_formula_meaning(self):
        # forest component contributes |V|-1, cyclic component |V|
        g = graph_from_edges([(1, 2), (2, 3)])
        assert bicircular_rank(g) == 2


class TestSubdivisionIsSeriesExtension:
    def test_on_samples(self):
        samples = [theta(2, 1, 1), k4(),
                   graph_from_edges([(1, 2), (1, 2), (2, 3), (3, 3)])]
        for g in samples:
            for e in g.edge_ids():
                if g.is_loop(e):
                    continue
                g2, new_ids = subdivide_edge(g, e, 2)
                direct = bicircular(g2)
                via_matroid, lab = extend_series(bicircular(g), e)
                assert is_isomorphic(direct, via_matroid) is not None
