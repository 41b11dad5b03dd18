import json

import pytest

from latbic.catalog import (EXCLUDED_MINOR_NAMES, excluded_minor,
                            prism_presentation, has_excluded_bicircular_minor,
                            FamilySpec, FamilyWitness, family_generate,
                            family_member)
from latbic.bicircular import bicircular
from latbic.matroid import is_isomorphic, uniform, has_minor
from latbic.multigraph import (graph_from_edges, graphs_isomorphic,
                               subdivide_edge)
from latbic.latticepath import is_lpm, enumerate_lpms


class TestExcludedMinors:
    def test_b1_is_3k3(self):
        g, m = excluded_minor("B1")
        assert g.num_vertices() == 3 and g.num_edges() == 9
        assert m.rank_value == 3

    def test_c24_is_doubled_star(self):
        g, m = excluded_minor("C24")
        assert m.size == 6 and m.rank_value == 4
        assert graphs_isomorphic(g, prism_presentation("P2"))
        for k in ("P1", "P3", "P4"):
            other = bicircular(prism_presentation(k))
            assert is_isomorphic(m, other) is not None

    def test_s1_shape(self):
        g, m = excluded_minor("S1")
        assert m.size == 8 and m.rank_value == 5
        assert m.dual().rank_value == 3

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            excluded_minor("Z9")

    def test_all_are_bicircular_and_connected(self):
        for name in EXCLUDED_MINOR_NAMES:
            g, m = excluded_minor(name)
            assert is_isomorphic(m, bicircular(g)) is not None
            assert m.is_connected()


class TestFamilyGenerate:
    def test_f1_1_3_1(self):
        g, roles = family_generate(FamilySpec("F1", "G1", {"r": 1, "d": 3, "b": 1}))
        assert g.num_edges() == 11
        counts = {}
        for r in roles.values():
            counts[r] = counts.get(r, 0) + 1
        assert counts == {"red": 3, "blue": 3, "diag": 3, "top": 1, "bottom": 1}

    def test_f2_1_1_circuit_labels(self):
        g, _ = family_generate(FamilySpec("F2", "2K3", {"r": 1, "b": 1}))
        assert g.num_edges() == 8
        m = bicircular(g)
        nonspanning = [frozenset(m.set_of(c)) for c in m.circuit_masks()
                       if m.rank_mask(c) < m.rank_value]
        assert sorted(nonspanning, key=sorted) == [
            frozenset({1, 2, 3}), frozenset({6, 7, 8})]

    def test_f3_two_vertex(self):
        g, _ = family_generate(FamilySpec(
            "F3", "two_vertex", {"edges": 3, "loops_x": 2, "loops_y": 1}))
        assert g.num_vertices() == 2
        assert g.num_edges() == 6

    def test_f3_triangle_needs_r(self):
        with pytest.raises(ValueError):
            family_generate(FamilySpec("F3", "K3", {"r": 0, "j": 1, "l": 0}))

    def test_f0_k4_limit(self):
        with pytest.raises(ValueError):
            family_generate(FamilySpec("F0", "K4", {},
                                       {"12": 2, "13": 2, "14": 2}))

    def test_f4_chain(self):
        end = {"a_lens": (1, 1), "j_lens": (1,), "base_len": 1}
        spec = FamilySpec("F4", "chain", {}, {}, (end, None),
                          ((1, 1, 1), (2,)), ((1, 2),))
        g, _ = family_generate(spec)
        assert g.is_connected()
        w = family_member(g)
        assert w is not None and w.family == "F4"

    def test_spec_json_roundtrip(self):
        spec = FamilySpec("F1", "G1", {"r": 1, "d": 3, "b": 1},
                          {"red": 2, "blue": 1})
        again = FamilySpec.from_json(json.loads(json.dumps(spec.to_json())))
        g1, _ = family_generate(spec)
        g2, _ = family_generate(again)
        assert graphs_isomorphic(g1, g2)


class TestFamilyMember:
    def test_k23_subdivision_is_f0(self):
        k23 = graph_from_edges([(1, 3), (3, 2), (1, 4), (4, 2), (1, 5), (5, 2)])
        g, _ = subdivide_edge(k23, 2, 3)
        w = family_member(g)
        assert w is not None and w.family == "F0"

    def test_chordless_cycle_with_loops_is_f3(self):
        g = graph_from_edges([(1, 2), (2, 3), (3, 4), (4, 1),
                              (1, 1), (1, 1), (2, 2)])
        w = family_member(g)
        assert w is not None and w.family == "F3"

    def test_three_subdivided_k4_edges_absent(self):
        k4 = graph_from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
        g, _ = subdivide_edge(k4, 1, 2)
        g, _ = subdivide_edge(g, 4, 2)
        g, _ = subdivide_edge(g, 6, 2)
        assert family_member(g) is None

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            family_member(graph_from_edges([(1, 2), (3, 4)]))

    def test_edgeless_absent(self):
        assert family_member(graph_from_edges([], isolated=[1])) is None

    def test_excluded_presentations_absent(self):
        for name in EXCLUDED_MINOR_NAMES:
            g, _ = excluded_minor(name)
            assert family_member(g) is None


GENERATE_CASES = [
    FamilySpec("F0", "K23", {}, {"1-3": 2, "1-4": 3}),
    FamilySpec("F0", "K23p", {}, {"red": 2, "blue": 3}),
    FamilySpec("F0", "K23pp", {}, {"red": 1, "blue": 2}),
    FamilySpec("F0", "K23star", {}, {"red": 2, "blue": 2}),
    FamilySpec("F0", "K4", {}, {"12": 3, "34": 2}),
    FamilySpec("F1", "G1", {"r": 0, "d": 0, "b": 0}, {"red": 2, "blue": 2}),
    FamilySpec("F1", "G1", {"r": 1, "d": 3, "b": 1}, {"red": 2, "blue": 2}),
    FamilySpec("F1", "G1", {"r": 2, "d": 0, "b": 0}, {"red": 3}),
    FamilySpec("F1", "G1", {"r": 0, "d": 2, "b": 0}, {"top": 2, "bottom": 2}),
    FamilySpec("F2", "2K3", {"r": 0, "b": 0}, {"red": 2, "blue": 2}),
    FamilySpec("F2", "2K3", {"r": 2, "b": 1}, {"red": 2, "blue": 2}),
    FamilySpec("F3", "K3", {"r": 1, "j": 1, "l": 0}, {"A": 2, "J": 2}),
    FamilySpec("F3", "K3", {"r": 2, "j": 1, "l": 1}, {"A": 3, "J": 2}),
    FamilySpec("F3", "K3", {"r": 1, "j": 0, "l": 3}, {"A": 2}),
    FamilySpec("F3", "cycle_chord", {"arc1": 2, "arc2": 3, "chords": 2,
                                     "loops_u": 1, "loops_v": 1}),
    FamilySpec("F3", "cycle_loops", {"cycle_len": 5, "loops_v": 3, "loop_u": 1}),
    FamilySpec("F3", "two_vertex", {"edges": 4, "loops_x": 2, "loops_y": 2}),
    FamilySpec("F4", "chain", {}, {},
               ({"a_lens": (1, 1, 2), "j_lens": (1,), "base_len": 1},
                {"a_lens": (), "j_lens": (1, 1, 2), "base_len": None,
                 "y_loops": 1}),
               ((1, 1), (3,), (1, 1, 1)), ((0, 2), (2, 1))),
]


@pytest.mark.parametrize("spec", GENERATE_CASES,
                         ids=[f"{s.family}-{s.template}-{i}"
                              for i, s in enumerate(GENERATE_CASES)])
class TestRoundTrip:
    def test_member_and_replay(self, spec):
        g, _ = family_generate(spec)
        w = family_member(g)
        assert w is not None, spec
        replay = w.replay()
        assert graphs_isomorphic(replay, g)

    def test_members_are_lattice_path(self, spec):
        g, _ = family_generate(spec)
        if g.num_edges() <= 10:
            assert is_lpm(bicircular(g)) is not None


class TestHasExcluded:
    def test_w3_plus_parallel_edge(self):
        g = graph_from_edges([(1, 2), (1, 3), (2, 3), (1, 1), (2, 2), (3, 3),
                              (1, 2)])
        hit = has_excluded_bicircular_minor(bicircular(g))
        assert hit is not None

    def test_small_lpms_are_minor_free(self):
        for _, m in enumerate_lpms(2, 3, dedupe=True):
            assert has_excluded_bicircular_minor(m) is None
        for _, m in enumerate_lpms(3, 2, dedupe=True):
            assert has_excluded_bicircular_minor(m) is None

    def test_three_end_blocks_find_c24(self):
        pairs = [(1, 2), (2, 3), (1, 3),
                 (1, 4), (4, 5), (1, 5),
                 (1, 6), (6, 7), (1, 7)]
        hit = has_excluded_bicircular_minor(bicircular(graph_from_edges(pairs)))
        assert hit is not None and hit[0] == "C24"

    def test_name_order_is_fixed(self):
        g, m = excluded_minor("B1")
        hit = has_excluded_bicircular_minor(m)
        assert hit is not None
        name, (dset, cset, bij) = hit
        assert name == "B1" and not dset and not cset


class TestF3MinorsOfF1F2:
    def test_sampled_containments(self):
        # each triangle-template member embeds in a bigger two-class or
        # four-vertex template member
        g, _ = family_generate(FamilySpec("F3", "K3", {"r": 1, "j": 1, "l": 0}))
        h, _ = family_generate(FamilySpec("F2", "2K3", {"r": 1, "b": 1}))
        assert has_minor(bicircular(h), bicircular(g)) is not None

        g2, _ = family_generate(FamilySpec(
            "F3", "two_vertex", {"edges": 2, "loops_x": 1, "loops_y": 1}))
        h2, _ = family_generate(FamilySpec("F1", "G1", {"r": 1, "d": 2, "b": 1}))
        assert has_minor(bicircular(h2), bicircular(g2)) is not None
