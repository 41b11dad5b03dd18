import pytest

from latbic.multigraph import (Multigraph, MgParseError, parse_graph,
                               format_graph, graph_from_edges, delete_edge,
                               contract_edge, subdivide_edge, smooth,
                               block_structure, graphs_isomorphic,
                               canonical_form)
from latbic.catalog import prism_presentation, FamilySpec, family_generate


def theta(*arc_lens):
    """Two vertices joined by internally disjoint paths of the given lengths."""
    pairs = []
    nxt = 3
    for L in arc_lens:
        chain = [1] + list(range(nxt, nxt + L - 1)) + [2]
        nxt += L - 1
        pairs.extend(zip(chain, chain[1:]))
    return graph_from_edges(pairs)


class TestParse:
    def test_parallel_and_loop(self):
        g = parse_graph("edge 1 2\nedge 1 2\nedge 3 3")
        assert g.num_edges() == 3
        assert g.endpoints(1) == (1, 2) and g.endpoints(2) == (1, 2)
        assert g.is_loop(3)

    def test_empty(self):
        g = parse_graph("")
        assert g.num_vertices() == 0 and g.num_edges() == 0

    def test_3k3_file(self):
        text = "\n".join(["edge 1 2"] * 3 + ["edge 1 3"] * 3 + ["edge 2 3"] * 3)
        g = parse_graph(text)
        assert g.num_vertices() == 3 and g.num_edges() == 9

    def test_comments_and_isolated(self):
        g = parse_graph("# a triangle\nedge 1 2\nedge 2 3\nedge 1 3\nvertex 9\n")
        assert g.num_edges() == 3
        assert 9 in g.vertices

    def test_malformed_line_number(self):
        with pytest.raises(MgParseError) as ei:
            parse_graph("edge 1 2\nedge x 2\n")
        assert ei.value.line_no == 2

    def test_unknown_directive(self):
        with pytest.raises(MgParseError):
            parse_graph("node 1\n")

    def test_roundtrip(self):
        g = parse_graph("edge 1 2\nedge 2 2\nvertex 5\n")
        again = parse_graph(format_graph(g))
        assert graphs_isomorphic(g, again)


class TestContract:
    def test_parallel_mate_becomes_loop(self):
        g = graph_from_edges([(1, 2), (1, 2)])
        h = contract_edge(g, 1)
        assert h.num_edges() == 1
        assert h.is_loop(2)

    def test_t2_contraction_is_p2(self):
        # K_{2,3} plus one extra edge joining the degree-3 vertices; pulling
        # that edge tight identifies them into the doubled star
        t2 = graph_from_edges([(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5),
                               (1, 2)])
        h = contract_edge(t2, 7)
        assert graphs_isomorphic(h, prism_presentation("P2"))

    def test_loop_contract_is_delete(self):
        g = graph_from_edges([(1, 1), (1, 2)])
        assert graphs_isomorphic(contract_edge(g, 1), delete_edge(g, 1))

    def test_ids_stable(self):
        g = graph_from_edges([(1, 2), (2, 3), (3, 1)])
        h = contract_edge(g, 2)
        assert set(h.edges) == {1, 3}

    def test_unknown_edge(self):
        with pytest.raises(KeyError):
            contract_edge(graph_from_edges([(1, 2)]), 9)


class TestSubdivide:
    def test_k23_edge_gives_theta_on_7(self):
        k23 = graph_from_edges([(1, 3), (3, 2), (1, 4), (4, 2), (1, 5), (5, 2)])
        h, new = subdivide_edge(k23, 1, 2)
        assert h.num_edges() == 7
        assert graphs_isomorphic(h, theta(3, 2, 2))

    def test_identity_when_k1(self):
        g = graph_from_edges([(1, 2)])
        h, ids = subdivide_edge(g, 1, 1)
        assert h is g and ids == [1]

    def test_loop_rejected(self):
        g = graph_from_edges([(1, 1)])
        with pytest.raises(ValueError):
            subdivide_edge(g, 1, 2)

    def test_two_k4_edges_still_recognized(self):
        from latbic.catalog import family_member
        k4 = graph_from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
        g, _ = subdivide_edge(k4, 1, 3)
        g, _ = subdivide_edge(g, 6, 2)
        w = family_member(g)
        assert w is not None and w.family == "F0"


class TestSmooth:
    def test_path_suppression(self):
        g = graph_from_edges([(1, 2), (2, 3)])
        sm = smooth(g)
        assert sm.smoothed.num_edges() == 1
        (eid,) = sm.smoothed.edge_ids()
        assert sm.classes[eid] == [1, 2]
        assert sm.smoothed.endpoints(eid) == (1, 3)

    def test_k23_subdivision_smooths_like_k23(self):
        # both collapse to the fully suppressed two-vertex triple edge
        k23 = graph_from_edges([(1, 3), (3, 2), (1, 4), (4, 2), (1, 5), (5, 2)])
        sub, _ = subdivide_edge(k23, 1, 3)
        a, b = smooth(k23).smoothed, smooth(sub).smoothed
        assert graphs_isomorphic(a, b)
        assert a.num_vertices() == 2 and a.num_edges() == 3

    def test_g1131_subdivide_roundtrip(self):
        spec = FamilySpec("F1", "G1", {"r": 1, "d": 3, "b": 1})
        g, roles = family_generate(spec)
        assert g.num_edges() == 11
        red = min(e for e, r in roles.items() if r == "red")
        sub, new_ids = subdivide_edge(g, red, 4)
        sm = smooth(sub)
        assert graphs_isomorphic(sm.smoothed, g)
        assert sorted(sm.classes[min(new_ids)]) == sorted(new_ids)
        assert sm.smoothed.num_edges() == 11

    def test_loop_on_degree2_vertex_survives(self):
        g = graph_from_edges([(1, 2), (2, 3), (2, 2)])
        sm = smooth(g)
        assert 2 in sm.smoothed.vertices

    def test_bare_cycle_canonical_two_vertex_form(self):
        g = graph_from_edges([(1, 2), (2, 3), (3, 4), (4, 1)])
        sm = smooth(g)
        assert sm.smoothed.num_vertices() == 2
        assert sm.smoothed.num_edges() == 2
        assert not any(sm.smoothed.is_loop(e) for e in sm.smoothed.edge_ids())

    def test_classes_partition_edges(self):
        g, _ = subdivide_edge(theta(2, 2, 2), 1, 3)
        sm = smooth(g)
        seen = [e for cls in sm.classes.values() for e in cls]
        assert sorted(seen) == g.edge_ids()


class TestBlocks:
    def test_two_connected_single_block(self):
        bd = block_structure(theta(1, 1, 2))
        assert len(bd.blocks) == 1
        assert not bd.cut_vertices
        assert bd.is_path

    def test_f4_chain_example(self):
        end = {"a_lens": (1, 1), "j_lens": (1, 1), "base_len": 1}
        spec = FamilySpec("F4", "chain", {}, {}, (end, end), ((1, 1), (1,)), ())
        g, _ = family_generate(spec)
        bd = block_structure(g)
        assert bd.is_path
        assert bd.middle_blocks_two_vertices

    def test_three_end_blocks_not_a_path(self):
        tri = [(1, 2), (2, 3), (1, 3)]
        pairs = list(tri)
        pairs += [(1, 4), (4, 5), (1, 5)]
        pairs += [(1, 6), (6, 7), (1, 7)]
        g = graph_from_edges(pairs)
        bd = block_structure(g)
        assert not bd.is_path
        assert len(bd.end_block_indices()) == 3

    def test_edge_partition_and_cut_vertices(self):
        g = graph_from_edges([(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3),
                              (5, 5)])
        bd = block_structure(g)
        assert sum(len(b) for b in bd.blocks) == g.num_edges()
        for v in g.vertices:
            in_blocks = sum(1 for vs in bd.block_vertices if v in vs)
            assert (v in bd.cut_vertices) == (in_blocks >= 2)

    def test_disconnected_rejected(self):
        g = graph_from_edges([(1, 2), (3, 4)])
        with pytest.raises(ValueError):
            block_structure(g)

    def test_three_end_blocks_contract_to_prism_graph(self):
        # star of three triangles: shrinking each triangle to a parallel
        # pair leaves one of the four doubled-star presentations
        pairs = [(1, 2), (2, 3), (1, 3),
                 (1, 4), (4, 5), (1, 5),
                 (1, 6), (6, 7), (1, 7)]
        g = graph_from_edges(pairs)
        for eid in (2, 5, 8):
            g = contract_edge(g, eid)
        targets = [prism_presentation(k) for k in ("P1", "P2", "P3", "P4")]
        assert any(graphs_isomorphic(g, t) for t in targets)


class TestCanonicalForm:
    def test_iso_invariance(self):
        g = graph_from_edges([(1, 2), (2, 3), (3, 1), (1, 1)])
        h = graph_from_edges([(5, 7), (7, 9), (9, 5), (9, 9)])
        assert canonical_form(g) == canonical_form(h)

    def test_multiplicity_distinguished(self):
        g = graph_from_edges([(1, 2), (1, 2), (3, 1)])
        h = graph_from_edges([(1, 2), (2, 3), (3, 1)])
        assert canonical_form(g) != canonical_form(h)
