"""Exhaustive generation of connected multigraphs (loops and parallel edges
allowed) up to isomorphism, by edge augmentation with canonical-form
deduplication.  Desk-scale only: intended for edge counts up to about 8.
"""

from .multigraph import Multigraph, graph_from_edges, canonical_form


def _augmentations(g):
    """All one-edge extensions: a new edge on existing vertices (loops
    included) or a pendant edge to a fresh vertex."""
    vs = sorted(g.vertices)
    out = []
    for i, u in enumerate(vs):
        for v in vs[i:]:
            out.append(g.with_edge(u, v)[0])
    for u in vs:
        h, w = g.with_vertex()
        out.append(h.with_edge(u, w)[0])
    return out


def connected_multigraphs(max_edges, min_edges=1):
    """Yield (edge count, graph) for connected multigraphs up to iso."""
    seed_edge = graph_from_edges([(1, 2)])
    seed_loop = graph_from_edges([(1, 1)])
    level = {}
    for g in (seed_edge, seed_loop):
        level[canonical_form(g)] = g
    for m in range(1, max_edges + 1):
        if m >= min_edges:
            for key in sorted(level):
                yield m, level[key]
        if m == max_edges:
            break
        nxt = {}
        for g in level.values():
            for h in _augmentations(g):
                key = canonical_form(h)
                if key not in nxt:
                    nxt[key] = h
        level = nxt


def count_connected_multigraphs(max_edges):
    counts = {}
    for m, _ in connected_multigraphs(max_edges):
        counts[m] = counts.get(m, 0) + 1
    return counts
