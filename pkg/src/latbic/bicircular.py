"""The bicircular matroid of a multigraph.

An edge set is independent when every component of the induced subgraph has
at most one cycle; circuits are the bicycles, and each classifies as a theta
(three internally disjoint paths), a tight handcuff (two cycles sharing one
vertex) or a loose handcuff (two disjoint cycles joined by a path).
"""

import itertools
from dataclasses import dataclass

from .matroid import Matroid, GROUND_LIMIT


def is_bicircular_independent(g, edge_ids):
    """Each component of the induced subgraph has edge count <= vertex count."""
    verts = {}
    parent = {}
    esize = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in edge_ids:
        u, v = g.endpoints(eid)
        for w in (u, v):
            if w not in parent:
                parent[w] = w
                verts[w] = 1
                esize[w] = 0
        ru, rv = find(u), find(v)
        if ru == rv:
            esize[ru] += 1
        else:
            parent[ru] = rv
            verts[rv] += verts[ru]
            esize[rv] += esize[ru] + 1
    roots = {find(x) for x in parent}
    return all(esize[r] <= verts[r] for r in roots)


def bicircular_rank(g):
    """|V| minus the number of cycle-free components."""
    acyclic = 0
    for comp in g.components():
        edges = [e for e, (u, v) in g.edges.items() if u in comp]
        if len(edges) < len(comp):
            acyclic += 1
    return g.num_vertices() - acyclic


def bicircular(g):
    """The bicircular matroid over the edge ids of g."""
    eids = g.edge_ids()
    if len(eids) > GROUND_LIMIT:
        raise ValueError(
            f"{len(eids)} edges exceeds the engine bound {GROUND_LIMIT}")
    r = bicircular_rank(g)
    bases = []
    pos = {e: i for i, e in enumerate(eids)}
    for comb in itertools.combinations(eids, r):
        if is_bicircular_independent(g, comb):
            mask = 0
            for e in comb:
                mask |= 1 << pos[e]
            bases.append(mask)
    return Matroid(eids, bases, validate=False)


@dataclass
class BicircularCircuitKind:
    kind: str                  # theta | tight-handcuff | loose-handcuff
    branch_vertices: tuple
    paths: list                # theta: the 3 arcs; handcuffs: [cycle, path, cycle]


def classify_circuit(g, edge_ids):
    """Identify which of the three bicycle shapes the circuit subdivides.

    Preference on the degenerate boundary: distinct branch vertices give a
    theta, a single degree-4 vertex gives a tight handcuff.
    """
    edge_ids = sorted(edge_ids)
    if not is_circuit(g, edge_ids):
        raise ValueError("edge set is not a circuit of the bicircular matroid")
    sub = g.induced_by_edges(edge_ids)

    deg = {v: sub.degree(v) for v in sub.vertices}
    branch = sorted(v for v, d in deg.items() if d >= 3)

    if len(branch) == 1:
        v = branch[0]
        # two closed walks at v: tight handcuff
        cycles = _closed_walks_at(sub, v)
        return BicircularCircuitKind("tight-handcuff", (v,), cycles)

    u, w = branch
    arcs = _arcs_between(sub, u, w)
    if len(arcs) == 3:
        return BicircularCircuitKind("theta", (u, w), arcs)
    # loose handcuff: a cycle at u, a cycle at w, one connecting path
    cyc_u = _closed_walks_at(sub, u, avoid=w)
    cyc_w = _closed_walks_at(sub, w, avoid=u)
    return BicircularCircuitKind("loose-handcuff", (u, w),
                                 [cyc_u[0], arcs[0], cyc_w[0]])


def is_circuit(g, edge_ids):
    edge_ids = list(edge_ids)
    if is_bicircular_independent(g, edge_ids):
        return False
    return all(
        is_bicircular_independent(g, [e for e in edge_ids if e != x])
        for x in edge_ids)


def _arcs_between(sub, u, w):
    """Edge-disjoint u-w paths avoiding the opposite branch vertex inside."""
    adj = sub.adjacency()
    used = set()
    arcs = []
    for eid, other in sorted(adj[u]):
        if eid in used:
            continue
        a, b = sub.endpoints(eid)
        if a == b:
            continue
        path = [eid]
        cur = other
        ok = True
        while cur != w:
            if cur == u:
                ok = False
                break
            nxt = [(e, o) for e, o in adj[cur] if e != path[-1]]
            if len(nxt) != 1:
                ok = False
                break
            path.append(nxt[0][0])
            cur = nxt[0][1]
        if ok:
            arcs.append(path)
            used.update(path)
    return arcs


def _closed_walks_at(sub, v, avoid=None):
    """Cycles hanging at v (loops, or walks through degree-2 vertices)."""
    adj = sub.adjacency()
    cycles = []
    used = set()
    for eid, other in sorted(adj[v]):
        if eid in used:
            continue
        a, b = sub.endpoints(eid)
        if a == b:
            used.add(eid)
            cycles.append([eid])
            continue
        path = [eid]
        cur = other
        ok = True
        while cur != v:
            if avoid is not None and cur == avoid:
                ok = False
                break
            nxt = [(e, o) for e, o in adj[cur] if e != path[-1]]
            if len(nxt) != 1:
                ok = False
                break
            path.append(nxt[0][0])
            cur = nxt[0][1]
        if ok:
            cycles.append(path)
            used.update(path)
    return cycles
