"""Multigraphs with loops and parallel edges, and the structural operations
needed by the bicircular-matroid constructions: deletion, contraction,
subdivision, smoothing of degree-2 paths, and block (biconnected component)
analysis.

Edge identities are stable: an edge id is never reused within one graph's
lineage, so a surviving edge refers to the same abstract element before and
after deletion/contraction/subdivision.
"""

from dataclasses import dataclass, field


class MgParseError(ValueError):
    """Raised on a malformed `.mg` file; carries the offending line number."""

    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class Multigraph:
    """Immutable multigraph.  Vertices are ints, edges are id -> (u, v) with
    u <= v; u == v encodes a loop.  All operations return fresh graphs.
    """

    __slots__ = ("_vertices", "_edges", "_next_edge_id", "_next_vertex_id")

    def __init__(self, vertices=(), edges=None, next_edge_id=None, next_vertex_id=None):
        edges = dict(edges or {})
        vs = set(vertices)
        for eid, (u, v) in edges.items():
            if u not in vs or v not in vs:
                raise ValueError(f"edge {eid} endpoint not in vertex set")
        self._vertices = frozenset(vs)
        self._edges = {eid: (min(u, v), max(u, v)) for eid, (u, v) in edges.items()}
        top_e = max(edges, default=0)
        top_v = max(vs, default=0)
        self._next_edge_id = max(next_edge_id or 0, top_e + 1)
        self._next_vertex_id = max(next_vertex_id or 0, top_v + 1)

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return dict(self._edges)

    def edge_ids(self):
        return sorted(self._edges)

    def endpoints(self, eid):
        try:
            return self._edges[eid]
        except KeyError:
            raise KeyError(f"unknown edge id {eid}") from None

    def is_loop(self, eid):
        u, v = self.endpoints(eid)
        return u == v

    def num_edges(self):
        return len(self._edges)

    def num_vertices(self):
        return len(self._vertices)

    def degree(self, v):
        """Edge-end count at v; a loop contributes 2."""
        d = 0
        for u, w in self._edges.values():
            if u == v:
                d += 1
            if w == v:
                d += 1
        return d

    def incident(self, v):
        return [eid for eid, (u, w) in self._edges.items() if u == v or w == v]

    def loops_at(self, v):
        return [eid for eid, (u, w) in self._edges.items() if u == v and w == v]

    def adjacency(self):
        """vertex -> list of (edge id, other endpoint); loops appear once."""
        adj = {v: [] for v in self._vertices}
        for eid, (u, v) in self._edges.items():
            adj[u].append((eid, v))
            if u != v:
                adj[v].append((eid, u))
        return adj

    def is_connected(self):
        if not self._vertices:
            return True
        adj = self.adjacency()
        start = next(iter(self._vertices))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for _, y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self._vertices)

    def components(self):
        """List of vertex sets of the connected components."""
        adj = self.adjacency()
        seen = set()
        comps = []
        for v in sorted(self._vertices):
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                for _, y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        stack.append(y)
            comps.append(comp)
        return comps

    def cyclomatic_number(self):
        """Independent cycle count: |E| - |V| + #components (loops count)."""
        return len(self._edges) - len(self._vertices) + len(self.components())

    def induced_by_edges(self, eids):
        """Subgraph on the given edges, keeping only touched vertices."""
        edges = {e: self._edges[e] for e in eids}
        vs = set()
        for u, v in edges.values():
            vs.add(u)
            vs.add(v)
        return Multigraph(vs, edges, self._next_edge_id, self._next_vertex_id)

    # -- construction helpers --------------------------------------------

    def with_edge(self, u, v):
        """New graph with one extra u-v edge (vertices added as needed);
        returns (graph, new edge id)."""
        eid = self._next_edge_id
        edges = dict(self._edges)
        edges[eid] = (min(u, v), max(u, v))
        g = Multigraph(self._vertices | {u, v}, edges,
                       eid + 1, self._next_vertex_id)
        return g, eid

    def with_vertex(self, v=None):
        if v is None:
            v = self._next_vertex_id
        return Multigraph(self._vertices | {v}, self._edges,
                          self._next_edge_id, self._next_vertex_id), v

    def __repr__(self):
        es = ", ".join(f"{e}:{u}-{v}" for e, (u, v) in sorted(self._edges.items()))
        return f"Multigraph(V={sorted(self._vertices)}, E={{{es}}})"


def graph_from_edges(pairs, isolated=()):
    """Build a graph from endpoint pairs; ids are assigned 1..n in order."""
    vs = set(isolated)
    edges = {}
    for i, (u, v) in enumerate(pairs, start=1):
        vs.add(u)
        vs.add(v)
        edges[i] = (min(u, v), max(u, v))
    return Multigraph(vs, edges)


def parse_graph(text):
    """Parse the `.mg` format: `edge u v` / `vertex u` lines, `#` comments.

    Edge ids are assigned in file order starting at 1.
    """
    pairs = []
    isolated = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "edge":
            if len(parts) != 3:
                raise MgParseError("expected `edge u v`", line_no)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise MgParseError("vertex ids must be integers", line_no)
            if u <= 0 or v <= 0:
                raise MgParseError("vertex ids must be positive", line_no)
            pairs.append((u, v))
        elif parts[0] == "vertex":
            if len(parts) != 2:
                raise MgParseError("expected `vertex u`", line_no)
            try:
                u = int(parts[1])
            except ValueError:
                raise MgParseError("vertex ids must be integers", line_no)
            if u <= 0:
                raise MgParseError("vertex ids must be positive", line_no)
            isolated.append(u)
        else:
            raise MgParseError(f"unknown directive {parts[0]!r}", line_no)
    return graph_from_edges(pairs, isolated)


def format_graph(g):
    """Inverse of parse_graph up to edge-id renumbering."""
    out = []
    for eid in g.edge_ids():
        u, v = g.endpoints(eid)
        out.append(f"edge {u} {v}")
    touched = set()
    for u, v in g.edges.values():
        touched.add(u)
        touched.add(v)
    for v in sorted(g.vertices - touched):
        out.append(f"vertex {v}")
    return "\n".join(out) + "\n"


def delete_edge(g, eid):
    g.endpoints(eid)
    edges = g.edges
    del edges[eid]
    return Multigraph(g.vertices, edges, g._next_edge_id, g._next_vertex_id)


def contract_edge(g, eid):
    """Contract eid; a loop contracts as a deletion.  Parallel mates become
    loops.  Surviving edge ids are unchanged."""
    u, v = g.endpoints(eid)
    if u == v:
        return delete_edge(g, eid)
    edges = {}
    for e, (x, y) in g.edges.items():
        if e == eid:
            continue
        if x == v:
            x = u
        if y == v:
            y = u
        edges[e] = (min(x, y), max(x, y))
    return Multigraph(g.vertices - {v}, edges, g._next_edge_id, g._next_vertex_id)


def subdivide_edge(g, eid, k):
    """Replace eid by a path of k edges through k-1 fresh degree-2 vertices.

    Returns (graph, list of the k path edge ids).  k = 1 returns the graph
    unchanged with [eid].  Loops are rejected: the constructions here never
    subdivide loops.
    """
    if k < 1:
        raise ValueError("subdivision count must be >= 1")
    u, v = g.endpoints(eid)
    if u == v:
        raise ValueError(f"edge {eid} is a loop; loop subdivision is rejected")
    if k == 1:
        return g, [eid]
    edges = g.edges
    del edges[eid]
    vs = set(g.vertices)
    new_vs = []
    nv = g._next_vertex_id
    for _ in range(k - 1):
        new_vs.append(nv)
        vs.add(nv)
        nv += 1
    chain = [u] + new_vs + [v]
    ne = g._next_edge_id
    new_eids = []
    for a, b in zip(chain, chain[1:]):
        edges[ne] = (min(a, b), max(a, b))
        new_eids.append(ne)
        ne += 1
    return Multigraph(vs, edges, ne, nv), new_eids


# -- smoothing ----------------------------------------------------------


@dataclass
class SmoothingMap:
    """Result of suppressing maximal degree-2 paths.

    classes maps each smoothed edge id to the ordered list of original edge
    ids of the path it replaces; the smoothed edge id is the first original
    id in its class, so ids stay disjoint and stable.
    """

    smoothed: Multigraph
    classes: dict = field(default_factory=dict)

    def class_of(self, smoothed_eid):
        return self.classes[smoothed_eid]

    def subdivided_ids(self):
        return [e for e, cls in self.classes.items() if len(cls) > 1]


def _is_plain_degree2(g, v, adj):
    """True if v has exactly two incident edge-ends, both from non-loop
    edges (such vertices are interior points of subdivision paths)."""
    inc = adj[v]
    if len(inc) != 2:
        return False
    return all(g.endpoints(e)[0] != g.endpoints(e)[1] for e, _ in inc)


def smooth(g):
    """Suppress every maximal path whose interior vertices have plain degree
    two.  Loops stay put (a vertex carrying a loop is never suppressed), and
    components that are bare cycles keep two canonical vertices so the
    result is loop-creation-free.
    """
    adj = g.adjacency()
    plain = {v for v in g.vertices if _is_plain_degree2(g, v, adj)}

    anchors = set(g.vertices) - plain
    # bare-cycle components have no anchor: promote the least vertex
    for comp in g.components():
        if comp & anchors:
            continue
        if not comp:
            continue
        anchors.add(min(comp))

    classes = {}
    new_edges = {}
    kept = set(anchors)
    used = set()

    def walk(start_anchor, first_eid):
        """Follow a path of plain vertices from an anchor; returns
        (other endpoint anchor, ordered edge list, interior vertices)."""
        path = [first_eid]
        interior = []
        prev = start_anchor
        u, v = g.endpoints(first_eid)
        cur = v if u == prev else u
        while cur not in anchors:
            interior.append(cur)
            e1, e2 = [e for e, _ in adj[cur]]
            nxt_e = e2 if e1 == path[-1] else e1
            path.append(nxt_e)
            a, b = g.endpoints(nxt_e)
            prev, cur = cur, (b if a == cur else a)
        return cur, path, interior

    for a in sorted(anchors):
        for eid, other in sorted(adj[a]):
            if eid in used:
                continue
            u, v = g.endpoints(eid)
            if u == v:
                # loop at an anchor: a singleton class
                used.add(eid)
                classes[eid] = [eid]
                new_edges[eid] = (a, a)
                continue
            end, path, interior = walk(a, eid)
            if end == a and interior:
                # closed walk back to the same anchor: keep the least
                # interior vertex so no new loop is manufactured
                keep = min(interior)
                kept.add(keep)
                idx = interior.index(keep)
                left, right = path[: idx + 1], path[idx + 1:]
                used.update(path)
                classes[left[0]] = left
                new_edges[left[0]] = (min(a, keep), max(a, keep))
                classes[right[0]] = right
                new_edges[right[0]] = (min(keep, a), max(keep, a))
            else:
                used.update(path)
                classes[path[0]] = path
                new_edges[path[0]] = (min(a, end), max(a, end))

    smoothed = Multigraph(kept, new_edges,
                          g._next_edge_id, g._next_vertex_id)
    return SmoothingMap(smoothed, classes)


# -- block structure ----------------------------------------------------


@dataclass
class BlockDecomposition:
    blocks: list                 # list of frozensets of edge ids
    cut_vertices: frozenset
    block_vertices: list         # vertex set of each block, same order
    tree_adjacency: dict         # block index -> set of adjacent block indices
    is_path: bool
    middle_blocks_two_vertices: bool

    def end_block_indices(self):
        """Leaf blocks of the block-cut tree: blocks meeting <= 1 cut vertex."""
        out = []
        for i, vs in enumerate(self.block_vertices):
            if len([v for v in vs if v in self.cut_vertices]) <= 1:
                out.append(i)
        return out


def block_structure(g):
    """Blocks, cut vertices and the block tree of a connected multigraph.

    Loops form singleton blocks.  Parallel edges to the DFS parent are back
    edges, so a parallel class is one 2-connected block.
    """
    if not g.is_connected():
        raise ValueError("block_structure requires a connected graph")
    if not g.vertices:
        return BlockDecomposition([], frozenset(), [], {}, True, True)

    adj = g.adjacency()
    blocks = []
    loop_blocks = []
    for eid in g.edge_ids():
        u, v = g.endpoints(eid)
        if u == v:
            loop_blocks.append((frozenset([eid]), {u}))

    # iterative Hopcroft–Tarjan on the loopless graph
    disc = {}
    low = {}
    estack = []
    root = min(g.vertices)
    counter = [0]

    nonloop_adj = {v: [(e, w) for e, w in adj[v] if g.endpoints(e)[0] != g.endpoints(e)[1]]
                   for v in g.vertices}

    # stack frames: (vertex, parent edge, iterator index)
    disc[root] = low[root] = counter[0]
    counter[0] += 1
    stack = [(root, None, 0)]
    while stack:
        v, pedge, i = stack.pop()
        if i < len(nonloop_adj[v]):
            stack.append((v, pedge, i + 1))
            eid, w = nonloop_adj[v][i]
            if eid == pedge:
                continue
            if w not in disc:
                disc[w] = low[w] = counter[0]
                counter[0] += 1
                estack.append(eid)
                stack.append((w, eid, 0))
            elif disc[w] < disc[v]:
                estack.append(eid)
                low[v] = min(low[v], disc[w])
        else:
            if pedge is not None:
                u, w = g.endpoints(pedge)
                parent = u if disc.get(u, 1 << 60) < disc[v] else w
                low[parent] = min(low.get(parent, disc[parent]), low[v])
                if low[v] >= disc[parent]:
                    # pop a block
                    comp = set()
                    while True:
                        e = estack.pop()
                        comp.add(e)
                        if e == pedge:
                            break
                    vs = set()
                    for e in comp:
                        a, b = g.endpoints(e)
                        vs.add(a)
                        vs.add(b)
                    blocks.append((frozenset(comp), vs))

    all_blocks = blocks + loop_blocks
    if not all_blocks and g.num_vertices() == 1:
        # single vertex, no edges
        return BlockDecomposition([], frozenset(), [], {}, True, True)

    block_edge_sets = [b for b, _ in all_blocks]
    block_vertex_sets = [vs for _, vs in all_blocks]

    # cut vertices are exactly the vertices lying in two or more blocks
    seen_in = {}
    cut = set()
    for vs in block_vertex_sets:
        for v in vs:
            if v in seen_in:
                cut.add(v)
            seen_in[v] = True

    tree = {i: set() for i in range(len(all_blocks))}
    by_cut = {}
    for i, vs in enumerate(block_vertex_sets):
        for v in vs:
            if v in cut:
                by_cut.setdefault(v, []).append(i)
    for v, idxs in by_cut.items():
        for i in idxs:
            for j in idxs:
                if i != j:
                    tree[i].add(j)

    # path test on the block-cut tree: every cut vertex in <= 2 blocks and
    # every block containing <= 2 cut vertices, with no branching
    is_path = True
    for v, idxs in by_cut.items():
        if len(idxs) > 2:
            is_path = False
    for i, vs in enumerate(block_vertex_sets):
        if len([v for v in vs if v in cut]) > 2:
            is_path = False

    middles_ok = True
    if len(all_blocks) > 1:
        for i, vs in enumerate(block_vertex_sets):
            ncuts = len([v for v in vs if v in cut])
            if ncuts >= 2 and len(vs) != 2:
                middles_ok = False

    return BlockDecomposition(block_edge_sets, frozenset(cut),
                              block_vertex_sets, tree, is_path, middles_ok)


# -- isomorphism and canonical forms ------------------------------------


def _refine_partition(g):
    """1-WL style colour refinement for multigraphs; returns vertex -> colour."""
    loops = {v: len(g.loops_at(v)) for v in g.vertices}
    colour = {v: (g.degree(v), loops[v]) for v in g.vertices}
    mult = {}
    for u, v in g.edges.values():
        if u != v:
            mult[(u, v)] = mult.get((u, v), 0) + 1
    nbrs = {v: [] for v in g.vertices}
    for (u, v), m in mult.items():
        nbrs[u].append((v, m))
        nbrs[v].append((u, m))
    for _ in range(len(g.vertices)):
        nxt = {}
        for v in g.vertices:
            sig = tuple(sorted((m, colour[w]) for w, m in nbrs[v]))
            nxt[v] = (colour[v], sig)
        # compress
        ranks = {c: i for i, c in enumerate(sorted(set(nxt.values())))}
        nxt = {v: ranks[c] for v, c in nxt.items()}
        if len(set(nxt.values())) == len(set(colour.values())):
            colour = nxt
            break
        colour = nxt
    return colour


def canonical_form(g):
    """Canonical certificate of the multigraph up to isomorphism: the least
    encoded edge multiset over colour-respecting vertex relabelings."""
    from itertools import permutations

    colour = _refine_partition(g)
    groups = {}
    for v in sorted(g.vertices):
        groups.setdefault(colour[v], []).append(v)
    order = sorted(groups)
    blocks = [groups[c] for c in order]

    edge_list = sorted((min(u, v), max(u, v)) for u, v in g.edges.values())

    best = None
    # positions assigned block by block; blocks get consecutive index ranges
    starts = []
    s = 0
    for b in blocks:
        starts.append(s)
        s += len(b)

    def rec(bi, mapping):
        nonlocal best
        if bi == len(blocks):
            enc = tuple(sorted((min(mapping[u], mapping[v]), max(mapping[u], mapping[v]))
                               for u, v in edge_list))
            if best is None or enc < best:
                best = enc
            return
        base = starts[bi]
        for perm in permutations(blocks[bi]):
            m2 = dict(mapping)
            for off, v in enumerate(perm):
                m2[v] = base + off
            rec(bi + 1, m2)

    rec(0, {})
    return (g.num_vertices(), best or ())


def graphs_isomorphic(g, h):
    if g.num_vertices() != h.num_vertices() or g.num_edges() != h.num_edges():
        return False
    return canonical_form(g) == canonical_form(h)
