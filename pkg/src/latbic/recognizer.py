"""Top-level deciders for whether the bicircular matroid of a multigraph is
a lattice path matroid: the structural family route (linear time), the
excluded-minor route (exhaustive, budgeted), and the bounded-path oracle,
plus a three-way cross-check harness.
"""

import time
from dataclasses import dataclass, field

from .multigraph import block_structure
from .bicircular import bicircular
from .latticepath import is_lpm
from .catalog import family_member, has_excluded_bicircular_minor

DEFAULT_MINOR_BUDGET = 12


class HypothesisViolation(ValueError):
    """The decider's connectivity hypothesis fails for this input."""


class BudgetExceeded(ValueError):
    """Input too large for the requested exhaustive route."""


@dataclass
class Decision:
    verdict: str                 # "yes" | "no"
    route: str                   # "family" | "excluded-minor" | "oracle"
    certificate: object = None
    connectivity: dict = field(default_factory=dict)

    @property
    def is_lpm(self):
        return self.verdict == "yes"


def _nonisolated(g):
    touched = set()
    for u, v in g.edges.values():
        touched.add(u)
        touched.add(v)
    return touched


def bicircular_connected(g):
    """Graph-level test that B(g) is a connected matroid, without building
    the matroid: the edge-bearing part must be connected with at least two
    independent cycles and no bridge leaf-block (no coloops).  Graphs with
    at most one edge give free matroids, connected by convention.

    Validated against the matroid-level test on every small multigraph in
    the test suite.
    """
    touched = _nonisolated(g)
    if g.num_edges() == 0:
        return True
    core = g.induced_by_edges(g.edge_ids())
    if not core.is_connected():
        return False
    if g.num_edges() == 1:
        return True
    if core.cyclomatic_number() < 2:
        return False
    bd = block_structure(core)
    for i in bd.end_block_indices():
        es = bd.blocks[i]
        if len(es) == 1:
            e = next(iter(es))
            u, v = core.endpoints(e)
            if u != v:
                return False
    return True


def connectivity_report(g):
    return {
        "edges": g.num_edges(),
        "graph_connected": g.is_connected(),
        "matroid_connected": bicircular_connected(g),
        "empty_matroid": g.num_edges() == 0,
    }


def decide_lpm(g, per_component=False):
    """The family route: yes iff the graph lies in one of the template
    families.  Requires B(g) connected; `per_component=True` instead
    decides each graph component separately and conjoins (the disjoint-sum
    extension, reported as such)."""
    report = connectivity_report(g)
    if g.num_edges() == 0:
        return Decision("yes", "family", {"trivial": "empty matroid"}, report)
    if not report["matroid_connected"]:
        if per_component and not report["graph_connected"]:
            comps = g.components()
            parts = []
            for comp in comps:
                eids = [e for e, (u, v) in g.edges.items() if u in comp]
                if not eids:
                    continue
                sub = g.induced_by_edges(eids)
                parts.append(decide_lpm(sub, per_component=False))
            verdict = "yes" if all(p.verdict == "yes" for p in parts) else "no"
            return Decision(verdict, "family",
                            {"disjoint_union_of": [p.certificate for p in parts]},
                            report)
        raise HypothesisViolation(
            "the bicircular matroid of this graph is not connected; "
            "decide components separately (per_component=True)")
    w = family_member(g)
    if w is not None:
        return Decision("yes", "family", w, report)
    return Decision("no", "family", {"failed": "no template family matches"},
                    report)


def decide_lpm_via_minors(g, max_edges=DEFAULT_MINOR_BUDGET):
    """The excluded-minor route: yes iff none of the eight excluded minors
    embeds in B(g).  Exhaustive; refuses graphs over the edge budget."""
    if g.num_edges() > max_edges:
        raise BudgetExceeded(
            f"{g.num_edges()} edges exceeds the excluded-minor budget {max_edges}")
    report = connectivity_report(g)
    m = bicircular(g)
    hit = has_excluded_bicircular_minor(m)
    if hit is None:
        return Decision("yes", "excluded-minor", None, report)
    name, (dset, cset, bij) = hit
    cert = {"name": name, "delete": sorted(dset), "contract": sorted(cset),
            "bijection": {str(k): str(v) for k, v in bij.items()}}
    return Decision("no", "excluded-minor", cert, report)


def decide_lpm_via_oracle(g, max_ground=10):
    report = connectivity_report(g)
    m = bicircular(g)
    w = is_lpm(m, max_ground=max_ground)
    if w is None:
        return Decision("no", "oracle", None, report)
    cert = [(comp, str(pp)) for comp, pp in w]
    return Decision("yes", "oracle", cert, report)


@dataclass
class CrossCheckReport:
    graph: object
    family: Decision = None
    minors: Decision = None
    oracle: Decision = None
    error: str = ""

    @property
    def verdicts(self):
        return (self.family.verdict if self.family else None,
                self.minors.verdict if self.minors else None,
                self.oracle.verdict if self.oracle else None)

    @property
    def agree(self):
        vs = set(self.verdicts)
        return len(vs) == 1 and None not in vs


def cross_check(g):
    """Run all three routes; disagreement is reported, never raised."""
    rep = CrossCheckReport(g)
    try:
        rep.family = decide_lpm(g)
        rep.minors = decide_lpm_via_minors(g)
        rep.oracle = decide_lpm_via_oracle(g)
    except Exception as exc:            # structured bundle, not a crash
        rep.error = f"{type(exc).__name__}: {exc}"
    return rep


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, (time.perf_counter() - t0) * 1000.0
