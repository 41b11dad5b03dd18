"""Lattice path matroids: bounded path pairs, standard interval
presentations, transversal matroids via bipartite matching, enumeration of
all bounded-path matroids at a given rank/corank, and the exhaustive
decision oracle.

The oracle enumerates every bounding pair with matching endpoint, filters by
the region's path count (which equals the basis count; that identity is
itself brute-verified in the test suite before being trusted as a filter)
and accepts via an isomorphism check against the matching-built transversal
matroid.  The witness returned is always the lexicographically least
successful pair.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .matroid import Matroid, is_isomorphic


@dataclass(frozen=True)
class LatticePath:
    """A word over {E, N} starting at (0, 0)."""

    steps: str

    def __post_init__(self):
        if set(self.steps) - {"E", "N"}:
            raise ValueError(f"steps must be over E/N, got {self.steps!r}")

    @property
    def endpoint(self):
        return (self.steps.count("E"), self.steps.count("N"))

    def north_positions(self):
        """1-based indices of the North steps."""
        return [i for i, s in enumerate(self.steps, start=1) if s == "N"]

    def __str__(self):
        return self.steps


@dataclass(frozen=True)
class BoundedPathPair:
    """Lower path P and upper path Q with common endpoint; P never goes
    above Q (prefix-wise its North count never exceeds Q's)."""

    lower: LatticePath
    upper: LatticePath

    def __post_init__(self):
        p, q = self.lower, self.upper
        if p.endpoint != q.endpoint:
            raise ValueError(f"paths end at {p.endpoint} vs {q.endpoint}")
        np_, nq = 0, 0
        for sp, sq in zip(p.steps, q.steps):
            np_ += sp == "N"
            nq += sq == "N"
            if np_ > nq:
                raise ValueError("lower path climbs above the upper path")

    @property
    def corank(self):
        return self.lower.endpoint[0]

    @property
    def rank(self):
        return self.lower.endpoint[1]

    def __str__(self):
        return f"P={self.lower} Q={self.upper}"


def parse_path_pair(text):
    """Parse `P=EENN Q=NENE` (order-insensitive, whitespace separated)."""
    p = q = None
    for tok in text.split():
        if tok.startswith("P="):
            p = LatticePath(tok[2:])
        elif tok.startswith("Q="):
            q = LatticePath(tok[2:])
        else:
            raise ValueError(f"unrecognised token {tok!r}")
    if p is None or q is None:
        raise ValueError("need both P= and Q=")
    return BoundedPathPair(p, q)


@dataclass
class SetSystemPresentation:
    """Ordered family of subsets over a linearly ordered ground set."""

    ground_order: tuple
    sets: tuple                 # tuple of frozensets

    def __post_init__(self):
        self.ground_order = tuple(self.ground_order)
        self.sets = tuple(frozenset(s) for s in self.sets)
        g = set(self.ground_order)
        for s in self.sets:
            if s - g:
                raise ValueError(f"set {sorted(s)} leaves the ground order")


def standard_presentation(pp):
    """N_i spans from the i-th North position in Q down to the one in P:
    the i-th North step of a bounded path can occur no earlier than in the
    upper path and no later than in the lower path."""
    pn = pp.lower.north_positions()
    qn = pp.upper.north_positions()
    n = len(pp.lower.steps)
    sets = []
    for lo, hi in zip(qn, pn):
        sets.append(frozenset(range(lo, hi + 1)))
    return SetSystemPresentation(tuple(range(1, n + 1)), tuple(sets))


def validate_interval_presentation(sys):
    """Every set an interval of the order, pairwise inclusion-incomparable."""
    pos = {e: i for i, e in enumerate(sys.ground_order)}
    spans = []
    for s in sys.sets:
        if not s:
            return False
        idxs = sorted(pos[e] for e in s)
        if idxs[-1] - idxs[0] + 1 != len(idxs):
            return False
        spans.append((idxs[0], idxs[-1]))
    for (a1, b1), (a2, b2) in itertools.combinations(spans, 2):
        if (a1 <= a2 and b2 <= b1) or (a2 <= a1 and b1 <= b2):
            return False
    return True


def _max_matching(sets_for_elem, chosen, num_sets):
    """Kuhn's augmenting-path maximum matching; returns the matching size
    of the chosen elements into the sets."""
    match_of_set = [-1] * num_sets
    size = 0
    for e in chosen:
        seen = [False] * num_sets
        if _try_augment(e, sets_for_elem, match_of_set, seen):
            size += 1
    return size


def _try_augment(e, sets_for_elem, match_of_set, seen):
    for j in sets_for_elem[e]:
        if not seen[j]:
            seen[j] = True
            if match_of_set[j] == -1 or _try_augment(
                    match_of_set[j], sets_for_elem, match_of_set, seen):
                match_of_set[j] = e
                return True
    return False


def transversal_matroid(sys):
    """Transversal matroid of the set system: independent = partial
    transversal, decided by maximum bipartite matching."""
    ground = sys.ground_order
    n = len(ground)
    num_sets = len(sys.sets)
    sets_for_elem = {e: [j for j, s in enumerate(sys.sets) if e in s]
                     for e in ground}
    order = list(ground)
    full_rank = _max_matching(sets_for_elem, order, num_sets)
    bases = []
    pos = {e: i for i, e in enumerate(ground)}
    for comb in itertools.combinations(order, full_rank):
        if _max_matching(sets_for_elem, comb, num_sets) == full_rank:
            mask = 0
            for e in comb:
                mask |= 1 << pos[e]
            bases.append(mask)
    return Matroid(ground, bases, validate=False)


def lpm_matroid(pp):
    return transversal_matroid(standard_presentation(pp))


# -- enumeration ----------------------------------------------------------


def paths_with(r, m):
    """All step words with r North and m East steps, lexicographic."""
    out = []
    for north_at in itertools.combinations(range(m + r), r):
        word = ["E"] * (m + r)
        for i in north_at:
            word[i] = "N"
        out.append("".join(word))
    return sorted(out)


def _never_above(lower, upper):
    np_, nq = 0, 0
    for sp, sq in zip(lower, upper):
        np_ += sp == "N"
        nq += sq == "N"
        if np_ > nq:
            return False
    return True


def region_path_count(pp):
    """Number of monotone paths between the bounds (DP over prefixes)."""
    n = len(pp.lower.steps)
    lo_n = [0] * (n + 1)
    hi_n = [0] * (n + 1)
    for i in range(n):
        lo_n[i + 1] = lo_n[i] + (pp.lower.steps[i] == "N")
        hi_n[i + 1] = hi_n[i] + (pp.upper.steps[i] == "N")
    r = pp.rank
    cur = {0: 1}
    for i in range(1, n + 1):
        nxt = {}
        for k, c in cur.items():
            for k2 in (k, k + 1):        # E keeps N-count, N bumps it
                if k2 - k == 1 and k2 > r:
                    continue
                if lo_n[i] <= k2 <= hi_n[i]:
                    nxt[k2] = nxt.get(k2, 0) + c
        cur = nxt
    return cur.get(r, 0)


def bounded_pairs(rank, corank):
    """All valid bounding pairs with endpoint (corank, rank), lex order."""
    paths = paths_with(rank, corank)
    out = []
    for p in paths:
        for q in paths:
            if _never_above(p, q):
                out.append(BoundedPathPair(LatticePath(p), LatticePath(q)))
    return out


def enumerate_lpms(rank, corank, dedupe=False):
    """Yield (pair, matroid) for every bounding pair at (corank, rank);
    with dedupe=True only one representative per isomorphism class."""
    reps = []
    for pp in bounded_pairs(rank, corank):
        m = lpm_matroid(pp)
        if dedupe:
            if any(is_isomorphic(m, r) for r in reps):
                continue
            reps.append(m)
        yield pp, m


# -- the oracle -----------------------------------------------------------


DEFAULT_ORACLE_LIMIT = 10


@lru_cache(maxsize=None)
def _region_index(rank, corank):
    """basis count -> list of (lower, upper) step words, lex order."""
    index = {}
    for pp in bounded_pairs(rank, corank):
        c = region_path_count(pp)
        index.setdefault(c, []).append((pp.lower.steps, pp.upper.steps))
    return index


@lru_cache(maxsize=65536)
def _candidate_matroid(lower, upper):
    return lpm_matroid(BoundedPathPair(LatticePath(lower), LatticePath(upper)))


def is_lpm(matroid, max_ground=DEFAULT_ORACLE_LIMIT):
    """Witnessing bounding pairs, one per connected component, or None.

    Components are tested independently (direct sums of these matroids are
    again of the same kind; brute-validated at small sizes in the tests).
    """
    comps = matroid.components()
    witnesses = []
    for comp in comps:
        if len(comp) > max_ground:
            raise ValueError(
                f"component of size {len(comp)} exceeds oracle budget {max_ground}")
        rest = [e for e in matroid.ground if e not in set(comp)]
        sub = matroid.delete(rest) if rest else matroid
        w = _component_witness(sub)
        if w is None:
            return None
        witnesses.append((tuple(comp), w))
    return witnesses


def _component_witness(sub):
    r = sub.rank_value
    m = sub.size - r
    index = _region_index(r, m)
    for lower, upper in index.get(len(sub.bases), []):
        cand = _candidate_matroid(lower, upper)
        if is_isomorphic(sub, cand) is not None:
            return BoundedPathPair(LatticePath(lower), LatticePath(upper))
    return None
