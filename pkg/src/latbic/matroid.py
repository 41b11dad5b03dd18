"""Exact small-matroid engine.

A matroid is stored as its ordered ground set plus the full list of bases as
bitmasks.  Everything else (rank, circuits, flats, connectivity, duality,
minors, isomorphism, minor containment, clones, 2-sums, extensions,
cosimplification) is derived from the basis list.  Ground sets are capped at
GROUND_LIMIT elements: this is an exhaustive-search engine for desk-scale
instances, not an asymptotic one.
"""

import itertools
from dataclasses import dataclass

GROUND_LIMIT = 24


class MatroidAxiomError(ValueError):
    """Raised when a purported basis list / oracle violates the axioms."""


def popcount(x):
    return bin(x).count("1")


class Matroid:
    __slots__ = ("ground", "bases", "rank_value", "_pos", "_cache")

    def __init__(self, ground, bases, validate=True):
        ground = tuple(ground)
        if len(ground) > GROUND_LIMIT:
            raise ValueError(
                f"ground set of size {len(ground)} exceeds engine bound {GROUND_LIMIT}")
        if len(set(ground)) != len(ground):
            raise ValueError("duplicate ground element labels")
        self.ground = ground
        self._pos = {e: i for i, e in enumerate(ground)}
        bset = sorted(set(int(b) for b in bases))
        if not bset:
            if ground:
                raise MatroidAxiomError("basis list must be nonempty")
            bset = [0]
        self.bases = tuple(bset)
        self.rank_value = popcount(self.bases[0])
        self._cache = {}
        if validate:
            self._validate()

    # -- construction checks ---------------------------------------------

    def _validate(self):
        r = self.rank_value
        n = len(self.ground)
        for b in self.bases:
            if b >> n:
                raise MatroidAxiomError("basis mask outside ground set")
            if popcount(b) != r:
                raise MatroidAxiomError(
                    f"bases of unequal size: {self.set_of(self.bases[0])} vs {self.set_of(b)}")
        bset = set(self.bases)
        for b1 in self.bases:
            for b2 in self.bases:
                if b1 == b2:
                    continue
                diff = b1 & ~b2
                x = diff & (-diff)
                ok = False
                add = b2 & ~b1
                while add:
                    y = add & (-add)
                    if (b1 & ~x) | y in bset:
                        ok = True
                        break
                    add &= add - 1
                if not ok:
                    raise MatroidAxiomError(
                        "basis exchange fails for "
                        f"{self.set_of(b1)} and {self.set_of(b2)}")

    # -- label/mask helpers ------------------------------------------------

    def mask_of(self, labels):
        m = 0
        for e in labels:
            try:
                m |= 1 << self._pos[e]
            except KeyError:
                raise KeyError(f"element {e!r} not in ground set") from None
        return m

    def set_of(self, mask):
        return frozenset(self.ground[i] for i in range(len(self.ground))
                         if mask >> i & 1)

    @property
    def size(self):
        return len(self.ground)

    def __repr__(self):
        return f"Matroid(n={self.size}, r={self.rank_value}, bases={len(self.bases)})"

    # -- derived tables ----------------------------------------------------

    def _independence_table(self):
        """ind[mask] for all subsets (downward closure of the bases)."""
        tab = self._cache.get("ind")
        if tab is not None:
            return tab
        n = len(self.ground)
        tab = bytearray(1 << n)
        for b in self.bases:
            tab[b] = 1
        for mask in range((1 << n) - 1, -1, -1):
            if tab[mask]:
                m = mask
                while m:
                    bit = m & (-m)
                    tab[mask ^ bit] = 1
                    m ^= bit
        self._cache["ind"] = tab
        return tab

    def is_independent(self, labels):
        return self.is_independent_mask(self.mask_of(labels))

    def is_independent_mask(self, mask):
        return bool(self._independence_table()[mask])

    def _rank_table(self):
        tab = self._cache.get("rank")
        if tab is not None:
            return tab
        ind = self._independence_table()
        n = len(self.ground)
        tab = bytearray(1 << n)
        # greedy: rank(X) = rank(X - e) + [X's greedy basis grows]; computed
        # by extending a maximal independent subset bit by bit
        best = [0] * (1 << n)
        for mask in range(1 << n):
            if mask == 0:
                continue
            bit = mask & (-mask)
            rest = mask ^ bit
            cand = best[rest] | bit
            if ind[cand]:
                best[mask] = cand
            else:
                best[mask] = best[rest]
            tab[mask] = popcount(best[mask])
        self._cache["rank"] = tab
        return tab

    def rank(self, labels=None):
        if labels is None:
            return self.rank_value
        return self.rank_mask(self.mask_of(labels))

    def rank_mask(self, mask):
        return self._rank_table()[mask]

    def closure_mask(self, mask):
        r = self.rank_mask(mask)
        out = mask
        for i in range(len(self.ground)):
            b = 1 << i
            if not mask & b and self.rank_mask(mask | b) == r:
                out |= b
        return out

    # -- circuits ----------------------------------------------------------

    def circuit_masks(self):
        circs = self._cache.get("circuits")
        if circs is not None:
            return circs
        ind = self._independence_table()
        n = len(self.ground)
        circs = []
        for mask in range(1, 1 << n):
            if ind[mask]:
                continue
            is_circ = True
            m = mask
            while m:
                bit = m & (-m)
                if not ind[mask ^ bit]:
                    is_circ = False
                    break
                m ^= bit
            if is_circ:
                circs.append(mask)
        circs = tuple(sorted(circs, key=lambda c: (popcount(c), c)))
        self._cache["circuits"] = circs
        return circs

    def circuits(self):
        return [sorted(self.set_of(c), key=str) for c in self.circuit_masks()]

    def loops(self):
        return [e for e in self.ground if not self.is_independent([e])]

    def coloops(self):
        full = (1 << len(self.ground)) - 1
        out = []
        for i, e in enumerate(self.ground):
            if self.rank_mask(full ^ (1 << i)) < self.rank_value:
                out.append(e)
        return out

    # -- connectivity --------------------------------------------------------

    def is_connected(self):
        """Connected: no proper nonempty separator; singletons and the empty
        matroid count as connected (convention, flagged in docs)."""
        n = len(self.ground)
        if n <= 1:
            return True
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.circuit_masks():
            first = None
            m = c
            while m:
                bit = m & (-m)
                i = bit.bit_length() - 1
                if first is None:
                    first = i
                else:
                    ra, rb = find(first), find(i)
                    if ra != rb:
                        parent[ra] = rb
                m ^= bit
        roots = {find(i) for i in range(n)}
        return len(roots) == 1

    def components(self):
        """Partition of the ground set into connected components."""
        n = len(self.ground)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.circuit_masks():
            idxs = [i for i in range(n) if c >> i & 1]
            for i in idxs[1:]:
                ra, rb = find(idxs[0]), find(i)
                if ra != rb:
                    parent[ra] = rb
        groups = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(self.ground[i])
        return sorted(groups.values(), key=lambda g: [str(x) for x in g])

    # -- operations ----------------------------------------------------------

    def dual(self):
        full = (1 << len(self.ground)) - 1
        return Matroid(self.ground, [full ^ b for b in self.bases], validate=False)

    def delete(self, labels):
        return self.minor(delete=labels, contract=())

    def contract(self, labels):
        return self.minor(delete=(), contract=labels)

    def minor(self, delete=(), contract=()):
        dmask = self.mask_of(delete)
        cmask = self.mask_of(contract)
        if dmask & cmask:
            raise ValueError("delete and contract sets overlap")
        return self._minor_masks(dmask, cmask)

    def _minor_masks(self, dmask, cmask):
        ind = self._independence_table()
        n = len(self.ground)
        # a maximal independent subset of the contract set
        ic = 0
        m = cmask
        while m:
            bit = m & (-m)
            if ind[ic | bit]:
                ic |= bit
            m ^= bit
        keep = [i for i in range(n) if not (dmask | cmask) >> i & 1]
        ground = tuple(self.ground[i] for i in keep)
        best_r = -1
        bases = []
        for sub in range(1 << len(keep)):
            mask = ic
            s = sub
            while s:
                bit = s & (-s)
                mask |= 1 << keep[bit.bit_length() - 1]
                s ^= bit
            if ind[mask]:
                r = popcount(sub)
                if r > best_r:
                    best_r = r
                    bases = [sub]
                elif r == best_r:
                    bases.append(sub)
        return Matroid(ground, bases, validate=False)

    # -- invariants used for isomorphism pruning -----------------------------

    def element_invariants(self):
        inv = self._cache.get("elem_inv")
        if inv is not None:
            return inv
        n = len(self.ground)
        circs = self.circuit_masks()
        sizes = sorted({popcount(c) for c in circs})
        deg = {e: [0] * len(sizes) for e in self.ground}
        size_idx = {s: j for j, s in enumerate(sizes)}
        for c in circs:
            j = size_idx[popcount(c)]
            m = c
            while m:
                bit = m & (-m)
                deg[self.ground[bit.bit_length() - 1]][j] += 1
                m ^= bit
        cls = {}
        for i, e in enumerate(self.ground):
            closure = self.closure_mask(1 << i)
            cls[e] = (tuple(deg[e]), popcount(closure))
        self._cache["elem_inv"] = cls
        return cls

    def signature(self):
        """Cheap isomorphism-invariant fingerprint."""
        sig = self._cache.get("sig")
        if sig is not None:
            return sig
        circs = self.circuit_masks()
        size_mult = tuple(sorted(popcount(c) for c in circs))
        inv = self.element_invariants()
        sig = (len(self.ground), self.rank_value, len(self.bases),
               size_mult, tuple(sorted(inv.values())))
        self._cache["sig"] = sig
        return sig

    def relabel(self, mapping):
        """New matroid with ground labels mapped through `mapping`."""
        ground = tuple(mapping[e] for e in self.ground)
        return Matroid(ground, self.bases, validate=False)


def is_isomorphic(m1, m2):
    """A ground-set bijection carrying bases onto bases, or None.

    Backtracking over invariant-respecting assignments, classic pruning by
    (rank, basis count, circuit degree vectors, closure sizes).
    """
    if m1.size != m2.size or m1.rank_value != m2.rank_value:
        return None
    if len(m1.bases) != len(m2.bases):
        return None
    if m1.signature() != m2.signature():
        return None
    n = m1.size
    inv1 = m1.element_invariants()
    inv2 = m2.element_invariants()
    bases2 = set(m2.bases)

    # group target positions by invariant
    by_inv = {}
    for j, f in enumerate(m2.ground):
        by_inv.setdefault(inv2[f], []).append(j)
    order = sorted(range(n), key=lambda i: len(by_inv.get(inv1[m1.ground[i]], [])))

    # incremental check data: bases of m1 as masks in m1 position order
    bases1 = m1.bases

    assign = [-1] * n          # m1 position -> m2 position
    used = [False] * n

    def compatible(k):
        # the multiset of basis projections onto the assigned positions must
        # transport exactly onto the corresponding projections in m2
        idxs = order[: k + 1]
        amask2 = 0
        for i in idxs:
            amask2 |= 1 << assign[i]
        proj1 = {}
        for b in bases1:
            img = 0
            for i in idxs:
                if b >> i & 1:
                    img |= 1 << assign[i]
            proj1[img] = proj1.get(img, 0) + 1
        proj2 = {}
        for b in bases2:
            key = b & amask2
            proj2[key] = proj2.get(key, 0) + 1
        return proj1 == proj2

    def rec(k):
        if k == n:
            # full check
            for b in bases1:
                img = 0
                m = b
                while m:
                    bit = m & (-m)
                    img |= 1 << assign[bit.bit_length() - 1]
                    m ^= bit
                if img not in bases2:
                    return False
            return True
        i = order[k]
        e = m1.ground[i]
        for j in by_inv.get(inv1[e], []):
            if used[j]:
                continue
            assign[i] = j
            used[j] = True
            if compatible(k) and rec(k + 1):
                return True
            used[j] = False
            assign[i] = -1
        return False

    if rec(0):
        return {m1.ground[i]: m2.ground[assign[i]] for i in range(n)}
    return None


def has_minor(big, small):
    """Certificate (delete set, contract set, bijection) that `small` is a
    minor of `big`, or None.  Exhaustive over (delete, contract) splits of
    the removed elements, deduplicating identical intermediate minors."""
    n, k = big.size, small.size
    if k > n:
        return None
    if small.rank_value > big.rank_value:
        return None
    if k - small.rank_value > n - big.rank_value:  # corank is minor-monotone
        return None
    removed_count = n - k
    ssig = small.signature()
    seen = set()
    idxs = range(n)
    for removed in itertools.combinations(idxs, removed_count):
        rmask = 0
        for i in removed:
            rmask |= 1 << i
        for csub in range(1 << removed_count):
            cmask = 0
            for t in range(removed_count):
                if csub >> t & 1:
                    cmask |= 1 << removed[t]
            dmask = rmask ^ cmask
            # rank conditions
            rc = big.rank_mask(cmask)
            if big.rank_value - rc != small.rank_value:
                continue
            minor = big._minor_masks(dmask, cmask)
            key = (minor.ground, minor.bases)
            if key in seen:
                continue
            seen.add(key)
            if minor.signature() != ssig:
                continue
            bij = is_isomorphic(minor, small)
            if bij is not None:
                dset = frozenset(big.set_of(dmask))
                cset = frozenset(big.set_of(cmask))
                return (dset, cset, bij)
    return None


# -- flats ----------------------------------------------------------------


@dataclass
class FlatReport:
    flats: list                  # (frozenset, rank) for every flat
    connected: dict              # flat frozenset -> bool
    fundamental: list            # fundamental flats, as frozensets
    two_disjoint_chains: bool


def fundamental_flats(m):
    """All flats with connectivity and fundamental flags.

    A fundamental flat is a connected flat X with |X| > 1 and r(X) < r(M)
    such that some spanning circuit meets X in a basis of X.  Also reports
    whether the fundamental flats can be covered by two chains under
    inclusion (fails iff some three are pairwise incomparable).
    """
    if m.size and not m.is_connected():
        raise ValueError("fundamental_flats requires a connected matroid")
    n = m.size
    rtab = m._rank_table()
    flats = []
    for mask in range(1 << n):
        if m.closure_mask(mask) == mask:
            flats.append(mask)
    circs = m.circuit_masks()
    spanning = [c for c in circs if rtab[c] == m.rank_value]

    def restriction_connected(mask):
        elems = [i for i in range(n) if mask >> i & 1]
        if len(elems) <= 1:
            return True
        parent = {i: i for i in elems}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        touched = set()
        for c in circs:
            if c & ~mask:
                continue
            idxs = [i for i in elems if c >> i & 1]
            touched.update(idxs)
            for i in idxs[1:]:
                ra, rb = find(idxs[0]), find(i)
                if ra != rb:
                    parent[ra] = rb
        if len(touched) != len(elems):
            return False
        return len({find(i) for i in elems}) == 1

    out_flats = []
    connected = {}
    fundamental = []
    for fmask in flats:
        fset = m.set_of(fmask)
        fr = rtab[fmask]
        out_flats.append((fset, fr))
        conn = restriction_connected(fmask)
        connected[fset] = conn
        if conn and popcount(fmask) > 1 and fr < m.rank_value:
            for c in spanning:
                inter = c & fmask
                if popcount(inter) == fr and m.is_independent_mask(inter):
                    fundamental.append(fset)
                    break

    two_chains = True
    fm = [m.mask_of(f) for f in fundamental]
    for a, b, c in itertools.combinations(fm, 3):
        pairs = [(a, b), (a, c), (b, c)]
        if all(not (x & ~y == 0 or y & ~x == 0) for x, y in pairs):
            two_chains = False
            break

    return FlatReport(out_flats, connected, fundamental, two_chains)


# -- clones, extensions, sums, cosimplification ----------------------------


def are_clones(m, e, f):
    if e == f:
        raise ValueError("clone test needs two distinct elements")
    i, j = m._pos[e], m._pos[f]
    bi, bj = 1 << i, 1 << j
    bset = set(m.bases)
    for b in m.bases:
        x, y = bool(b & bi), bool(b & bj)
        if x != y:
            swapped = b ^ bi ^ bj
            if swapped not in bset:
                return False
    return True


def _matroid_from_oracle(ground, oracle, validate):
    """All-subset sweep: heredity check + maximal independents as bases."""
    n = len(ground)
    if n > 16:
        raise ValueError("oracle construction is exhaustive; ground too large")
    ind = bytearray(1 << n)
    for mask in range(1 << n):
        labels = [ground[i] for i in range(n) if mask >> i & 1]
        ind[mask] = 1 if oracle(labels) else 0
    if not ind[0]:
        raise MatroidAxiomError("empty set must be independent")
    for mask in range(1 << n):
        if not ind[mask]:
            continue
        m = mask
        while m:
            bit = m & (-m)
            if not ind[mask ^ bit]:
                raise MatroidAxiomError(
                    "heredity fails: "
                    f"{[ground[i] for i in range(n) if mask >> i & 1]} independent but "
                    f"{[ground[i] for i in range(n) if (mask ^ bit) >> i & 1]} is not")
            m ^= bit
    rmax = max(popcount(mask) for mask in range(1 << n) if ind[mask])
    bases = [mask for mask in range(1 << n)
             if ind[mask] and popcount(mask) == rmax]
    # reject non-matroidal oracles: every independent set must extend to size rmax
    mtr = Matroid(ground, bases, validate=validate)
    tab = mtr._independence_table()
    for mask in range(1 << n):
        if bool(ind[mask]) != bool(tab[mask]):
            raise MatroidAxiomError(
                "exchange fails: independent set "
                f"{[ground[i] for i in range(n) if mask >> i & 1]} "
                "does not extend to a maximal one")
    return mtr


def from_independence(ground, oracle):
    """Matroid from an independence oracle, with axiom validation."""
    return _matroid_from_oracle(tuple(ground), oracle, validate=True)


def extend_parallel(m, e, label=None):
    if label is None:
        label = _fresh_label(m, e)
    ground = m.ground + (label,)
    i = m._pos[e]
    n = m.size
    newbit = 1 << n
    ebit = 1 << i
    bases = set(m.bases)
    for b in m.bases:
        if b & ebit:
            bases.add((b ^ ebit) | newbit)
    return Matroid(ground, bases, validate=False), label


def extend_series(m, e, label=None):
    if label is None:
        label = _fresh_label(m, e)
    dm, _ = extend_parallel(m.dual(), e, label)
    return dm.dual(), label


def extend_clone(m, anchor, label=None):
    """Clone extension over a set of mutual clones.

    For a parallel-class anchor this duplicates the presentation directly
    (a parallel extension); for a general circuit anchor the circuit family
    is doubled per the transposition rule and the result validated.
    """
    anchor = list(anchor)
    if not anchor:
        raise ValueError("clone anchor must be nonempty")
    for e in anchor:
        if e not in m._pos:
            raise KeyError(f"anchor element {e!r} missing from ground set")
    for e, f in itertools.combinations(anchor, 2):
        if not are_clones(m, e, f):
            raise ValueError(f"anchor elements {e!r}, {f!r} are not clones")
    if label is None:
        label = _fresh_label(m, anchor[0])

    amask = m.mask_of(anchor)
    pairwise_parallel = all(
        not m.is_independent([e, f]) for e, f in itertools.combinations(anchor, 2)
    ) and len(anchor) >= 2
    if pairwise_parallel:
        out, _ = extend_parallel(m, anchor[0], label)
        return out, label

    circs = m.circuit_masks()
    if amask not in circs:
        raise ValueError("clone extension implemented for parallel-class or "
                         "circuit anchors only")
    n = m.size
    newbit = 1 << n
    fam = set(circs)
    for c in circs:
        inter = c & amask
        mm = inter
        while mm:
            bit = mm & (-mm)
            fam.add((c ^ bit) | newbit)
            mm ^= bit
    # minimalize
    fam = sorted(fam, key=popcount)
    minimal = []
    for c in fam:
        if not any(prev & ~c == 0 for prev in minimal):
            minimal.append(c)
    ground = m.ground + (label,)
    out = _matroid_from_circuits(ground, minimal)
    for e in anchor:
        if not are_clones(out, e, label):
            raise MatroidAxiomError(
                "clone-extension construction failed to produce a clone")
    return out, label


def _fresh_label(m, base):
    label = f"{base}'"
    while label in m._pos:
        label += "'"
    return label


def _matroid_from_circuits(ground, circuit_masks, validate=True):
    n = len(ground)
    ind = bytearray(1 << n)
    for mask in range(1 << n):
        ind[mask] = 1
    for c in circuit_masks:
        # mark all supersets of c dependent
        rest = [(i) for i in range(n) if not c >> i & 1]
        for sub in range(1 << len(rest)):
            mask = c
            s = sub
            while s:
                bit = s & (-s)
                mask |= 1 << rest[bit.bit_length() - 1]
                s ^= bit
            ind[mask] = 0
    rmax = max(popcount(mask) for mask in range(1 << n) if ind[mask])
    bases = [mask for mask in range(1 << n)
             if ind[mask] and popcount(mask) == rmax]
    return Matroid(ground, bases, validate=validate)


def two_sum(m1, m2, e):
    """2-sum over the shared element e, by the two circuit clauses:
    circuits avoiding e survive from each part, and mixed circuits are the
    unions (C1 - e) + (C2 - e) with e in both C1 and C2."""
    if e not in m1._pos or e not in m2._pos:
        raise ValueError(f"shared element {e!r} must be in both ground sets")
    shared = set(m1.ground) & set(m2.ground)
    if shared != {e}:
        raise ValueError(f"ground sets must intersect exactly in {e!r}, got {shared}")
    for m in (m1, m2):
        if not m.is_independent([e]):
            raise ValueError("base point is a loop")
        if e in m.coloops():
            raise ValueError("base point is a coloop")
    g1 = [x for x in m1.ground if x != e]
    g2 = [x for x in m2.ground if x != e]
    ground = tuple(g1 + g2)
    pos = {x: i for i, x in enumerate(ground)}

    def remap(m, cmask, with_e):
        out = 0
        hase = False
        mm = cmask
        while mm:
            bit = mm & (-mm)
            lab = m.ground[bit.bit_length() - 1]
            if lab == e:
                hase = True
            else:
                out |= 1 << pos[lab]
            mm ^= bit
        return out, hase

    fam = []
    through1, through2 = [], []
    for c in m1.circuit_masks():
        mask, hase = remap(m1, c, True)
        (through1 if hase else fam).append(mask)
    for c in m2.circuit_masks():
        mask, hase = remap(m2, c, True)
        (through2 if hase else fam).append(mask)
    for a in through1:
        for b in through2:
            fam.append(a | b)
    fam = sorted(set(fam), key=popcount)
    minimal = []
    for c in fam:
        if not any(prev & ~c == 0 for prev in minimal):
            minimal.append(c)
    return _matroid_from_circuits(ground, minimal, validate=False)


def series_classes(m):
    """Partition of the ground set into coparallel (series) classes."""
    d = m.dual()
    n = m.size
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in d.circuit_masks():
        if popcount(c) == 2:
            idxs = [i for i in range(n) if c >> i & 1]
            ra, rb = find(idxs[0]), find(idxs[1])
            if ra != rb:
                parent[ra] = rb
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(m.ground[i])
    return sorted(groups.values(), key=lambda g: [str(x) for x in g])


def cosimplify(m):
    """Contract all but one element of every nontrivial series class and
    delete coloops, iterated to a fixpoint."""
    cur = m
    while True:
        contract = []
        for cls in series_classes(cur):
            if len(cls) > 1:
                contract.extend(cls[1:])
        delete = cur.coloops()
        delete = [e for e in delete if e not in contract]
        if not contract and not delete:
            return cur
        cur = cur.minor(delete=delete, contract=contract)


# -- exchange text format ---------------------------------------------------


def parse_matroid(text):
    """`ground e1 e2 ...` then `basis ei ej ...` lines; `#` comments."""
    ground = None
    bases = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "ground":
            if ground is not None:
                raise ValueError(f"line {line_no}: duplicate ground line")
            ground = parts[1:]
        elif parts[0] == "basis":
            if ground is None:
                raise ValueError(f"line {line_no}: basis before ground")
            bases.append(parts[1:])
        else:
            raise ValueError(f"line {line_no}: unknown directive {parts[0]!r}")
    if ground is None:
        raise ValueError("missing ground line")
    pos = {e: i for i, e in enumerate(ground)}
    masks = []
    for b in bases:
        mask = 0
        for e in b:
            if e not in pos:
                raise ValueError(f"basis element {e!r} not in ground")
            mask |= 1 << pos[e]
        masks.append(mask)
    return Matroid(ground, masks)


def format_matroid(m):
    lines = ["ground " + " ".join(str(e) for e in m.ground)]
    for b in m.bases:
        elems = [str(m.ground[i]) for i in range(m.size) if b >> i & 1]
        lines.append("basis " + " ".join(elems))
    return "\n".join(lines) + "\n"


def uniform(r, n, labels=None):
    if labels is None:
        labels = tuple(range(1, n + 1))
    bases = []
    for comb in itertools.combinations(range(n), r):
        mask = 0
        for i in comb:
            mask |= 1 << i
        bases.append(mask)
    return Matroid(labels, bases, validate=False)
