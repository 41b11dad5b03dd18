#!/usr/bin/env python3
"""Probe the family matcher against the exhaustive oracle on template
graphs just above the exhaustive cross-check size: degenerate colour-role
cells, chain-attached end blocks, and same-class subdivision pairs.

Prints one line per probe; MISMATCH lines mean the structural matcher
disagrees with ground truth and the colour tables need adjusting.
"""

import sys

sys.path.insert(0, "src")

from latbic import bicircular, is_lpm, family_member, graph_from_edges
from latbic.multigraph import subdivide_edge
from latbic.catalog import FamilySpec, family_generate
from latbic.recognizer import bicircular_connected


def probe(label, g):
    truth = is_lpm(bicircular(g), max_ground=12) is not None
    w = family_member(g)
    got = w is not None
    status = "ok " if got == truth else "MISMATCH"
    fam = w.family if w else "-"
    print(f"{status} {label:46s} lpm={truth} family={fam} edges={g.num_edges()}")
    return got == truth


def k3(r, j, l, subdiv=()):
    """Triangle template with chosen roles subdivided once each.

    Roles: 'A' (an edge of the class opposite the loop vertex), 'J' (an
    edge of the class at the loop vertex), 'b' (the remaining single edge),
    'A2'/'J2' (a second edge of the same class).
    """
    pairs = []
    a_ids, j_ids = [], []
    for _ in range(r + 1):
        pairs.append((1, 3))
    for _ in range(j + 1):
        pairs.append((2, 3))
    pairs.append((1, 2))
    for _ in range(l):
        pairs.append((2, 2))
    g = graph_from_edges(pairs)
    a_ids = list(range(1, r + 2))
    j_ids = list(range(r + 2, r + j + 3))
    base_id = r + j + 3
    chosen = {"A": a_ids[0], "A2": a_ids[1] if len(a_ids) > 1 else None,
              "J": j_ids[0], "J2": j_ids[1] if len(j_ids) > 1 else None,
              "b": base_id}
    for role in subdiv:
        g, _ = subdivide_edge(g, chosen[role], 2)
    return g


def g1(r, d, b, subdiv=()):
    """Four-vertex template; roles: 'R' red-class edge, 'B' blue-class
    edge, 'T' top, 'Bo' bottom, 'R2'/'B2' second class edges."""
    pairs = [(1, 2), (3, 4)]           # bottom=1, top=2
    for _ in range(r + 2):
        pairs.append((1, 3))
    for _ in range(b + 2):
        pairs.append((2, 4))
    for _ in range(d):
        pairs.append((1, 4))
    g = graph_from_edges(pairs)
    red0, blue0 = 3, 3 + r + 2
    chosen = {"Bo": 1, "T": 2, "R": red0, "R2": red0 + 1,
              "B": blue0, "B2": blue0 + 1}
    for role in subdiv:
        g, _ = subdivide_edge(g, chosen[role], 2)
    return g


def twok3(r, b, subdiv=()):
    pairs = []
    for _ in range(r + 2):
        pairs.append((1, 3))
    for _ in range(2):
        pairs.append((1, 2))
    for _ in range(b + 2):
        pairs.append((2, 3))
    g = graph_from_edges(pairs)
    chosen = {"R": 1, "K": r + 3, "K2": r + 4, "B": r + 5, "B2": r + 6}
    for role in subdiv:
        g, _ = subdivide_edge(g, chosen[role], 2)
    return g


def f4_end_probe(label, end, chain=((1, 1),), loops=((1, 2),)):
    spec = FamilySpec("F4", "chain", {}, {}, (end, None), chain, loops)
    g, _ = family_generate(spec)
    return probe(label, g)


def main():
    ok = True

    print("== triangle template cells ==")
    for (r, j, l), subs in [
        ((2, 1, 0), ["A b", "A J", "b J", "A A2", "J J2"]),
        ((1, 2, 0), ["b A", "b J", "A J"]),
        ((2, 0, 1), ["A b", "A J", "b J"]),
        ((1, 1, 1), ["A b", "A J", "b J"]),
        ((1, 2, 1), ["A b", "b J", "A J"]),
        ((2, 1, 1), ["A b", "A J", "b J"]),
        ((2, 2, 0), ["b J", "A J", "A b"]),
        ((1, 1, 2), ["A", "b", "J", "A b"]),
        ((2, 0, 2), ["A", "b", "J"]),
        ((2, 1, 2), ["A", "b", "J"]),
    ]:
        for s in subs:
            roles = s.split()
            ok &= probe(f"K3({r},{j},{l}) sub {s}", k3(r, j, l, roles))

    print("== four-vertex template cells ==")
    for (r, d, b), subs in [
        ((1, 0, 0), ["R T", "T Bo", "R Bo", "B T", "R R2"]),
        ((0, 1, 0), ["T Bo", "R T", "B Bo", "R Bo", "T B"]),
        ((0, 0, 1), ["T Bo", "R T", "B T", "B Bo"]),
        ((1, 1, 0), ["R Bo", "R T", "T Bo"]),
        ((1, 0, 1), ["R B", "R T", "R Bo"]),
    ]:
        for s in subs:
            roles = s.split()
            ok &= probe(f"G1({r},{d},{b}) sub {s}", g1(r, d, b, roles))

    print("== triangle-with-doubled-sides cells ==")
    for (r, b), subs in [
        ((1, 0), ["K B", "R K", "R B", "R R2" if False else "K K2"]),
        ((1, 1), ["K B", "R K", "R B"]),
    ]:
        for s in subs:
            roles = s.split()
            ok &= probe(f"2K3({r},{b}) sub {s}", twok3(r, b, roles))

    print("== chain end blocks ==")
    ok &= f4_end_probe("end tri base-sub a=2 j=2",
                       {"a_lens": (1, 1), "j_lens": (1, 1), "base_len": 2})
    ok &= f4_end_probe("end tri base-sub a=2 j=3",
                       {"a_lens": (1, 1), "j_lens": (1, 1, 1), "base_len": 2})
    ok &= f4_end_probe("end tri base-sub a=3 j=2",
                       {"a_lens": (1, 1, 1), "j_lens": (1, 1), "base_len": 2})
    ok &= f4_end_probe("end tri J-sub a=2 j=1",
                       {"a_lens": (1, 1), "j_lens": (2,), "base_len": 1})
    ok &= f4_end_probe("end tri J-sub a=3 j=1",
                       {"a_lens": (1, 1, 1), "j_lens": (2,), "base_len": 1})
    ok &= f4_end_probe("end tri J-sub a=2 j=2",
                       {"a_lens": (1, 1), "j_lens": (1, 2), "base_len": 1})
    ok &= f4_end_probe("end tri A-sub a=3 j=2",
                       {"a_lens": (1, 1, 2), "j_lens": (1, 1), "base_len": 1})
    ok &= f4_end_probe("end banana sub y0",
                       {"a_lens": (), "j_lens": (1, 2), "base_len": None,
                        "y_loops": 0})
    ok &= f4_end_probe("end banana sub y1",
                       {"a_lens": (), "j_lens": (1, 2), "base_len": None,
                        "y_loops": 1})
    ok &= f4_end_probe("end banana sub y2",
                       {"a_lens": (), "j_lens": (1, 2), "base_len": None,
                        "y_loops": 2})
    ok &= f4_end_probe("end banana m3 sub y1",
                       {"a_lens": (), "j_lens": (1, 1, 2), "base_len": None,
                        "y_loops": 1})
    print("ALL OK" if ok else "SOME MISMATCHES")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
