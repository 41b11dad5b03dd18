"""Command line front end.

Subcommands mirror the library operations: graph recognition by the family
or excluded-minor route, bicircular circuit listing, the bounded-path
oracle, presentation building, the excluded-minor catalog, family spec
generation and checking, bounded-path enumeration, the three-way
cross-check sweep, and a recognition benchmark.

Exit codes: 0 success, 2 usage errors, 3 input parse failures, 4 budget
exceeded.
"""

import argparse
import json
import sys
import time

from . import multigraph as mg
from . import matroid as mt
from . import latticepath as lp
from . import catalog as cat
from . import recognizer as rec
from .enumeration import connected_multigraphs

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read_file(path):
    try:
        with open(path) as f:
            return f.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE)


def _load_graph(path):
    try:
        return mg.parse_graph(_read_file(path))
    except mg.MgParseError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE)


def _load_matroid(path):
    try:
        return mt.parse_matroid(_read_file(path))
    except (ValueError, mt.MatroidAxiomError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE)


def _decision_payload(dec):
    payload = {"verdict": dec.verdict, "route": dec.route,
               "connectivity": dec.connectivity}
    cert = dec.certificate
    if isinstance(cert, cat.FamilyWitness):
        payload["family"] = cert.family
        payload["witness"] = cert.spec.to_json()
    elif cert is not None:
        payload["certificate"] = cert
    return payload


def cmd_recognize(args):
    g = _load_graph(args.file)
    try:
        if args.via_minors:
            dec = rec.decide_lpm_via_minors(g, max_edges=args.max_edges)
        else:
            dec = rec.decide_lpm(g, per_component=args.per_component)
    except rec.BudgetExceeded as exc:
        raise CliError(str(exc), EXIT_BUDGET)
    except rec.HypothesisViolation as exc:
        raise CliError(str(exc), EXIT_PARSE)
    return _decision_payload(dec)


def cmd_circuits(args):
    from .bicircular import bicircular, classify_circuit
    g = _load_graph(args.file)
    if g.num_edges() > args.max_edges:
        raise CliError(f"{g.num_edges()} edges exceeds --max-edges {args.max_edges}",
                       EXIT_BUDGET)
    m = bicircular(g)
    out = []
    for cm in m.circuit_masks():
        edges = sorted(m.set_of(cm))
        kind = classify_circuit(g, edges)
        out.append({"edges": edges, "kind": kind.kind,
                    "branch_vertices": list(kind.branch_vertices)})
    return {"circuits": out, "count": len(out)}


def cmd_is_lpm(args):
    m = _load_matroid(args.file)
    try:
        w = lp.is_lpm(m, max_ground=args.max_ground)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_BUDGET)
    if w is None:
        return {"is_lpm": False}
    return {"is_lpm": True,
            "witness": [{"component": [str(x) for x in comp],
                         "lower": pp.lower.steps, "upper": pp.upper.steps}
                        for comp, pp in w]}


def cmd_lpm_build(args):
    try:
        pp = lp.parse_path_pair(" ".join(args.paths))
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE)
    sys_pres = lp.standard_presentation(pp)
    m = lp.transversal_matroid(sys_pres)
    return {
        "lower": pp.lower.steps, "upper": pp.upper.steps,
        "rank": m.rank_value, "corank": m.size - m.rank_value,
        "presentation": [sorted(s) for s in sys_pres.sets],
        "interval": lp.validate_interval_presentation(sys_pres),
        "bases": len(m.bases),
        "matroid": mt.format_matroid(m),
    }


def cmd_excluded(args):
    try:
        g, m = cat.excluded_minor(args.name)
    except KeyError as exc:
        raise CliError(str(exc.args[0]), EXIT_USAGE)
    payload = {
        "name": args.name,
        "graph": mg.format_graph(g),
        "elements": m.size,
        "rank": m.rank_value,
        "bases": len(m.bases),
        "matroid": mt.format_matroid(m),
    }
    if args.check_lpm:
        payload["is_lpm"] = lp.is_lpm(m) is not None
    return payload


def cmd_family_gen(args):
    try:
        spec = cat.FamilySpec.from_json(json.loads(_read_file(args.spec)))
        g, roles = cat.family_generate(spec)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise CliError(f"bad family spec: {exc}", EXIT_PARSE)
    out = {"graph": mg.format_graph(g), "edges": g.num_edges(),
           "roles": {str(e): r for e, r in sorted(roles.items())}}
    if args.out:
        with open(args.out, "w") as f:
            f.write(out["graph"])
    return out


def cmd_family_check(args):
    g = _load_graph(args.file)
    w = cat.family_member(g)
    if w is None:
        return {"member": False}
    return {"member": True, "family": w.family, "witness": w.spec.to_json()}


def cmd_enumerate(args):
    if args.rank + args.corank > 10:
        raise CliError("rank + corank beyond the enumeration budget (10)",
                       EXIT_BUDGET)
    items = []
    for pp, m in lp.enumerate_lpms(args.rank, args.corank, dedupe=args.dedupe):
        items.append({"lower": pp.lower.steps, "upper": pp.upper.steps,
                      "bases": len(m.bases)})
    return {"rank": args.rank, "corank": args.corank,
            "count": len(items), "pairs": items}


def cmd_crosscheck(args):
    total = 0
    tested = 0
    disagreements = []
    for m, g in connected_multigraphs(args.max_edges):
        total += 1
        if not rec.bicircular_connected(g):
            continue
        tested += 1
        rep = rec.cross_check(g)
        if rep.error or not rep.agree:
            disagreements.append({
                "graph": mg.format_graph(g),
                "verdicts": list(rep.verdicts),
                "error": rep.error,
            })
    return {"max_edges": args.max_edges, "graphs": total,
            "tested": tested, "disagreements": disagreements,
            "agreement": not disagreements}


def cmd_bench(args):
    if args.family != "F4":
        raise CliError("only the F4 chain benchmark is provided", EXIT_USAGE)
    k = args.blocks
    end = {"a_lens": (1, 1), "j_lens": (1, 1), "base_len": 1}
    spec = cat.FamilySpec("F4", "chain", {}, {}, (end, end),
                          tuple((1, 1) if i % 3 else (1,) for i in range(k)),
                          ((0, 1), (k // 2, 2)))
    g, _ = cat.family_generate(spec)
    times = []
    verdict = None
    for _ in range(args.repeat):
        dec, ms = rec.timed(rec.decide_lpm, g)
        verdict = dec.verdict
        times.append(ms)
    return {"family": "F4", "blocks": k, "edges": g.num_edges(),
            "verdict": verdict, "ms": min(times), "runs": times}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit a machine-readable result envelope")
    p = argparse.ArgumentParser(
        prog="latbic", parents=[common],
        description="bicircular matroids meeting lattice path matroids")
    sub = p.add_subparsers(dest="command", required=True)

    def add_parser(group, name, **kw):
        return group.add_parser(name, parents=[common], **kw)

    s = add_parser(sub, "recognize",
                   help="decide whether B(G) is a lattice path matroid")
    s.add_argument("file")
    s.add_argument("--via-minors", action="store_true",
                   help="use the exhaustive excluded-minor route")
    s.add_argument("--per-component", action="store_true",
                   help="decide disconnected graphs componentwise")
    s.add_argument("--max-edges", type=int, default=rec.DEFAULT_MINOR_BUDGET,
                   help="edge budget for the excluded-minor route")
    s.set_defaults(fn=cmd_recognize)

    s = add_parser(sub, "circuits", help="list bicircular circuits with their kinds")
    s.add_argument("file")
    s.add_argument("--max-edges", type=int, default=14)
    s.set_defaults(fn=cmd_circuits)

    s = add_parser(sub, "is-lpm", help="exhaustive oracle on a matroid file")
    s.add_argument("file")
    s.add_argument("--max-ground", type=int, default=lp.DEFAULT_ORACLE_LIMIT)
    s.set_defaults(fn=cmd_is_lpm)

    lpm = add_parser(sub, "lpm", help="lattice path operations")
    lpm_sub = lpm.add_subparsers(dest="lpm_command", required=True)
    s = add_parser(lpm_sub, "build", help="standard presentation and matroid of P=.. Q=..")
    s.add_argument("paths", nargs="+", metavar="P=STEPS Q=STEPS")
    s.set_defaults(fn=cmd_lpm_build)

    s = add_parser(sub, "excluded", help="emit an excluded-minor presentation")
    s.add_argument("name", choices=list(cat.EXCLUDED_MINOR_NAMES))
    s.add_argument("--check-lpm", action="store_true")
    s.set_defaults(fn=cmd_excluded)

    fam = add_parser(sub, "family", help="template family operations")
    fam_sub = fam.add_subparsers(dest="family_command", required=True)
    s = add_parser(fam_sub, "gen", help="generate a family member from a JSON spec")
    s.add_argument("spec")
    s.add_argument("--out")
    s.set_defaults(fn=cmd_family_gen)
    s = add_parser(fam_sub, "check", help="family membership of a graph")
    s.add_argument("file")
    s.set_defaults(fn=cmd_family_check)

    s = add_parser(sub, "enumerate", help="all bounded-path matroids at (rank, corank)")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--corank", type=int, required=True)
    s.add_argument("--dedupe", action="store_true")
    s.set_defaults(fn=cmd_enumerate)

    s = add_parser(sub, "crosscheck", help="three-way agreement sweep over small graphs")
    s.add_argument("--max-edges", type=int, default=7)
    s.set_defaults(fn=cmd_crosscheck)

    bench = add_parser(sub, "bench", help="timing experiments")
    bench_sub = bench.add_subparsers(dest="bench_command", required=True)
    s = add_parser(bench_sub, "recognize")
    s.add_argument("--family", default="F4")
    s.add_argument("--blocks", type=int, default=1000)
    s.add_argument("--repeat", type=int, default=3)
    s.set_defaults(fn=cmd_bench)

    return p


def _render_text(payload, out):
    def walk(obj, indent=0):
        pad = "  " * indent
        if isinstance(obj, dict):
            for k, v in obj.items():
                if isinstance(v, (dict, list)) and v:
                    out.write(f"{pad}{k}:\n")
                    walk(v, indent + 1)
                else:
                    out.write(f"{pad}{k}: {v}\n")
        elif isinstance(obj, list):
            for v in obj:
                if isinstance(v, (dict, list)):
                    walk(v, indent + 1)
                    out.write("\n" if indent == 0 else "")
                else:
                    out.write(f"{pad}- {v}\n")
        else:
            out.write(f"{pad}{obj}\n")

    walk(payload)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        payload = args.fn(args)
        status = "ok"
        code = EXIT_OK
    except CliError as exc:
        payload = {"error": str(exc)}
        status = "error"
        code = exc.code
    ms = (time.perf_counter() - t0) * 1000.0
    if args.json:
        envelope = {"status": status, "payload": payload, "timing_ms": ms}
        json.dump(envelope, sys.stdout, indent=2, default=list)
        sys.stdout.write("\n")
    else:
        if status == "error":
            sys.stderr.write(payload["error"] + "\n")
        else:
            _render_text(payload, sys.stdout)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
