"""Command-line front end.

Exit codes: 0 pass / witness found, 1 definite negative, 2 budget
exhausted, 3 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import families as fam
from .containment import find_minor, find_subdivision
from .crossing import crossing_le, is_x_minimal
from .errors import BudgetExceededError, FormatError, GraphError
from .io_formats import (
    dump_graph,
    graph_to_json,
    load_graph,
    plane_graph_to_json,
)
from .multigraph import Multigraph
from .predicates import (
    BoundaryContext,
    Tripod,
    find_robust_or_flexible,
    find_tripod,
    is_almost_4_connected,
    is_robust_cycle,
    is_t_shallow,
)
from .suites import DEFAULT_SUITES, HEAVY_SUITES, SUITE_IDS, run_suite

EXIT_PASS = 0
EXIT_NEGATIVE = 1
EXIT_BUDGET = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


_GENERATORS = {
    "wheel": fam.wheel,
    "alt-double-wheel": fam.alt_double_wheel,
    "b": fam.b_graph,
    "ladder": fam.ladder,
    "w-prime": fam.w_prime,
    "circular-ladder": fam.circular_ladder,
    "mobius-ladder": fam.mobius_ladder,
    "k4k": fam.k4k,
    "k4k-split": fam.k4k_split,
    "k3k": fam.k3k,
    "cycle-chords": fam.cycle_with_distance_k_chords,
    "cycle-two-hubs": fam.cycle_plus_two_hubs,
    "a4-gadget": lambda _k: fam.a4_gadget(),
    "complete": lambda k: fam.LabeledGraph(fam.complete(k)),
}


def _read_graph(path: str) -> Multigraph:
    p = Path(path)
    text = p.read_text()
    suffix = p.suffix.lstrip(".").lower()
    fmt = {"json": "json", "g6": "g6", "graph6": "g6", "dot": "dot", "gv": "dot"}.get(
        suffix
    )
    if fmt is None:
        head = text.lstrip()[:1]
        fmt = "json" if head == "{" else "dot" if head in ("g", "/") else "g6"
    return load_graph(text, fmt)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _ints(csv: str) -> list[int]:
    try:
        return [int(x) for x in csv.split(",") if x != ""]
    except ValueError:
        raise FormatError(f"expected comma-separated integers, got {csv!r}") from None


def build_parser() -> _Parser:
    ap = _Parser(prog="crosscheck", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a named family graph")
    g.add_argument("family", choices=sorted(_GENERATORS))
    g.add_argument("k", type=int, nargs="?", default=4)
    g.add_argument("--format", choices=("json", "dot", "g6"), default="json")
    g.add_argument("-o", "--output")
    g.add_argument("--labels", action="store_true", help="print vertex labels to stderr")

    c = sub.add_parser("check", help="evaluate a structure predicate")
    c.add_argument("predicate", choices=("almost4", "shallow", "robust", "tripod"))
    c.add_argument("graph")
    c.add_argument("--t", type=int, default=5, help="shallowness threshold")
    c.add_argument("--boundary", help="x1,x2,x3 for robust checks")
    c.add_argument("--cycle", help="edge ids of the cycle to test")
    c.add_argument("--feet", help="u1,u2,u3 for tripod checks")
    c.add_argument("--budget", type=int, default=None)

    fs = sub.add_parser("find-subdivision", help="search for a subdivision witness")
    fs.add_argument("pattern")
    fs.add_argument("host")
    fs.add_argument("--budget", type=int, default=2_000_000)

    fm = sub.add_parser("find-minor", help="search for a minor model")
    fm.add_argument("pattern")
    fm.add_argument("host")
    fm.add_argument("--budget", type=int, default=5_000_000)

    cr = sub.add_parser("crossing", help="decide crossing number <= c")
    cr.add_argument("graph")
    cr.add_argument("--le", type=int, required=True)
    cr.add_argument("--budget", type=int, default=200_000)

    xm = sub.add_parser("xminimal", help="report the X-minimality conditions")
    xm.add_argument("graph")
    xm.add_argument("--budget", type=int, default=500_000)

    st = sub.add_parser("suite", help="run a verification suite")
    st.add_argument("suite", choices=("all",) + SUITE_IDS)
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--scale", type=int, default=None)
    st.add_argument("--budget", type=int, default=None)
    st.add_argument("--workers", type=int, default=1)
    st.add_argument("--heavy", action="store_true", help="include heavy suites in 'all'")
    st.add_argument("-o", "--output")

    cv = sub.add_parser("convert", help="convert between graph file formats")
    cv.add_argument("input")
    cv.add_argument("--to", choices=("json", "dot", "g6"), required=True)
    cv.add_argument("-o", "--output")
    return ap


def _cmd_gen(args) -> int:
    lg = _GENERATORS[args.family](args.k)
    _emit(dump_graph(lg.graph, args.format), args.output)
    if args.labels:
        for v, lab in sorted(lg.labels.items()):
            print(f"{v}\t{lab}", file=sys.stderr)
    return EXIT_PASS


def _cmd_check(args) -> int:
    g = _read_graph(args.graph)
    if args.predicate == "almost4":
        ok = is_almost_4_connected(g)
        print("true" if ok else "false")
        return EXIT_PASS if ok else EXIT_NEGATIVE
    if args.predicate == "shallow":
        rep = is_t_shallow(g, args.t)
        if rep.holds:
            print("true")
            return EXIT_PASS
        print(
            json.dumps(
                {
                    "holds": False,
                    "violation": {
                        "sideA": sorted(rep.violation.side_a),
                        "sideB": sorted(rep.violation.side_b),
                    },
                },
                sort_keys=True,
            )
        )
        return EXIT_NEGATIVE
    if args.predicate == "robust":
        if not args.boundary:
            raise FormatError("robust check needs --boundary x1,x2,x3")
        x1, x2, x3 = _ints(args.boundary)
        ctx = BoundaryContext.build(g, x1, x2, x3)
        if args.cycle:
            wit = is_robust_cycle(ctx, _ints(args.cycle))
            if wit is None:
                print("none")
                return EXIT_NEGATIVE
            print(json.dumps({"cycle": list(wit.cycle_edges), "insideEdge": wit.inside_edge}))
            return EXIT_PASS
        res = find_robust_or_flexible(ctx, budget=args.budget or 500_000)
        if res is None:
            print("none")
            return EXIT_NEGATIVE
        eids, kind, wit = res
        print(json.dumps({"kind": kind, "cycle": sorted(eids)}, sort_keys=True))
        return EXIT_PASS
    if args.predicate == "tripod":
        if not args.feet:
            raise FormatError("tripod check needs --feet u1,u2,u3")
        u1, u2, u3 = _ints(args.feet)
        out = find_tripod(g, u1, u2, u3, budget=args.budget or 2_000_000)
        if isinstance(out, Tripod):
            print(
                json.dumps(
                    {
                        "tripod": {
                            "feet": list(out.feet),
                            "contacts": list(out.contacts),
                            "centers": list(out.centers),
                            "legPaths": [list(p) for p in out.leg_paths],
                            "triadPaths": [
                                [list(p) for p in t] for t in out.triad_paths
                            ],
                        }
                    },
                    sort_keys=True,
                )
            )
        else:
            print(json.dumps({"diskEmbedding": plane_graph_to_json(out)}, sort_keys=True))
        return EXIT_PASS
    raise FormatError(f"unknown predicate {args.predicate}")


def _cmd_find_subdivision(args) -> int:
    pattern = _read_graph(args.pattern)
    host = _read_graph(args.host)
    eta = find_subdivision(pattern, host, budget=args.budget)
    if eta is None:
        print("NONE")
        return EXIT_NEGATIVE
    print(
        json.dumps(
            {
                "vertexMap": {str(k): v for k, v in sorted(eta.vertex_map.items())},
                "edgeMap": {str(k): list(v) for k, v in sorted(eta.edge_map.items())},
            },
            sort_keys=True,
        )
    )
    return EXIT_PASS


def _cmd_find_minor(args) -> int:
    pattern = _read_graph(args.pattern)
    host = _read_graph(args.host)
    model = find_minor(pattern, host, budget=args.budget)
    if model is None:
        print("NONE")
        return EXIT_NEGATIVE
    print(
        json.dumps(
            {
                "branchSets": {
                    str(k): sorted(v) for k, v in sorted(model.branch_sets.items())
                },
                "edgeAssign": {
                    str(k): v for k, v in sorted(model.edge_assign.items())
                },
            },
            sort_keys=True,
        )
    )
    return EXIT_PASS


def _cmd_crossing(args) -> int:
    g = _read_graph(args.graph)
    cert = crossing_le(g, args.le, budget=args.budget)
    if cert is None:
        print("NONE")
        return EXIT_NEGATIVE
    print(
        json.dumps(
            {
                "level": cert.level,
                "pairs": [list(p) for p in cert.pairs],
                "finalEmbedding": plane_graph_to_json(cert.final_embedding),
            },
            sort_keys=True,
        )
    )
    return EXIT_PASS


def _cmd_xminimal(args) -> int:
    g = _read_graph(args.graph)
    rep = is_x_minimal(g, budget=args.budget)
    print(
        json.dumps(
            {
                "verdict": rep.verdict,
                "failedCondition": rep.failed_condition,
                "witness": rep.witness,
            },
            sort_keys=True,
        )
    )
    return EXIT_PASS if rep.verdict else EXIT_NEGATIVE


def _cmd_suite(args) -> int:
    ids = (
        [args.suite]
        if args.suite != "all"
        else list(DEFAULT_SUITES) + (list(HEAVY_SUITES) if args.heavy else [])
    )
    reports = [
        run_suite(
            sid,
            seed=args.seed,
            scale=args.scale,
            budget=args.budget,
            workers=args.workers,
        )
        for sid in ids
    ]
    text = "".join(r.to_json() for r in reports)
    _emit(text, args.output)
    if any(
        f["assertion"] == "budget" for r in reports for f in r.failures
    ):
        return EXIT_BUDGET
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_NEGATIVE


def _cmd_convert(args) -> int:
    g = _read_graph(args.input)
    _emit(dump_graph(g, args.to), args.output)
    return EXIT_PASS


_DISPATCH = {
    "gen": _cmd_gen,
    "check": _cmd_check,
    "find-subdivision": _cmd_find_subdivision,
    "find-minor": _cmd_find_minor,
    "crossing": _cmd_crossing,
    "xminimal": _cmd_xminimal,
    "suite": _cmd_suite,
    "convert": _cmd_convert,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        return _DISPATCH[args.command](args)
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
