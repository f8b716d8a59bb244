"""Command-line interface: ``edgenum <subcommand> ...``.

Exit codes: 0 success, 1 domain violation (an asserted presentation is
invalid), 2 usage or parse error.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import (
    AnalysisOptions,
    CensusError,
    load_census,
    rows_to_csv,
    run_census,
    scan_conjecture,
    verify_propositions,
)
from .diagram import DiagramError, parse_diagram, parse_gauss, parse_pd, writhe
from .digraph import build, classify, describe, to_dot
from .invariants import edge_number_bounds, jones
from .presentation import CutSet, CutSetError, check_presentation, min_presentation


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--pd", help="PD code, e.g. 'X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]'")
    src.add_argument("--gauss", help="extended Gauss code, e.g. 'O1+U2+O3+U1+O2+U3+'")
    src.add_argument("--file", help="file holding a PD or Gauss code")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _diagram(args):
    if args.pd is not None:
        return parse_pd(args.pd)
    if args.gauss is not None:
        return parse_gauss(args.gauss)
    with open(args.file) as fh:
        return parse_diagram(fh.read())


def _cuts(args, d) -> CutSet:
    s = CutSet.from_text(args.cuts)
    s.check(d)
    return s


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_parse(args) -> int:
    d = _diagram(args)
    try:
        w = writhe(d)
    except DiagramError:
        w = None
    payload = {
        "crossings": d.crossing_count,
        "components": [[str(p) for p in c] for c in d.components],
        "crossingless_components": d.crossingless_components,
        "writhe": w,
        "gauss": d.to_gauss(),
        "pd": d.to_pd() if d.has_planar_data else None,
    }
    lines = [f"crossings={d.crossing_count} components={d.component_count} writhe={w}"]
    lines += [f"component {i}: {' '.join(c) or '(no crossings)'}" for i, c in enumerate(payload["components"])]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_search(args) -> int:
    d = _diagram(args)
    r = min_presentation(d, n_max=args.n_max)
    witness = r.witness.to_text() if r.witness else None
    payload = {
        "minimal_n": r.minimal_n,
        "witness": witness,
        "candidates_examined": r.candidates_examined,
        "valid_count_at_minimal_n": r.valid_count_at_minimal_n,
    }
    _emit(args, payload, f"minimal_n={r.minimal_n} witness={witness} "
                         f"candidates={r.candidates_examined} valid_at_minimal_n={r.valid_count_at_minimal_n}")
    return 0


def cmd_present(args) -> int:
    d = _diagram(args)
    p = check_presentation(d, _cuts(args, d))
    if not p.valid:
        payload = {"valid": False, "condition": p.condition, "edges": [e + 1 for e in p.edges],
                   "crossing": p.crossing, "message": p.message}
        _emit(args, payload, f"invalid: {p}")
        return 1
    payload = {
        "valid": True,
        "edges": [e.label() for e in p.edges],
        "relations": p.table_lines(),
    }
    lines = ["valid"] + [f"e{e.index + 1} = {e.label()}" for e in p.edges] + p.table_lines()
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_digraph(args) -> int:
    d = _diagram(args)
    p = check_presentation(d, _cuts(args, d))
    if not p.valid:
        print(f"invalid: {p}", file=sys.stderr)
        return 1
    g = build(p)
    dot = to_dot(g)
    cls = classify(g)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dot)
    payload = {
        "arcs": [[u + 1, v + 1] for u, v in g.arcs],
        "class": describe(cls, g.n),
        "connected": cls.connected,
        "is_path": cls.is_path,
        "has_directed_cycle": cls.has_directed_cycle,
        "is_directed_n_cycle": cls.is_directed_n_cycle,
    }
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    elif args.dot:
        print(f"class={payload['class']} wrote {args.dot}")
    else:
        sys.stdout.write(dot)
    return 0


def cmd_jones(args) -> int:
    d = _diagram(args)
    v = jones(d)
    _emit(args, {"jones": str(v), "terms_quarter": {str(k): c for k, c in sorted(v.terms.items())}}, str(v))
    return 0


def cmd_bounds(args) -> int:
    d = _diagram(args)
    b = edge_number_bounds(d)
    payload = {
        "e_lower": b.e_lower, "e_lower_reason": b.e_lower_reason,
        "e_upper": b.e_upper, "e_upper_witness": b.e_upper_witness.to_text(),
        "bridge_upper": b.bridge_upper,
    }
    _emit(args, payload, f"e_lower={b.e_lower} ({b.e_lower_reason}) "
                         f"e_upper={b.e_upper} (e(D), witness {b.e_upper_witness}) "
                         f"bridge_upper={b.bridge_upper}")
    return 0


def cmd_scan(args) -> int:
    d = _diagram(args)
    res = scan_conjecture(d, n_max=args.n_max, limit=args.limit)
    print(json.dumps(res.to_json(), sort_keys=True))
    return 0


def cmd_census(args) -> int:
    records = load_census(args.path)
    if args.action == "run":
        opts = AnalysisOptions(scan_n_max=args.n_max)
        rows = run_census(records, opts, jobs=args.jobs)
        if args.json:
            text = json.dumps([r.to_json() for r in rows], sort_keys=True, indent=1) + "\n"
        else:
            text = rows_to_csv(rows)
    else:
        report = verify_propositions(records, jobs=args.jobs)
        text = json.dumps(report, sort_keys=True, indent=1) + "\n"
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.action == "verify" and not report["passed"]:
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgenum", description="Edge-number bounds for knot and link diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a diagram and show its passages")
    _add_input(p)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("search", help="minimal valid cut set on the diagram")
    _add_input(p)
    p.add_argument("--n-max", type=int, default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("present", help="validate a cut set")
    _add_input(p)
    p.add_argument("--cuts", required=True, help="gap indices, e.g. '1,3,5' or '0,1;0'")
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("digraph", help="over/under digraph of a cut set")
    _add_input(p)
    p.add_argument("--cuts", required=True)
    p.add_argument("--dot", help="write DOT to this path")
    p.set_defaults(func=cmd_digraph)

    for name, func, text in (("jones", cmd_jones, "Jones polynomial"), ("bounds", cmd_bounds, "edge-number bounds")):
        p = sub.add_parser(name, help=text)
        _add_input(p)
        p.set_defaults(func=func)

    p = sub.add_parser("scan", help="scan all presentations for acyclic digraphs")
    _add_input(p)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--limit", type=int, default=None, help="stop after this many presentations")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("census", help="batch analysis of a census file")
    p.add_argument("action", choices=["run", "verify"])
    p.add_argument("path", nargs="?", default=None, help="census JSON (default: $EDGENUM_CENSUS or bundled)")
    p.add_argument("-o", "--output")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DiagramError, CutSetError, CensusError, OSError, json.JSONDecodeError) as exc:
        print(f"edgenum: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
