"""Command-line entry point.

Exit codes: 0 when every non-vacuous check passes, 1 when some check
fails, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Optional, Sequence

from . import families
from .connectivity import edge_connectivity, vertex_connectivity
from .curvature import lly_curvature
from .graph import GraphError, min_degree
from .graphio import (
    GraphDocument,
    InputError,
    emit_report,
    format_edge_list,
    format_json_document,
    format_rational,
    format_table,
    parse_document,
    rational_json,
)
from .theorems import CHECKS, run_suite

FAMILY_ARITY = {
    "complete": 1,
    "cycle": 1,
    "path": 1,
    "kn-minus-matching": 2,
    "join2kn": 2,
    "hamming": 2,
    "product": 2,
    "sharp-example": 2,
    "random": 2,
}


def generate(family: str, params: Sequence[str], seed: Optional[int] = None) -> GraphDocument:
    """Build a family member as a document; ``random`` takes ``n`` and a probability."""
    if family not in FAMILY_ARITY:
        raise InputError(f"unknown family {family!r}")
    if len(params) != FAMILY_ARITY[family]:
        raise InputError(f"{family} takes {FAMILY_ARITY[family]} parameter(s)")
    try:
        if family == "random":
            n, prob = int(params[0]), Fraction(params[1])
            s = 0 if seed is None else seed
            return GraphDocument.from_graph(families.random_connected(n, prob, s), f"random({n},{prob},{s})")
        args = [int(a) for a in params]
    except ValueError as exc:
        raise InputError(f"bad parameter: {exc}") from None
    tag = f"{family}({','.join(params)})"
    if family == "complete":
        return GraphDocument.from_graph(families.complete(*args), tag)
    if family == "cycle":
        return GraphDocument.from_graph(families.cycle(*args), tag)
    if family == "path":
        return GraphDocument.from_graph(families.path(*args), tag)
    if family == "kn-minus-matching":
        return GraphDocument.from_graph(families.complete_minus_matching(*args), tag)
    if family == "join2kn":
        n, m = args
        return GraphDocument.from_graph(families.two_kn_join(n, families.empty(m)), tag)
    if family == "hamming":
        p, q = args
        g = families.hamming(p, q)
        labels = ["(" + ",".join(map(str, t)) + ")" for t in families.product_labels(*[q] * p)]
        return GraphDocument.from_graph(g, tag, labels=labels)
    if family == "product":
        a, b = args
        g = families.cartesian_product(families.complete(a), families.complete(b))
        labels = ["(" + ",".join(map(str, t)) + ")" for t in families.product_labels(a, b)]
        return GraphDocument.from_graph(g, tag, labels=labels)
    ex = families.sharp_example(*args)
    return GraphDocument.from_graph(ex.graph, tag, marked={"x": ex.x, "y": ex.y})


def _read_input(path: str) -> GraphDocument:
    if path == "-":
        text = sys.stdin.read()
        stem = "stdin"
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise InputError(str(exc)) from None
        stem = Path(path).stem
    doc = parse_document(text)
    if not doc.name:
        doc.name = stem
    return doc


def _curvature_rows(g, pairs):
    rows = []
    for u, v in pairs:
        rows.append((u, v, g.distance(u, v), lly_curvature(g, u, v).value))
    return rows


def cmd_curvature(args, out) -> int:
    doc = _read_input(args.input)
    g = doc.to_graph()
    if args.pair:
        u, v = args.pair
        g.check_vertex(u)
        g.check_vertex(v)
        pairs = [(u, v)]
    elif args.scale is not None:
        pairs = [(u, v) for u, v in combinations(range(g.n), 2) if g.distance(u, v) == args.scale]
    else:
        pairs = list(g.edges())
    rows = _curvature_rows(g, pairs)
    if args.format == "json":
        data = {"graph": doc.name, "pairs": [
            {"x": u, "y": v, "distance": d, "kappa": rational_json(k)} for u, v, d, k in rows]}
        if args.scale is not None:
            data["scale"] = args.scale
            data["min"] = rational_json(min((r[3] for r in rows), default=None))
        out.write(json.dumps(data, sort_keys=True) + "\n")
    elif args.format == "csv":
        out.write("x,y,distance,kappa\n")
        for u, v, d, k in rows:
            out.write(f"{u},{v},{d},{format_rational(k)}\n")
    else:
        table = [["x", "y", "distance", "kappa"]]
        table += [[str(u), str(v), str(d), format_rational(k)] for u, v, d, k in rows]
        out.write(format_table(table))
        if args.scale is not None:
            best = min((r[3] for r in rows), default=None)
            out.write(f"scale {args.scale} minimum: {format_rational(best) or 'none'}\n")
    return 0


def cmd_connectivity(args, out) -> int:
    doc = _read_input(args.input)
    g = doc.to_graph()
    which = ["vertex", "edge"]
    if args.vertex and not args.edge:
        which = ["vertex"]
    elif args.edge and not args.vertex:
        which = ["edge"]
    result = {}
    if "vertex" in which:
        w = vertex_connectivity(g)
        result["vertex"] = {"value": w.value, "separator": sorted(w.separator),
                            "components": [list(c) for c in w.components]}
    if "edge" in which:
        w = edge_connectivity(g)
        result["edge"] = {"value": w.value, "cut": [list(e) for e in sorted(w.separator)]}
    result["min_degree"] = min_degree(g)
    if args.format == "json":
        out.write(json.dumps(result, sort_keys=True) + "\n")
    else:
        for kind in which:
            r = result[kind]
            wit = r.get("separator", r.get("cut"))
            out.write(f"{kind} connectivity: {r['value']}  witness: {wit}\n")
        out.write(f"min degree: {result['min_degree']}\n")
    return 0


def cmd_generate(args, out) -> int:
    doc = generate(args.family, args.params, args.seed)
    text = format_json_document(doc) if args.format == "json" else format_edge_list(doc)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return 0


def _suite_ids(suite: Sequence[str]) -> list[str]:
    if not suite or list(suite) == ["all"]:
        return list(CHECKS)
    unknown = [s for s in suite if s not in CHECKS]
    if unknown:
        raise InputError(f"unknown check(s): {', '.join(unknown)}; known: all, {', '.join(CHECKS)}")
    return list(suite)


def cmd_verify(args, out) -> int:
    doc = _read_input(args.input)
    g = doc.to_graph()
    reports = run_suite([(doc.name, g, doc.marked)], _suite_ids(args.suite))
    out.write(emit_report(reports, args.format))
    return 0 if all(r.passed for r in reports) else 1


def cmd_report(args, out) -> int:
    doc = _read_input(args.input)
    g = doc.to_graph()
    out.write(f"graph {doc.name}: n={g.n}, m={g.num_edges}, min degree={min_degree(g)}\n\n")
    table = [["x", "y", "distance", "kappa"]]
    table += [[str(u), str(v), str(d), format_rational(k)] for u, v, d, k in _curvature_rows(g, g.edges())]
    out.write(format_table(table) + "\n")
    vw, ew = vertex_connectivity(g), edge_connectivity(g)
    out.write(f"vertex connectivity: {vw.value}  separator: {sorted(vw.separator)}\n")
    out.write(f"edge connectivity: {ew.value}  cut: {sorted(ew.separator)}\n\n")
    reports = run_suite([(doc.name, g, doc.marked)])
    out.write(emit_report(reports, "text"))
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="llyconn", description="Exact Lin-Lu-Yau curvature, connectivity and the inequalities between them.", epilog="exit codes: 0 all checks pass, 1 a check fails, 2 malformed input")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", "-i", default="-", help="graph file (edge list or JSON); '-' for stdin")

    p = sub.add_parser("curvature", help="Lin-Lu-Yau curvature of pairs")
    add_input(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--pair", nargs=2, type=int, metavar=("U", "V"))
    group.add_argument("--all-edges", action="store_true")
    group.add_argument("--scale", type=int, metavar="I")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("connectivity", help="vertex / edge connectivity with witnesses")
    add_input(p)
    p.add_argument("--vertex", action="store_true")
    p.add_argument("--edge", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_connectivity)

    p = sub.add_parser("generate", help="emit a graph family member")
    p.add_argument("family", choices=sorted(FAMILY_ARITY))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=["edges", "json"], default="edges")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run theorem checks")
    add_input(p)
    p.add_argument("--suite", nargs="*", default=["all"])
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="curvature, connectivity and every check")
    add_input(p)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (InputError, GraphError) as exc:
        print(f"llyconn: input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
