"""Graph documents and report serialization.

Edge-list text format, one item per line::

    # comment
    n 4            optional vertex count (else 1 + largest index)
    name bowtie    optional graph name
    mark x 0       optional named vertex
    label 3 (1,0)  optional vertex label
    0 1            an edge

A JSON document ``{"n": .., "edges": [[u, v], ..], "labels": [..],
"marked": {..}, "name": ..}`` is accepted as well. Rationals are written as
``{"num": .., "den": ..}`` in JSON and ``num/den`` (``num`` when the
denominator is 1) in CSV and text.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

from .graph import Graph, GraphError, build_graph
from .report import TheoremReport


class InputError(ValueError):
    """Malformed graph input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class GraphDocument:
    n: int
    edges: list[tuple[int, int]]
    labels: Optional[list[str]] = None
    marked: dict[str, int] = field(default_factory=dict)
    name: str = ""

    def to_graph(self) -> Graph:
        return build_graph(self.n, self.edges)

    @classmethod
    def from_graph(cls, g: Graph, name: str = "", marked=None, labels=None) -> "GraphDocument":
        return cls(g.n, list(g.edges()), labels, dict(marked or {}), name)


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"malformed token {token!r}", lineno) from None


def parse_edge_list(text: str) -> GraphDocument:
    n: Optional[int] = None
    edges: list[tuple[int, int]] = []
    lines: list[int] = []
    marked: dict[str, int] = {}
    labels: dict[int, str] = {}
    name = ""
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "n":
            if len(tokens) != 2:
                raise InputError("expected 'n <count>'", lineno)
            n = _int(tokens[1], lineno)
            if n < 0:
                raise InputError("vertex count must be nonnegative", lineno)
        elif head == "name":
            name = line[len("name"):].strip()
        elif head == "mark":
            if len(tokens) != 3:
                raise InputError("expected 'mark <name> <vertex>'", lineno)
            marked[tokens[1]] = _int(tokens[2], lineno)
        elif head == "label":
            if len(tokens) < 3:
                raise InputError("expected 'label <vertex> <text>'", lineno)
            labels[_int(tokens[1], lineno)] = line.split(None, 2)[2]
        else:
            if len(tokens) != 2:
                raise InputError(f"expected 'u v', got {line!r}", lineno)
            u, v = _int(tokens[0], lineno), _int(tokens[1], lineno)
            if u < 0 or v < 0:
                raise InputError("negative vertex index", lineno)
            if u == v:
                raise InputError(f"self-loop at vertex {u}", lineno)
            edges.append((u, v))
            lines.append(lineno)
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    seen: set[tuple[int, int]] = set()
    for (u, v), lineno in zip(edges, lines):
        if u >= n or v >= n:
            raise InputError(f"vertex out of range for n={n}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"duplicate edge {key}", lineno)
        seen.add(key)
    for mname, v in marked.items():
        if not 0 <= v < n:
            raise InputError(f"marked vertex {mname}={v} out of range")
    label_list = None
    if labels:
        if set(labels) != set(range(n)):
            raise InputError("labels must cover every vertex")
        label_list = [labels[v] for v in range(n)]
    return GraphDocument(n, edges, label_list, marked, name)


def parse_json_document(text: str) -> GraphDocument:
    try:
        data = json.loads(text)
        doc = GraphDocument(
            int(data["n"]),
            [(int(u), int(v)) for u, v in data.get("edges", [])],
            data.get("labels"),
            {str(k): int(v) for k, v in (data.get("marked") or {}).items()},
            str(data.get("name") or ""),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed JSON graph document: {exc}") from None
    if doc.labels is not None and len(doc.labels) != doc.n:
        raise InputError("labels length differs from n")
    try:
        doc.to_graph()
    except GraphError as exc:
        raise InputError(str(exc)) from None
    return doc


def parse_document(text: str) -> GraphDocument:
    """Dispatch on content: JSON object or edge list."""
    if text.lstrip().startswith("{"):
        return parse_json_document(text)
    return parse_edge_list(text)


def format_edge_list(doc: GraphDocument) -> str:
    out = []
    if doc.name:
        out.append(f"name {doc.name}")
    out.append(f"n {doc.n}")
    for k in sorted(doc.marked):
        out.append(f"mark {k} {doc.marked[k]}")
    if doc.labels:
        out.extend(f"label {v} {lab}" for v, lab in enumerate(doc.labels))
    out.extend(f"{u} {v}" for u, v in doc.edges)
    return "\n".join(out) + "\n"


def format_json_document(doc: GraphDocument) -> str:
    data: dict[str, Any] = {"n": doc.n, "edges": [list(e) for e in doc.edges]}
    if doc.labels is not None:
        data["labels"] = list(doc.labels)
    if doc.marked:
        data["marked"] = dict(sorted(doc.marked.items()))
    if doc.name:
        data["name"] = doc.name
    return json.dumps(data, sort_keys=True) + "\n"


def format_rational(q: Optional[Fraction]) -> str:
    return "" if q is None else str(Fraction(q))


def rational_json(q: Optional[Fraction]) -> Optional[dict[str, int]]:
    if q is None:
        return None
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def rational_from_json(obj: Optional[dict]) -> Optional[Fraction]:
    return None if obj is None else Fraction(obj["num"], obj["den"])


def to_jsonable(obj: Any) -> Any:
    """Normalize witness payloads: rationals to ``{num, den}``, sets sorted, tuple keys joined."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return obj
    if isinstance(obj, Fraction):
        return rational_json(obj)
    if isinstance(obj, dict):
        return {
            (",".join(map(str, k)) if isinstance(k, tuple) else str(k)): to_jsonable(v)
            for k, v in obj.items()
        }
    if isinstance(obj, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "__dict__"):
        return to_jsonable(vars(obj))
    return str(obj)


def report_record(r: TheoremReport) -> dict[str, Any]:
    return {
        "id": r.id,
        "graph": r.graph,
        "hypotheses_met": r.hypotheses_met,
        "vacuous": r.vacuous,
        "pass": r.passed,
        "relation": r.relation,
        "lhs": rational_json(r.lhs),
        "rhs": rational_json(r.rhs),
        "margin": rational_json(r.margin),
        "conditions": dict(r.conditions),
        "witnesses": to_jsonable(r.witnesses),
        "note": r.note,
    }


def parse_reports(text: str) -> list[TheoremReport]:
    """Inverse of ``emit_report(..., "json")`` (witnesses come back JSON-normalized)."""
    out = []
    for rec in json.loads(text):
        out.append(
            TheoremReport(
                rec["id"],
                rec["graph"],
                rec["hypotheses_met"],
                rational_from_json(rec["lhs"]),
                rational_from_json(rec["rhs"]),
                relation=rec["relation"],
                witnesses=rec["witnesses"],
                conditions=rec["conditions"],
                note=rec["note"],
            )
        )
    return out


def _bool(b: bool) -> str:
    return "true" if b else "false"


CSV_COLUMNS = ["id", "graph", "pass", "vacuous", "lhs", "rhs", "margin"]


def emit_report(reports: Sequence[TheoremReport], format: str = "text") -> str:
    if format == "json":
        return json.dumps([report_record(r) for r in reports], indent=1, sort_keys=True) + "\n"
    if format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in reports:
            w.writerow([
                r.id, r.graph, _bool(r.passed), _bool(r.vacuous),
                format_rational(r.lhs), format_rational(r.rhs), format_rational(r.margin),
            ])
        return buf.getvalue()
    if format == "text":
        rows = [["check", "graph", "status", "lhs", "rel", "rhs", "margin"]]
        for r in reports:
            status = "vacuous" if r.vacuous else ("PASS" if r.passed else "FAIL")
            rows.append([r.id, r.graph, status, format_rational(r.lhs), r.relation,
                         format_rational(r.rhs), format_rational(r.margin)])
        return format_table(rows)
    raise ValueError(f"unknown report format {format!r}")


def format_table(rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(rows[0]))]
    return "".join(
        "  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip() + "\n" for row in rows
    )
