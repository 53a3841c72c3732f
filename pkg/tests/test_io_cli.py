import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from llyconn.cli import generate, main
from llyconn.families import complete, cycle
from llyconn.graphio import (
    CSV_COLUMNS,
    GraphDocument,
    InputError,
    emit_report,
    format_edge_list,
    format_json_document,
    format_rational,
    parse_document,
    parse_edge_list,
    parse_json_document,
    parse_reports,
    rational_json,
)
from llyconn.report import TheoremReport
from llyconn.theorems import check_thm_1_1, run_suite


def test_parse_edge_list_examples():
    doc = parse_edge_list("0 1\n1 2")
    assert doc.n == 3 and doc.edges == [(0, 1), (1, 2)]
    doc = parse_edge_list("# comment\nn 4\n0 1")
    assert doc.n == 4 and doc.edges == [(0, 1)]
    assert doc.to_graph().degree(3) == 0


@pytest.mark.parametrize(
    "text, line, what",
    [
        ("0 0", 1, "self-loop"),
        ("0 1\n\n1 0", 3, "duplicate"),
        ("0 x", 1, "malformed"),
        ("n 2\n0 2", 2, "out of range"),
        ("0 1 2", 1, "expected"),
        ("n", 1, "expected"),
    ],
)
def test_parse_errors_carry_line(text, line, what):
    with pytest.raises(InputError, match=what) as exc:
        parse_edge_list(text)
    assert exc.value.line == line and str(exc.value).startswith(f"line {line}:")


def test_directives_round_trip():
    doc = GraphDocument(3, [(0, 1), (1, 2)], ["a", "b", "c d"], {"x": 0, "y": 1}, "demo")
    back = parse_edge_list(format_edge_list(doc))
    assert back == doc
    assert parse_json_document(format_json_document(doc)) == doc
    assert parse_document(format_json_document(doc)) == doc


def test_bad_json_document():
    assert parse_json_document('{"n": 2}').edges == []
    for text in ('{"edges": [[0, 1]]}', '{"n": 2, "edges": [[0, 0]]}', '{"n": 2, "labels": ["a"]}', "{"):
        with pytest.raises(InputError):
            parse_json_document(text)


def test_rationals():
    assert format_rational(F(2, 4)) == "1/2"
    assert format_rational(F(0)) == "0"
    assert format_rational(None) == ""
    assert rational_json(F(-3, 6)) == {"num": -1, "den": 2}


def test_emit_empty_csv():
    assert emit_report([], "csv") == ",".join(CSV_COLUMNS) + "\n"


def test_emit_bowtie_row(bowtie):
    out = emit_report([check_thm_1_1(bowtie, "bowtie")], "csv").splitlines()
    assert out == ["id,graph,pass,vacuous,lhs,rhs,margin", "thm_1_1,bowtie,true,false,1,1,0"]


def test_json_round_trip(bowtie):
    reports = run_suite([("bowtie", bowtie), ("c6", cycle(6))])
    text = emit_report(reports, "json")
    back = parse_reports(text)
    assert emit_report(back, "json") == text
    for a, b in zip(reports, back):
        assert (a.id, a.graph, a.lhs, a.rhs, a.passed, a.vacuous, a.margin) == (
            b.id, b.graph, b.lhs, b.rhs, b.passed, b.vacuous, b.margin)
    rec = json.loads(text)[1]
    assert rec["lhs"] == {"num": 1, "den": 1}


def test_text_table(bowtie):
    out = emit_report(run_suite([("bowtie", bowtie)], ["thm_1_1", "thm_1_5"]), "text")
    lines = out.splitlines()
    assert lines[0].split() == ["check", "graph", "status", "lhs", "rel", "rhs", "margin"]
    assert "PASS" in lines[1] and "vacuous" in lines[2]


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_report([TheoremReport("x", "g", True, F(1), F(0))], "xml")


def test_generate_families():
    assert generate("complete", ["4"]).to_graph().num_edges == 6
    doc = generate("sharp-example", ["10", "5"])
    assert doc.marked == {"x": 0, "y": 1}
    assert generate("hamming", ["2", "3"]).labels[4] == "(1,1)"
    assert generate("join2kn", ["2", "1"]).n == 5
    a = generate("random", ["8", "1/2"], seed=42)
    assert a == generate("random", ["8", "1/2"], seed=42)
    with pytest.raises(InputError):
        generate("petersen", [])
    with pytest.raises(InputError):
        generate("cycle", ["5", "6"])


def run(argv, stdin=""):
    out = io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, out)
    finally:
        sys.stdin = old
    return code, out.getvalue()


def test_cli_generate_verify_pipeline():
    code, text = run(["generate", "sharp-example", "10", "5"])
    assert code == 0
    code, out = run(["verify", "--suite", "thm_1_6"], text)
    assert code == 0 and "PASS" in out


def test_cli_cycle_curvature():
    _, text = run(["generate", "cycle", "6"])
    code, out = run(["curvature", "--all-edges", "--format", "csv"], text)
    rows = out.splitlines()
    assert code == 0 and rows[0] == "x,y,distance,kappa" and len(rows) == 7
    assert {r.split(",")[-1] for r in rows[1:]} == {"0"}


def test_cli_malformed(tmp_path):
    bad = tmp_path / "malformed.txt"
    bad.write_text("0 1\n1 1\n")
    code, _ = run(["verify", "--input", str(bad)])
    assert code == 2
    assert run(["verify", "--input", str(tmp_path / "missing.txt")])[0] == 2


def test_cli_failing_check_exits_one(tmp_path, monkeypatch):
    from llyconn import theorems

    def broken(g, name="", facts=None):
        return TheoremReport("broken", name, True, F(0), F(1))

    monkeypatch.setitem(theorems.CHECKS, "broken", broken)
    f = tmp_path / "k3.txt"
    f.write_text(format_edge_list(GraphDocument.from_graph(complete(3))))
    assert run(["verify", "--input", str(f), "--suite", "broken"])[0] == 1


def test_cli_other_commands(tmp_path):
    f = tmp_path / "bowtie.txt"
    f.write_text("0 1\n0 4\n1 4\n2 3\n2 4\n3 4\n")
    code, out = run(["connectivity", "--input", str(f)])
    assert code == 0 and "1" in out
    code, out = run(["connectivity", "--input", str(f), "--edge", "--vertex"])
    assert code == 0
    code, out = run(["curvature", "--input", str(f), "--pair", "0", "4"])
    assert code == 0 and "1/2" in out
    code, out = run(["curvature", "--input", str(f), "--scale", "2", "--format", "json"])
    assert code == 0 and json.loads(out)
    code, out = run(["report", "--input", str(f)])
    assert code == 0 and "thm_1_1" in out
    assert run(["curvature", "--input", str(f), "--pair", "0", "9"])[0] == 2
    assert run(["verify", "--input", str(f), "--suite", "nope"])[0] == 2


def test_cli_deterministic(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text(run(["generate", "random", "9", "1/2", "--seed", "3"])[1])
    first = run(["report", "--input", str(f)])
    assert first == run(["report", "--input", str(f)])
    assert run(["generate", "random", "9", "1/2", "--seed", "3"]) == run(["generate", "random", "9", "1/2", "--seed", "3"])


def test_console_pipe():
    gen = subprocess.run([sys.executable, "-m", "llyconn.cli", "generate", "sharp-example", "10", "5"],
                         capture_output=True, text=True, check=True)
    ver = subprocess.run([sys.executable, "-m", "llyconn.cli", "verify", "--suite", "thm_1_6"],
                         input=gen.stdout, capture_output=True, text=True)
    assert ver.returncode == 0
