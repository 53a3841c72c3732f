"""
Running every check over a family of graphs
===========================================

Each check returns a report with exact sides of its inequality, a vacuity
flag when the hypotheses do not apply, and witnesses that let the numbers
be recomputed.
"""

from llyconn import run_suite
from llyconn.families import (
    cartesian_product,
    complete,
    complete_minus_matching,
    cycle,
    hamming,
    random_connected,
    sharp_example,
)
from llyconn.graphio import emit_report

ex = sharp_example(10, 5)
graphs = [
    ("K5", complete(5)),
    ("C6", cycle(6)),
    ("K6-3K2", complete_minus_matching(6, 3)),
    ("H(2,3)", hamming(2, 3)),
    ("K3xK3", cartesian_product(complete(3), complete(3))),
    ("sharp(10,5)", ex.graph, {"x": ex.x, "y": ex.y}),
    ("random", random_connected(9, "1/2", 7)),
]

reports = run_suite(graphs)
print(emit_report([r for r in reports if not r.vacuous], "text"))

failed = [r for r in reports if not r.passed]
print(len(reports), "reports,", sum(r.vacuous for r in reports), "vacuous,", len(failed), "failed")

# The same data as CSV, ready for a spreadsheet.
print(emit_report(reports[:3], "csv"))
