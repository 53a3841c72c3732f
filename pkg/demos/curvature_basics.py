"""
Exact Lin-Lu-Yau curvature on small graphs
==========================================

Curvature of an edge compares the lazy random walks started at its two
ends. Everything here is a ``Fraction``; nothing is rounded.
"""

from fractions import Fraction

from llyconn import kappa_p, lly_curvature, vertex_measure, wasserstein
from llyconn.families import complete, cycle, hamming

# The lazy walk at vertex 0 of a 5-cycle keeps mass p at home and spreads
# the rest evenly over the two neighbors.
c5 = cycle(5)
p = Fraction(1, 3)
mu0 = vertex_measure(c5, 0, p)
mu1 = vertex_measure(c5, 1, p)
print("mu_0 =", mu0)

# The transport distance comes with an optimal plan and a 1-Lipschitz
# potential whose objective equals the cost, so the value certifies itself.
res = wasserstein(c5, mu0, mu1)
print("W =", res.value)
for (src, dst), mass in res.plan.items():
    print(f"  move {mass} from {src} to {dst}")
print("potential:", res.dual.potential, "objective:", res.dual.objective)

# kappa_p is 1 - W/d; the limit curvature divides by 1 - p and lets p go to 1.
print("kappa_p(1/3) =", kappa_p(c5, 0, 1, p))
print("kappa_LLY(C5) =", lly_curvature(c5, 0, 1).value)

# Longer cycles are flat, complete graphs are strongly curved, and Hamming
# graphs sit in between.
for n in (6, 7, 8):
    print(f"C{n}:", lly_curvature(cycle(n), 0, 1).value)
for n in (3, 5, 8):
    print(f"K{n}:", lly_curvature(complete(n), 0, 1).value)
print("H(2,3):", lly_curvature(hamming(2, 3), 0, 1).value)
