"""
Graphs where the curvature bound is attained
============================================

For n - k odd and (n+1)/3 <= k <= n-1 there is a graph on n vertices with
connectivity k and an edge xy of curvature exactly (2k - n + 2)/k.
"""

from fractions import Fraction

from llyconn import lly_curvature, matching_transport_bound, vertex_connectivity
from llyconn.families import sharp_example
from llyconn.theorems import check_thm_1_6

ex = sharp_example(10, 5)
g = ex.graph
print("block sizes:", ex.spec)
print("degrees of x, y:", g.degree(ex.x), g.degree(ex.y))
print("connectivity:", vertex_connectivity(g).value)
print("kappa(x, y):", lly_curvature(g, ex.x, ex.y).value)

# The matching certificate already reaches the exact value: no edge of the
# graph joins the private neighborhoods of x and y.
cert = matching_transport_bound(g, ex.x, ex.y)
print("matching size:", cert.matching.size, "L =", cert.L, "bound:", cert.bound)

for n, k in [(9, 4), (12, 5), (13, 6)]:
    r = check_thm_1_6(n, k)
    print(f"({n},{k}): kappa = {r.lhs}, expected {Fraction(2 * k - n + 2, k)}, pass = {r.passed}")
