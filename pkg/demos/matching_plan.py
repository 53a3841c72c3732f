"""
A transport plan built from a bipartite matching
================================================

On a diameter-two graph, matching private neighbors of x to private
neighbors of y gives an explicit plan whose cost bounds the Wasserstein
distance from above, hence the curvature from below.
"""

from fractions import Fraction

from llyconn import lly_curvature, matching_transport_bound, vertex_measure, wasserstein
from llyconn.curvature import matching_plan_upper_bound, pi_p_plan
from llyconn.families import random_connected
from llyconn.graph import diameter

seed = 0
while True:
    g = random_connected(9, Fraction(3, 5), seed)
    if diameter(g) == 2:
        break
    seed += 1
print("seed", seed, "edges", g.num_edges)

u, v = next(iter(g.edges()))
cert = matching_transport_bound(g, u, v)
print("oriented edge:", (cert.x, cert.y), "matching:", sorted(cert.matching.edges))
print("certificate:", cert.bound, "<= exact:", lly_curvature(g, u, v).value)

# The plan only fixes part of the mass; the rest is bounded by distance two.
p = Fraction(3, 4)
plan = pi_p_plan(g, cert.x, cert.y, p, cert.matching)
print("partial plan:", dict(plan.items()))
ub = matching_plan_upper_bound(g, cert, p)
w = wasserstein(g, vertex_measure(g, cert.x, p), vertex_measure(g, cert.y, p)).value
print(f"W at p = {p}: {w} <= plan bound {ub}")
