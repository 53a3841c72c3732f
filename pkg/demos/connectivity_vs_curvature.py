"""
Connectivity lower bounds from curvature
========================================

Two small joins where curvature at distance two pins down the vertex
connectivity exactly.
"""

from llyconn import curvature_at_scale, edge_connectivity, min_degree, vertex_connectivity
from llyconn.families import complete, empty, two_kn_join
from llyconn.theorems import check_thm_1_1

# The bowtie is two triangles sharing a vertex; the second graph joins two
# triangles to a pair of independent vertices.
graphs = {"bowtie": two_kn_join(2, complete(1)), "2K3 v 2K1": two_kn_join(3, empty(2))}

for name, g in graphs.items():
    k = vertex_connectivity(g)
    print(name)
    print("  min degree:", min_degree(g))
    print("  k =", k.value, "separator", sorted(k.separator), "components", k.components)
    print("  k' =", edge_connectivity(g).value)
    print("  curvature over distance-2 pairs:", curvature_at_scale(g, 2))

    # min degree times that curvature is a lower bound on k, and here it is attained
    r = check_thm_1_1(g, name)
    print(f"  {r.lhs} >= {r.rhs}: margin {r.margin}")
