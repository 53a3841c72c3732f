"""Lin-Lu-Yau curvature of vertex pairs, exactly.

``lly_curvature`` evaluates ``kappa_p / (1 - p)`` on a sequence of idleness
values approaching 1 and stops once two consecutive probes agree;
``kappa_p`` is piecewise linear in ``p`` and vanishes at ``p = 1``, so the
ratio is eventually constant. ``lly_equal_degree`` uses the assignment
formula for adjacent vertices of equal degree, and
``matching_transport_bound`` builds the explicit matching-based transport
plan that lower-bounds the curvature on graphs of diameter two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .graph import (
    Graph,
    GraphError,
    MatchingResult,
    diameter,
    edge_split,
    is_connected,
    max_bipartite_matching,
)
from .transport import TransportPlan, plan_upper_bound, vertex_measure, wasserstein

FLOW_LIMIT = "flow-limit"
EQUAL_DEGREE = "equal-degree-assignment"
MATCHING_BOUND = "matching-bound"

MAX_PROBES = 60


@dataclass(frozen=True)
class CurvatureValue:
    pair: tuple[int, int]
    value: Fraction
    method: str


@dataclass(frozen=True)
class AssignmentResult:
    bijection: dict[int, int]
    total_cost: int


@dataclass(frozen=True)
class MatchingBoundCertificate:
    """Lower bound ``(L + 2) / d_x`` with ``L = |M| + |A| - |N_x|``.

    ``x``/``y`` are oriented so that ``d_x >= d_y``.
    """

    x: int
    y: int
    matching: MatchingResult
    common: int
    nx: int
    L: int
    bound: Fraction


def _check_pair(g: Graph, x: int, y: int) -> int:
    g.check_vertex(x)
    g.check_vertex(y)
    if x == y:
        raise GraphError("curvature needs two distinct vertices")
    d = g.distance(x, y)
    if d is None:
        raise GraphError(f"vertices {x} and {y} lie in different components")
    return d


def kappa_p(g: Graph, x: int, y: int, p) -> Fraction:
    """``1 - W(mu_x^p, mu_y^p) / d(x, y)``."""
    d = _check_pair(g, x, y)
    p = Fraction(p)
    w = wasserstein(g, vertex_measure(g, x, p), vertex_measure(g, y, p)).value
    return 1 - w / d


def idleness_probes(g: Graph, x: int, y: int):
    """Probe points ``p_1 = 1/(1 + max(d_x, d_y))``, then ``p_{j+1} = (1 + p_j) / 2``."""
    p = Fraction(1, 1 + max(g.degree(x), g.degree(y)))
    while True:
        yield p
        p = (1 + p) / 2


def lly_curvature(g: Graph, x: int, y: int) -> CurvatureValue:
    _check_pair(g, x, y)
    last = None
    for j, p in enumerate(idleness_probes(g, x, y)):
        h = kappa_p(g, x, y, p) / (1 - p)
        if h == last:
            return CurvatureValue((x, y), h, FLOW_LIMIT)
        if j >= MAX_PROBES:
            raise ArithmeticError(f"curvature of {(x, y)} did not stabilize")
        last = h


def min_cost_assignment(cost: list[list[int]]) -> tuple[list[int], int]:
    """Hungarian method (shortest augmenting path form) on a square matrix.

    Returns ``(col_of_row, total)``.
    """
    n = len(cost)
    if n == 0:
        return [], 0
    INF = float("inf")
    # 1-indexed potentials; column 0 is the virtual start
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    row_of = [0] * (n + 1)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        row_of[0] = i
        j0 = 0
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = row_of[j0]
            delta = INF
            j1 = 0
            for j in range(1, n + 1):
                if not used[j]:
                    cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[row_of[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if row_of[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            row_of[j0] = row_of[j1]
            j0 = j1
    col_of = [0] * n
    for j in range(1, n + 1):
        col_of[row_of[j] - 1] = j - 1
    return col_of, sum(cost[i][col_of[i]] for i in range(n))


def lly_equal_degree(g: Graph, x: int, y: int) -> tuple[CurvatureValue, AssignmentResult]:
    """Curvature of an edge whose endpoints share degree ``d``:
    ``(d + 1 - min_phi sum d(v, phi(v))) / d`` over bijections ``N_x -> N_y``.
    """
    split = edge_split(g, x, y)
    d = g.degree(x)
    if g.degree(y) != d:
        raise GraphError(f"degrees differ: d_{x}={d}, d_{y}={g.degree(y)}")
    nx, ny = sorted(split.nx), sorted(split.ny)
    cost = [[g.distance(a, b) for b in ny] for a in nx]
    col_of, total = min_cost_assignment(cost)
    bij = {a: ny[col_of[i]] for i, a in enumerate(nx)}
    kappa = Fraction(d + 1 - total, d)
    return CurvatureValue((x, y), kappa, EQUAL_DEGREE), AssignmentResult(bij, total)


def curvature_table(g: Graph, max_distance: Optional[int] = None) -> dict[tuple[int, int], Fraction]:
    """``lly_curvature`` for every connected pair ``u < v`` (optionally up to a distance)."""
    out = {}
    for u, v in combinations(range(g.n), 2):
        d = g.distance(u, v)
        if d is None or (max_distance is not None and d > max_distance):
            continue
        out[(u, v)] = lly_curvature(g, u, v).value
    return out


def curvature_at_scale(g: Graph, i: int, table: Optional[dict] = None) -> Optional[Fraction]:
    """Minimum curvature over pairs at distance exactly ``i``; ``None`` if there are none.

    ``table`` may hold precomputed pair curvatures keyed ``(u, v)``, ``u < v``.
    """
    if i < 1:
        raise ValueError(f"scale must be positive, got {i}")
    best = None
    for u, v in combinations(range(g.n), 2):
        if g.distance(u, v) != i:
            continue
        k = table[(u, v)] if table is not None else lly_curvature(g, u, v).value
        if best is None or k < best:
            best = k
    return best


def pi_p_plan(g: Graph, x: int, y: int, p, matching: MatchingResult) -> TransportPlan:
    """The partial plan behind the matching bound (``d_x >= d_y`` assumed).

    Moves ``p - (1-p)/d_y`` from ``x`` to ``y``, keeps ``(1-p)/d_y`` at
    ``x``, keeps ``(1-p)/d_x`` at each common neighbor and at ``y``, and
    sends ``(1-p)/d_x`` along each matching edge ``N_x -> N_y``.
    """
    p = Fraction(p)
    dx, dy = g.degree(x), g.degree(y)
    if p < Fraction(1, 1 + dy) or p > 1:
        raise ValueError(f"p={p} outside [1/(1+d_y), 1]")
    plan = {}
    if p - (1 - p) / dy:
        plan[(x, y)] = p - (1 - p) / dy
    if p < 1:
        plan[(x, x)] = (1 - p) / dy
        for u in sorted(g.common_neighbors(x, y) | {y}):
            plan[(u, u)] = (1 - p) / dx
        for u, v in sorted(matching.edges):
            plan[(u, v)] = (1 - p) / dx
    return TransportPlan(plan)


def pi_p_bound_value(g: Graph, x: int, y: int, p, matching: MatchingResult) -> Fraction:
    """Closed form of ``2(1 - total) + cost`` for :func:`pi_p_plan`."""
    p = Fraction(p)
    dx, dy = g.degree(x), g.degree(y)
    nx = len(edge_split(g, x, y).nx)
    m = matching.size
    return 2 * (nx - m) * (1 - p) / dx + p - (1 - p) / dy + m * (1 - p) / dx


def matching_transport_bound(g: Graph, x: int, y: int) -> MatchingBoundCertificate:
    """Curvature lower bound from a maximum matching between private neighborhoods."""
    if not g.has_edge(x, y):
        raise GraphError(f"vertices {x} and {y} are not adjacent")
    diam = diameter(g)
    if diam is None or diam > 2:
        raise GraphError(f"matching bound needs diameter <= 2, got {diam}")
    if g.degree(x) < g.degree(y):
        x, y = y, x
    split = edge_split(g, x, y)
    pairs = [(u, v) for u in split.nx for v in g.neighbors(u) if v in split.ny]
    m = max_bipartite_matching(split.nx, split.ny, pairs)
    L = m.size + len(split.common) - len(split.nx)
    return MatchingBoundCertificate(
        x, y, m, len(split.common), len(split.nx), L, Fraction(L + 2, g.degree(x))
    )


def matching_plan_upper_bound(g: Graph, cert: MatchingBoundCertificate, p) -> Fraction:
    """Apply the diameter-two plan bound to the certificate's plan at idleness ``p``."""
    x, y = cert.x, cert.y
    plan = pi_p_plan(g, x, y, p, cert.matching)
    return plan_upper_bound(g, plan, vertex_measure(g, x, p), vertex_measure(g, y, p))


def is_positively_curved(g: Graph) -> tuple[bool, Optional[CurvatureValue]]:
    """Whether every edge has positive curvature, with a minimizing edge."""
    if not is_connected(g):
        raise GraphError("graph is disconnected")
    worst = None
    for u, v in g.edges():
        c = lly_curvature(g, u, v)
        if worst is None or c.value < worst.value:
            worst = c
    return (worst is None or worst.value > 0), worst
