"""Exact Wasserstein distance under the hop metric.

Measures are plain ``dict[int, Fraction]``. Both measures are scaled by the
least common multiple of their denominators, the resulting integer
transportation problem is solved by successive shortest paths with node
potentials, and the plan is scaled back. A Kantorovich potential is read
from the optimal residual network, so every value comes with a primal plan
and a dual certificate that agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .graph import Graph, GraphError, diameter

Measure = dict[int, Fraction]
Pair = tuple[int, int]


class TransportError(ValueError):
    """Raised for invalid measures, plans or infeasible transport problems."""


@dataclass(frozen=True)
class TransportPlan:
    """Nonnegative mass on vertex pairs; zero entries are not stored."""

    mass: Mapping[Pair, Fraction] = field(default_factory=dict)

    def __getitem__(self, pair: Pair) -> Fraction:
        return self.mass.get(pair, Fraction(0))

    def items(self):
        return self.mass.items()

    def total(self) -> Fraction:
        return sum(self.mass.values(), Fraction(0))

    def source_marginal(self) -> Measure:
        out: Measure = {}
        for (u, _), m in self.mass.items():
            out[u] = out.get(u, Fraction(0)) + m
        return out

    def target_marginal(self) -> Measure:
        out: Measure = {}
        for (_, v), m in self.mass.items():
            out[v] = out.get(v, Fraction(0)) + m
        return out

    def is_simple(self, mu1: Mapping[int, Fraction], mu2: Mapping[int, Fraction]) -> bool:
        """Every diagonal entry equals the pointwise minimum of the marginals."""
        support = set(mu1) | set(mu2)
        return all(
            self[(v, v)] == min(mu1.get(v, 0), mu2.get(v, 0)) for v in support
        )


@dataclass(frozen=True)
class DualCertificate:
    """A 1-Lipschitz potential on all vertices and its dual objective."""

    potential: tuple[Fraction, ...]
    objective: Fraction

    def is_lipschitz(self, g: Graph) -> bool:
        # for the hop metric it suffices to check edges
        f = self.potential
        return all(abs(f[u] - f[v]) <= 1 for u, v in g.edges())

    def evaluate(self, mu1: Mapping[int, Fraction], mu2: Mapping[int, Fraction]) -> Fraction:
        f = self.potential
        return sum((f[v] * m for v, m in mu1.items()), Fraction(0)) - sum(
            (f[v] * m for v, m in mu2.items()), Fraction(0)
        )


@dataclass(frozen=True)
class WassersteinResult:
    value: Fraction
    plan: TransportPlan
    dual: DualCertificate


def _support(mu: Mapping[int, Fraction]) -> list[int]:
    return sorted(v for v, m in mu.items() if m != 0)


def check_measure(g: Graph, mu: Mapping[int, Fraction], total: Optional[Fraction] = Fraction(1)) -> None:
    """Validate vertices and nonnegativity; with ``total`` also the mass sum."""
    for v, m in mu.items():
        g.check_vertex(v)
        if m < 0:
            raise TransportError(f"negative mass {m} at vertex {v}")
    if total is not None and sum(mu.values(), Fraction(0)) != total:
        raise TransportError(f"measure has total mass {sum(mu.values())}, expected {total}")


def vertex_measure(g: Graph, x: int, p) -> Measure:
    """Lazy random-walk measure: ``p`` at ``x``, ``(1-p)/d_x`` on each neighbor."""
    g.check_vertex(x)
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise TransportError(f"idleness p={p} outside [0, 1]")
    mu: Measure = {x: p} if p else {}
    if p == 1:
        return mu
    d = g.degree(x)
    if d == 0:
        raise TransportError(f"vertex {x} is isolated; mu_x^p needs p = 1")
    share = (1 - p) / d
    for v in g.neighbors(x):
        mu[v] = share
    return mu


def plan_cost(g: Graph, plan: TransportPlan | Mapping[Pair, Fraction]) -> Fraction:
    """Exact ``sum d(u,v) * mass`` over the plan's entries."""
    items = plan.items()
    cost = Fraction(0)
    for (u, v), m in items:
        if m == 0:
            continue
        d = g.distance(u, v)
        if d is None:
            raise TransportError(f"plan moves mass {m} between disconnected {u} and {v}")
        cost += d * m
    return cost


def _lcm_scale(*measures: Mapping[int, Fraction]) -> int:
    scale = 1
    for mu in measures:
        for m in mu.values():
            scale = math.lcm(scale, Fraction(m).denominator)
    return scale


def _solve(
    g: Graph,
    supply: Mapping[int, Fraction],
    demand: Mapping[int, Fraction],
    forbidden: frozenset[Pair] = frozenset(),
):
    """Min-cost transport between two measures of equal total mass.

    Returns ``(cost, plan, u_pot, w_pot)`` where ``u_pot``/``w_pot`` are
    integer potentials on source/sink supports with
    ``u_pot[i] - w_pot[j] <= d(i, j)`` on every allowed arc and equality on
    arcs carrying flow.
    """
    src = _support(supply)
    dst = _support(demand)
    scale = _lcm_scale(supply, demand)
    a = [int(supply[i] * scale) for i in src]
    b = [int(demand[j] * scale) for j in dst]
    if sum(a) != sum(b):
        raise TransportError("measures have different total mass")
    ns, nt = len(src), len(dst)
    if ns == 0:
        return Fraction(0), TransportPlan({}), {}, {}

    cost = [[None] * nt for _ in range(ns)]
    for i, u in enumerate(src):
        row = g.distances_from(u)
        for j, v in enumerate(dst):
            if (u, v) not in forbidden:
                cost[i][j] = row[v]

    # node ids: sources 0..ns-1, sinks ns..ns+nt-1, super source S, super sink T
    flow = [[0] * nt for _ in range(ns)]
    left_a = list(a)
    left_b = list(b)
    nn = ns + nt
    pot = [0] * nn
    remaining = sum(a)
    inf = math.inf

    while remaining:
        # Dijkstra from all sources with residual supply, reduced costs on
        # the bipartite residual graph (forward arcs uncapacitated).
        dist = [inf] * nn
        prev = [-1] * nn
        done = [False] * nn
        for i in range(ns):
            if left_a[i]:
                dist[i] = 0
        while True:
            u = -1
            best = inf
            for k in range(nn):
                if not done[k] and dist[k] < best:
                    best = dist[k]
                    u = k
            if u < 0:
                break
            done[u] = True
            if u < ns:
                for j in range(nt):
                    c = cost[u][j]
                    if c is None:
                        continue
                    nd = best + c + pot[u] - pot[ns + j]
                    if nd < dist[ns + j]:
                        dist[ns + j] = nd
                        prev[ns + j] = u
            else:
                j = u - ns
                for i in range(ns):
                    if flow[i][j]:
                        nd = best - cost[i][j] + pot[u] - pot[i]
                        if nd < dist[i]:
                            dist[i] = nd
                            prev[i] = u
        target = -1
        for j in range(nt):
            if left_b[j] and dist[ns + j] < inf and (
                target < 0 or dist[ns + j] < dist[target]
            ):
                target = ns + j
        if target < 0:
            raise TransportError("no feasible transport plan (supports not connected by allowed pairs)")
        cap = dist[target]
        for k in range(nn):
            pot[k] += min(dist[k], cap)
        # bottleneck along the path
        path = []
        k = target
        while prev[k] >= 0:
            path.append((prev[k], k))
            k = prev[k]
        start = k
        push = min(left_a[start], left_b[target - ns])
        for p, q in path:
            if p >= ns:  # reverse arc q <- p means cancelling flow on (q, p)
                push = min(push, flow[q][p - ns])
        for p, q in path:
            if p < ns:
                flow[p][q - ns] += push
            else:
                flow[q][p - ns] -= push
        left_a[start] -= push
        left_b[target - ns] -= push
        remaining -= push

    plan = {}
    total = 0
    for i in range(ns):
        for j in range(nt):
            if flow[i][j]:
                plan[(src[i], dst[j])] = Fraction(flow[i][j], scale)
                total += flow[i][j] * cost[i][j]

    u_pot, w_pot = _residual_potentials(src, dst, cost, flow)
    return Fraction(total, scale), TransportPlan(plan), u_pot, w_pot


def _residual_potentials(src, dst, cost, flow):
    """Bellman-Ford shortest paths on the optimal residual network.

    With ``p`` the distances from a virtual root, ``p[j] <= p[i] + d(i,j)``
    on forward arcs and ``p[i] <= p[j] - d(i,j)`` on arcs carrying flow.
    Setting ``u = -p`` on sources and ``w = -p`` on sinks gives a feasible,
    complementary-slack dual.
    """
    ns, nt = len(src), len(dst)
    arcs = []
    for i in range(ns):
        for j in range(nt):
            c = cost[i][j]
            if c is None:
                continue
            arcs.append((i, ns + j, c))
            if flow[i][j]:
                arcs.append((ns + j, i, -c))
    p = [0] * (ns + nt)
    for _ in range(ns + nt):
        changed = False
        for s, t, c in arcs:
            if p[s] + c < p[t]:
                p[t] = p[s] + c
                changed = True
        if not changed:
            break
    else:
        raise AssertionError("negative cycle in optimal residual network")
    u_pot = {src[i]: -p[i] for i in range(ns)}
    w_pot = {dst[j]: -p[ns + j] for j in range(nt)}
    return u_pot, w_pot


def _component_check(g: Graph, mu1: Mapping[int, Fraction], mu2: Mapping[int, Fraction]) -> None:
    support = _support(mu1) + _support(mu2)
    if not support:
        return
    row = g.distances_from(support[0])
    for v in support:
        if row[v] is None:
            raise TransportError("measure supports lie in different components")


def wasserstein(g: Graph, mu1: Mapping[int, Fraction], mu2: Mapping[int, Fraction]) -> WassersteinResult:
    """Exact ``W(mu1, mu2)`` with an optimal plan and a Kantorovich potential.

    The potential is ``f(v) = min_j (w(j) + d(v, j))`` over the target
    support, which is 1-Lipschitz on ``v``'s component and satisfies
    ``sum f (mu1 - mu2) = W``. Vertices outside that component get 0.
    """
    check_measure(g, mu1)
    check_measure(g, mu2)
    _component_check(g, mu1, mu2)
    value, plan, _, w_pot = _solve(g, mu1, mu2)

    f = [Fraction(0)] * g.n
    if w_pot:
        rows = {j: g.distances_from(j) for j in w_pot}
        for v in g.vertices():
            vals = [w_pot[j] + rows[j][v] for j in w_pot if rows[j][v] is not None]
            if vals:
                f[v] = Fraction(min(vals))
    dual = DualCertificate(tuple(f), Fraction(0))
    dual = DualCertificate(dual.potential, dual.evaluate(mu1, mu2))
    if dual.objective != value:
        raise AssertionError(f"duality gap: primal {value} vs dual {dual.objective}")
    return WassersteinResult(value, plan, dual)


def wasserstein_forced(
    g: Graph,
    mu1: Mapping[int, Fraction],
    mu2: Mapping[int, Fraction],
    forced: Iterable[tuple[Pair, Fraction]],
) -> Fraction:
    """Minimum plan cost with some entries pinned to given masses.

    Pinned mass is deducted from both marginals and charged at its distance;
    the remainder is solved with the pinned pairs excluded, so each pinned
    entry ends up exactly at its prescribed value.
    """
    check_measure(g, mu1)
    check_measure(g, mu2)
    _component_check(g, mu1, mu2)
    r1 = {v: Fraction(m) for v, m in mu1.items()}
    r2 = {v: Fraction(m) for v, m in mu2.items()}
    fixed: dict[Pair, Fraction] = {}
    for (u, v), m in forced:
        g.check_vertex(u)
        g.check_vertex(v)
        m = Fraction(m)
        if (u, v) in fixed:
            raise TransportError(f"pair {(u, v)} forced twice")
        if m < 0:
            raise TransportError(f"forced mass {m} on {(u, v)} is negative")
        fixed[(u, v)] = m
        r1[u] = r1.get(u, Fraction(0)) - m
        r2[v] = r2.get(v, Fraction(0)) - m
    for label, r in (("source", r1), ("target", r2)):
        for v, m in r.items():
            if m < 0:
                raise TransportError(f"forcing exceeds {label} mass at vertex {v}")
    base = plan_cost(g, fixed)
    value, _, _, _ = _solve(g, r1, r2, frozenset(fixed))
    return base + value


def plan_upper_bound(
    g: Graph,
    partial: TransportPlan | Mapping[Pair, Fraction],
    mu1: Mapping[int, Fraction],
    mu2: Mapping[int, Fraction],
) -> Fraction:
    """``2 * (1 - total(partial)) + cost(partial)`` on a graph of diameter at most 2.

    ``partial`` must be dominated by both marginals; whatever it leaves
    unmatched travels at most distance 2.
    """
    diam = diameter(g)
    if diam is None or diam > 2:
        raise GraphError(f"plan_upper_bound needs diameter <= 2, got {diam}")
    check_measure(g, mu1)
    check_measure(g, mu2)
    plan = partial if isinstance(partial, TransportPlan) else TransportPlan(dict(partial))
    for (u, v), m in plan.items():
        if m < 0:
            raise TransportError(f"negative mass {m} on {(u, v)}")
    for v, m in plan.source_marginal().items():
        if m > mu1.get(v, 0):
            raise TransportError(f"row {v} exceeds source mass")
    for v, m in plan.target_marginal().items():
        if m > mu2.get(v, 0):
            raise TransportError(f"column {v} exceeds target mass")
    return 2 * (1 - plan.total()) + plan_cost(g, plan)
