"""Vertex and edge connectivity with minimum separator / cut witnesses.

Both are computed from unit-capacity max flows. Vertex connectivity uses
vertex splitting and the Esfahanian-Hakimi reduction: with ``v`` of minimum
degree, ``k(G)`` is the least local connectivity over pairs ``(v, t)`` with
``t`` not adjacent to ``v`` and over non-adjacent pairs inside ``N(v)``.
Edge connectivity runs ``n - 1`` flows from vertex 0.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Union

from .graph import Graph, components, is_complete, min_degree
from .report import TheoremReport


@dataclass(frozen=True)
class ConnectivityWitness:
    """``separator`` is a vertex set or a set of edges ``(u, v)``, ``u < v``."""

    value: int
    separator: frozenset[Union[int, tuple[int, int]]]
    components: tuple[tuple[int, ...], ...]


class _UnitFlow:
    """Augmenting-path max flow on a small directed network of unit arcs."""

    def __init__(self, size: int):
        self.cap: list[dict[int, int]] = [dict() for _ in range(size)]

    def add_arc(self, u: int, v: int, c: int = 1) -> None:
        self.cap[u][v] = self.cap[u].get(v, 0) + c
        self.cap[v].setdefault(u, 0)

    def max_flow(self, s: int, t: int, limit: int) -> int:
        """Augment until no path exists or ``limit`` units are pushed."""
        flow = 0
        while flow < limit:
            prev = {s: s}
            queue = deque([s])
            while queue and t not in prev:
                u = queue.popleft()
                for w, c in self.cap[u].items():
                    if c > 0 and w not in prev:
                        prev[w] = u
                        queue.append(w)
            if t not in prev:
                break
            w = t
            while w != s:
                u = prev[w]
                self.cap[u][w] -= 1
                self.cap[w][u] += 1
                w = u
            flow += 1
        return flow

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w, c in self.cap[u].items():
                if c > 0 and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen


def local_vertex_connectivity(g: Graph, s: int, t: int, limit: int | None = None):
    """Internally disjoint s-t paths for non-adjacent ``s``, ``t`` and a minimum separator.

    Vertex ``v`` becomes arc ``v_in -> v_out`` (ids ``2v``, ``2v+1``).
    """
    if g.has_edge(s, t) or s == t:
        raise ValueError("local vertex connectivity needs distinct non-adjacent vertices")
    net = _UnitFlow(2 * g.n)
    big = g.n
    for v in g.vertices():
        net.add_arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        net.add_arc(2 * u + 1, 2 * v, big)
        net.add_arc(2 * v + 1, 2 * u, big)
    value = net.max_flow(2 * s + 1, 2 * t, g.n if limit is None else limit)
    side = net.reachable(2 * s + 1)
    sep = frozenset(v for v in g.vertices() if 2 * v in side and 2 * v + 1 not in side)
    return value, sep


def vertex_connectivity(g: Graph) -> ConnectivityWitness:
    """``k(G)``; ``n - 1`` with an empty separator for complete graphs, 0 if disconnected."""
    parts = components(g)
    if g.n == 0:
        return ConnectivityWitness(0, frozenset(), ())
    if len(parts) > 1:
        return ConnectivityWitness(0, frozenset(), tuple(map(tuple, parts)))
    if is_complete(g):
        return ConnectivityWitness(g.n - 1, frozenset(), (tuple(range(g.n)),))
    v = min(g.vertices(), key=g.degree)
    candidates = [(v, t) for t in g.vertices() if t != v and not g.has_edge(v, t)]
    candidates += [(a, b) for a, b in combinations(g.neighbors(v), 2) if not g.has_edge(a, b)]
    best, best_sep = g.n - 1, None
    for s, t in candidates:
        value, sep = local_vertex_connectivity(g, s, t, limit=best)
        if value < best or best_sep is None:
            best, best_sep = value, sep
    assert best_sep is not None and len(best_sep) == best
    return ConnectivityWitness(best, best_sep, tuple(map(tuple, components(g, best_sep))))


def edge_connectivity(g: Graph) -> ConnectivityWitness:
    """``k'(G)`` with a minimum cut ``E(X, Y)``; 0 for one vertex or a disconnected graph."""
    parts = components(g)
    if g.n <= 1:
        return ConnectivityWitness(0, frozenset(), tuple(map(tuple, parts)))
    if len(parts) > 1:
        return ConnectivityWitness(0, frozenset(), tuple(map(tuple, parts)))
    v = min(g.vertices(), key=g.degree)
    best, best_side = g.degree(v), {v}
    for t in range(1, g.n):
        net = _UnitFlow(g.n)
        for u, w in g.edges():
            net.add_arc(u, w)
            net.add_arc(w, u)
        value = net.max_flow(0, t, best)
        if value < best:
            # flow stopped below its limit, so it is maximum and the residual side is a min cut
            best, best_side = value, net.reachable(0)
    cut = frozenset(
        (min(u, w), max(u, w)) for u in best_side for w in g.neighbors(u) if w not in best_side
    )
    assert len(cut) == best
    other = tuple(u for u in g.vertices() if u not in best_side)
    return ConnectivityWitness(best, cut, (tuple(sorted(best_side)), other))


def whitney_check(g: Graph, name: str = "") -> TheoremReport:
    """``k(G) <= k'(G) <= delta(G)``: ``lhs = delta``, ``rhs = k'``, plus ``k' >= k`` as a condition."""
    k = vertex_connectivity(g).value
    ke = edge_connectivity(g).value
    delta = min_degree(g)
    return TheoremReport(
        "whitney",
        name,
        True,
        Fraction(delta),
        Fraction(ke),
        witnesses={"k": k, "k_edge": ke, "delta": delta},
        conditions={"k <= k_edge": k <= ke},
    )
