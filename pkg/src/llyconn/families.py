"""Generators for the graph families used as examples and extremal cases."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional

from .graph import Graph, GraphError, build_graph, is_connected

MAX_RESAMPLES = 10_000


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    """``n`` isolated vertices (``nK_1``)."""
    return build_graph(n, [])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs at least 1 vertex, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_minus_matching(n: int, m: int) -> Graph:
    """``K_n`` without the edges ``{0,1}, {2,3}, ..., {2m-2, 2m-1}``."""
    if n < 3:
        raise GraphError(f"need n >= 3, got {n}")
    if not 1 <= m <= n // 2:
        raise GraphError(f"matching size m={m} outside 1..{n // 2}")
    removed = {(2 * i, 2 * i + 1) for i in range(m)}
    return build_graph(n, [e for e in combinations(range(n), 2) if e not in removed])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    edges = list(g1.edges()) + [(u + off, v + off) for u, v in g2.edges()]
    return build_graph(g1.n + g2.n, edges)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts; ``g1`` comes first."""
    off = g1.n
    edges = list(g1.edges()) + [(u + off, v + off) for u, v in g2.edges()]
    edges += [(u, v + off) for u in range(g1.n) for v in range(g2.n)]
    return build_graph(g1.n + g2.n, edges)


def two_kn_join(n: int, g: Graph) -> Graph:
    """``2K_n v g``: the two cliques take vertices ``0..2n-1``."""
    return join(disjoint_union(complete(n), complete(n)), g)


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Vertex ``(a, b)`` is flattened to ``a * g2.n + b``."""
    n2 = g2.n
    edges = []
    for a in range(g1.n):
        for u, v in g2.edges():
            edges.append((a * n2 + u, a * n2 + v))
    for u, v in g1.edges():
        for b in range(n2):
            edges.append((u * n2 + b, v * n2 + b))
    return build_graph(g1.n * n2, edges)


def product_labels(*sizes: int) -> list[tuple[int, ...]]:
    """Row-major tuple labels matching repeated :func:`cartesian_product` flattening."""
    return list(product(*(range(s) for s in sizes)))


def hamming(p: int, q: int) -> Graph:
    """``H(p, q)``: the ``p``-fold Cartesian power of ``K_q``."""
    if p < 1 or q < 2:
        raise GraphError(f"hamming needs p >= 1 and q >= 2, got p={p}, q={q}")
    g = complete(q)
    for _ in range(p - 1):
        g = cartesian_product(g, complete(q))
    return g


@dataclass(frozen=True)
class SharpExampleSpec:
    n: int
    k: int
    nx: int
    ny: int
    common: int
    outside: int

    @classmethod
    def from_params(cls, n: int, k: int) -> "SharpExampleSpec":
        if (n - k) % 2 == 0:
            raise GraphError(f"n - k must be odd, got n={n}, k={k}")
        if not (3 * k >= n + 1 and k <= n - 1):
            raise GraphError(f"need (n+1)/3 <= k <= n-1, got n={n}, k={k}")
        side = (n - k - 1) // 2
        return cls(n, k, side, side, (3 * k - n - 1) // 2, side)


@dataclass(frozen=True)
class SharpExample:
    graph: Graph
    x: int
    y: int
    spec: SharpExampleSpec


def sharp_example(n: int, k: int) -> SharpExample:
    """Graph on ``n`` vertices with connectivity ``k`` and an edge ``xy`` of
    curvature ``(2k - n + 2) / k``.

    Blocks are laid out as ``x=0, y=1, N_x, N_y, A, B``. Starting from the
    complete graph, ``x`` loses its edges to ``B`` and ``N_y``, ``y`` loses
    its edges to ``B`` and ``N_x``, and all ``N_x``-``N_y`` edges go.
    """
    spec = SharpExampleSpec.from_params(n, k)
    if k == n - 1:
        return SharpExample(complete(n), 0, 1, spec)
    x, y = 0, 1
    start = 2
    nx = range(start, start + spec.nx)
    ny = range(nx.stop, nx.stop + spec.ny)
    a = range(ny.stop, ny.stop + spec.common)
    b = range(a.stop, a.stop + spec.outside)
    assert b.stop == n
    removed = set()
    removed.update((x, v) for v in (*b, *ny))
    removed.update((y, v) for v in (*b, *nx))
    removed.update((u, v) for u in nx for v in ny)
    edges = [e for e in combinations(range(n), 2) if e not in removed]
    return SharpExample(build_graph(n, edges), x, y, spec)


@dataclass(frozen=True)
class AmplyRegularParams:
    """``beta`` is ``None`` when no pair is at distance 2 (any value is consistent)."""

    d: int
    alpha: int
    beta: Optional[int]

    def matches(self, d: int, alpha: int, beta: int) -> bool:
        return self.d == d and self.alpha == alpha and self.beta in (None, beta)


def common_neighbor_counts(g: Graph) -> tuple[set[int], set[int]]:
    """Common-neighbor counts over adjacent pairs and over distance-2 pairs."""
    adj_counts, far_counts = set(), set()
    for u, v in combinations(range(g.n), 2):
        d = g.distance(u, v)
        if d == 1:
            adj_counts.add(len(g.common_neighbors(u, v)))
        elif d == 2:
            far_counts.add(len(g.common_neighbors(u, v)))
    return adj_counts, far_counts


def amply_regular_params(g: Graph) -> Optional[AmplyRegularParams]:
    if not is_connected(g):
        raise GraphError("amply regular detection needs a connected graph")
    degrees = {g.degree(v) for v in g.vertices()}
    if len(degrees) != 1:
        return None
    adj_counts, far_counts = common_neighbor_counts(g)
    if len(adj_counts) > 1 or len(far_counts) > 1:
        return None
    (d,) = degrees
    alpha = next(iter(adj_counts), 0)
    beta = next(iter(far_counts), None)
    return AmplyRegularParams(d, alpha, beta)


def random_connected(n: int, prob, seed: int) -> Graph:
    """Erdos-Renyi ``G(n, prob)`` resampled until connected; deterministic per seed."""
    if n < 1:
        raise GraphError(f"need n >= 1, got {n}")
    prob = Fraction(prob)
    if not 0 < prob <= 1:
        raise GraphError(f"edge probability {prob} outside (0, 1]")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(MAX_RESAMPLES):
        g = build_graph(n, [e for e in pairs if rng.random() < prob])
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected sample in {MAX_RESAMPLES} attempts (n={n}, p={prob})")
