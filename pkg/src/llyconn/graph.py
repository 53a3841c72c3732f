"""Finite simple undirected graphs on dense integer vertices.

Vertices are ``0..n-1``. A :class:`Graph` is immutable once built; hop
distances are computed lazily with one BFS per source and cached behind a
lock so a graph can be shared between threads.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

#: Distance between vertices in different components.
UNREACHABLE = None


class GraphError(ValueError):
    """Raised for malformed graph input or invalid vertex arguments."""


class Graph:
    """Immutable finite simple graph.

    Use :func:`build_graph` to construct one from an edge list.
    """

    __slots__ = ("n", "adj", "_adjset", "_dist", "_lock")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._adjset = tuple(frozenset(a) for a in self.adj)
        self._dist: dict[int, tuple[Optional[int], ...]] = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge once as ``(u, v)`` with ``u < v``, sorted."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adjset[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjset[u]

    def common_neighbors(self, u: int, v: int) -> frozenset[int]:
        return self._adjset[u] & self._adjset[v]

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")

    def distances_from(self, s: int) -> tuple[Optional[int], ...]:
        """Hop distances from ``s`` to every vertex (``UNREACHABLE`` if none)."""
        row = self._dist.get(s)
        if row is not None:
            return row
        with self._lock:
            row = self._dist.get(s)
            if row is None:
                row = self._bfs(s)
                self._dist[s] = row
        return row

    def _bfs(self, s: int) -> tuple[Optional[int], ...]:
        dist: list[Optional[int]] = [UNREACHABLE] * self.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1  # type: ignore[operator]
            for w in self.adj[u]:
                if dist[w] is None:
                    dist[w] = du
                    queue.append(w)
        return tuple(dist)

    def distance(self, u: int, v: int) -> Optional[int]:
        return self.distances_from(u)[v]


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph on ``n`` vertices.

    Self-loops, duplicate edges (in either orientation) and out-of-range
    endpoints raise :class:`GraphError`; nothing is silently normalized.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = e
        for w in (u, v):
            if not (isinstance(w, int) and 0 <= w < n):
                raise GraphError(f"edge {e!r}: vertex {w!r} out of range for n={n}")
        if u == v:
            raise GraphError(f"edge {e!r}: self-loop")
        if v in adj[u]:
            raise GraphError(f"edge {e!r}: duplicate edge")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def distance(g: Graph, u: int, v: int) -> Optional[int]:
    """Hop distance between ``u`` and ``v``, or ``UNREACHABLE``."""
    g.check_vertex(u)
    g.check_vertex(v)
    return g.distance(u, v)


def diameter(g: Graph) -> Optional[int]:
    """Largest distance, or ``UNREACHABLE`` when ``g`` is disconnected.

    The empty graph and the single vertex have diameter 0.
    """
    best = 0
    for s in g.vertices():
        row = g.distances_from(s)
        if UNREACHABLE in row:
            return UNREACHABLE
        best = max(best, max(row))
    return best


def min_degree(g: Graph) -> int:
    return min((g.degree(v) for v in g.vertices()), default=0)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or UNREACHABLE not in g.distances_from(0)


def components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``g`` minus ``removed``, each sorted, ordered by least vertex."""
    gone = set(removed)
    seen = set(gone)
    parts = []
    for s in g.vertices():
        if s in seen:
            continue
        seen.add(s)
        part = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    part.append(w)
                    stack.append(w)
        parts.append(sorted(part))
    return parts


def is_complete(g: Graph) -> bool:
    return all(g.degree(v) == g.n - 1 for v in g.vertices())


@dataclass(frozen=True)
class EdgeNeighborhoodSplit:
    """Partition of the vertex set around an edge ``xy``.

    ``common`` holds the shared neighbors, ``nx``/``ny`` the private
    neighbors of ``x``/``y`` (excluding the other endpoint), ``outside``
    everything adjacent to neither.
    """

    x: int
    y: int
    common: frozenset[int]
    nx: frozenset[int]
    ny: frozenset[int]
    outside: frozenset[int]


def edge_split(g: Graph, x: int, y: int) -> EdgeNeighborhoodSplit:
    g.check_vertex(x)
    g.check_vertex(y)
    if not g.has_edge(x, y):
        raise GraphError(f"vertices {x} and {y} are not adjacent")
    sx, sy = g.neighbor_set(x), g.neighbor_set(y)
    common = sx & sy
    nx = sx - sy - {y}
    ny = sy - sx - {x}
    outside = frozenset(range(g.n)) - sx - sy
    return EdgeNeighborhoodSplit(x, y, common, nx, ny, outside)


@dataclass(frozen=True)
class MatchingResult:
    """Maximum bipartite matching with a König vertex cover of equal size."""

    edges: frozenset[tuple[int, int]]
    cover: frozenset[int]
    deficiency: int

    @property
    def size(self) -> int:
        return len(self.edges)

    def mate(self) -> dict[int, int]:
        """Left vertex to matched right vertex."""
        return dict(self.edges)


def max_bipartite_matching(
    left: Iterable[int],
    right: Iterable[int],
    pairs: Iterable[tuple[int, int]],
) -> MatchingResult:
    """Hopcroft-Karp matching between ``left`` and ``right``.

    ``pairs`` are allowed ``(left, right)`` pairs. Returned edges are
    oriented ``(left, right)``. The cover is read off the alternating
    reachability from unmatched left vertices: unreached left vertices
    plus reached right vertices.
    """
    left = sorted(set(left))
    right = sorted(set(right))
    right_set = set(right)
    if right_set.intersection(left):
        raise GraphError("bipartition sides overlap")
    left_set = set(left)
    nbrs: dict[int, list[int]] = {u: [] for u in left}
    for u, v in pairs:
        if u in left_set and v in right_set:
            if v not in nbrs[u]:
                nbrs[u].append(v)
        elif v in left_set and u in right_set:
            if u not in nbrs[v]:
                nbrs[v].append(u)
        else:
            raise GraphError(f"pair {(u, v)!r} does not join the two sides")
    for u in left:
        nbrs[u].sort()

    mate_l: dict[int, Optional[int]] = {u: None for u in left}
    mate_r: dict[int, Optional[int]] = {v: None for v in right}
    inf = len(left) + 1

    def bfs() -> bool:
        layer = {}
        queue = deque()
        for u in left:
            if mate_l[u] is None:
                layer[u] = 0
                queue.append(u)
            else:
                layer[u] = inf
        found = False
        while queue:
            u = queue.popleft()
            for v in nbrs[u]:
                w = mate_r[v]
                if w is None:
                    found = True
                elif layer[w] == inf:
                    layer[w] = layer[u] + 1
                    queue.append(w)
        dist.clear()
        dist.update(layer)
        return found

    def dfs(u: int) -> bool:
        for v in nbrs[u]:
            w = mate_r[v]
            if w is None or (dist[w] == dist[u] + 1 and dfs(w)):
                mate_l[u] = v
                mate_r[v] = u
                return True
        dist[u] = inf
        return False

    dist: dict[int, int] = {}
    while bfs():
        for u in left:
            if mate_l[u] is None:
                dfs(u)

    # alternating reachability from free left vertices
    reach_l = {u for u in left if mate_l[u] is None}
    reach_r: set[int] = set()
    stack = list(reach_l)
    while stack:
        u = stack.pop()
        for v in nbrs[u]:
            if v not in reach_r:
                reach_r.add(v)
                w = mate_r[v]
                if w is not None and w not in reach_l:
                    reach_l.add(w)
                    stack.append(w)
    cover = frozenset((left_set - reach_l) | reach_r)
    edges = frozenset((u, v) for u, v in mate_l.items() if v is not None)
    return MatchingResult(edges, cover, len(left) - len(edges))
