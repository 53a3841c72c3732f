"""Brute-force reference computations, independent of the library's algorithms.

Only the graph container (adjacency) is shared with the code under test.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, permutations

INF = math.inf


def floyd_warshall(g):
    n = g.n
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def connected_after_removal(g, removed=(), removed_edges=()):
    gone = set(removed)
    bad = {frozenset(e) for e in removed_edges}
    rest = [v for v in range(g.n) if v not in gone]
    if len(rest) <= 1:
        return True
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in gone and w not in seen and frozenset((u, w)) not in bad:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(rest)


def brute_vertex_connectivity(g):
    if not connected_after_removal(g):
        return 0
    for size in range(g.n - 1):
        for s in combinations(range(g.n), size):
            if not connected_after_removal(g, s):
                return size
    return g.n - 1


def brute_edge_connectivity(g):
    """Smallest edge boundary over all bipartitions (vertex 0 kept on one side)."""
    if g.n <= 1 or not connected_after_removal(g):
        return 0
    edges = list(g.edges())
    best = None
    for mask in range(1 << (g.n - 1)):
        if mask == (1 << (g.n - 1)) - 1:
            continue
        side = {0} | {i + 1 for i in range(g.n - 1) if mask >> i & 1}
        cut = [(u, v) for u, v in edges if (u in side) != (v in side)]
        if best is None or len(cut) < best:
            best = len(cut)
            assert not connected_after_removal(g, removed_edges=cut)
    return best


def lipschitz_functions(g, root=0):
    """All integer f with f(root) = 0 and |f(u) - f(v)| <= 1 on edges (connected g)."""
    order = [root]
    parent = {root: None}
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for w in g.neighbors(u):
            if w not in parent:
                parent[w] = u
                order.append(w)
    assert len(order) == g.n
    f = [0] * g.n

    def rec(k):
        if k == len(order):
            yield tuple(f)
            return
        v = order[k]
        base = f[parent[v]]
        for val in (base - 1, base, base + 1):
            ok = True
            for w in g.neighbors(v):
                if w in assigned and abs(f[w] - val) > 1:
                    ok = False
                    break
            if ok:
                f[v] = val
                assigned.add(v)
                yield from rec(k + 1)
                assigned.discard(v)

    assigned = {root}
    yield from rec(1)


def dual_wasserstein(g, mu1, mu2):
    """max over integer 1-Lipschitz f of sum f (mu1 - mu2); exact by total unimodularity."""
    diff = {}
    for v, m in mu1.items():
        diff[v] = diff.get(v, 0) + Fraction(m)
    for v, m in mu2.items():
        diff[v] = diff.get(v, 0) - Fraction(m)
    scale = 1
    for m in diff.values():
        scale = math.lcm(scale, m.denominator)
    w = [0] * g.n
    for v, m in diff.items():
        w[v] = int(m * scale)
    best = None
    for f in lipschitz_functions(g):
        val = sum(a * b for a, b in zip(f, w))
        if best is None or val > best:
            best = val
    return Fraction(best, scale)


def brute_matching(left, right, pairs):
    """Maximum matching size by exhaustive DP over subsets of used right vertices."""
    left = sorted(set(left))
    ridx = {v: i for i, v in enumerate(sorted(set(right)))}
    nb = {u: [ridx[v] for a, v in pairs if a == u] for u in left}
    memo = {}

    def best(i, used):
        if i == len(left):
            return 0
        key = (i, used)
        if key not in memo:
            val = best(i + 1, used)
            for r in nb[left[i]]:
                if not used >> r & 1:
                    val = max(val, 1 + best(i + 1, used | 1 << r))
            memo[key] = val
        return memo[key]

    return best(0, 0)


def brute_min_cover(left, right, pairs):
    """Minimum vertex cover: choose the left part, the right part is then forced."""
    left = sorted(set(left))
    best = None
    for size in range(len(left) + 1):
        for c in combinations(left, size):
            cs = set(c)
            forced = {v for u, v in pairs if u not in cs}
            total = size + len(forced)
            if best is None or total < best:
                best = total
    return best


def hall_deficiency(left, pairs):
    nb = {u: {v for a, v in pairs if a == u} for u in left}
    best = 0
    for size in range(len(left) + 1):
        for a in combinations(left, size):
            s = set().union(*(nb[u] for u in a)) if a else set()
            best = max(best, len(a) - len(s))
    return best


def permutation_assignment(cost):
    n = len(cost)
    if n == 0:
        return 0
    return min(sum(cost[i][p[i]] for i in range(n)) for p in permutations(range(n)))


def is_matching(edges):
    ends = [v for e in edges for v in e]
    return len(ends) == len(set(ends))
