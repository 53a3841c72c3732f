"""Executable curvature/connectivity inequalities.

Each ``check_*`` function evaluates one statement on one graph and returns a
:class:`~llyconn.report.TheoremReport`. Hypotheses that fail make the report
vacuous rather than failing. Quantities shared between checks (pair
curvatures, connectivity witnesses) are cached in :class:`GraphFacts`, so a
suite over one graph computes each curvature once.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .connectivity import ConnectivityWitness, edge_connectivity, vertex_connectivity
from .curvature import (
    lly_curvature,
    matching_plan_upper_bound,
    matching_transport_bound,
    pi_p_bound_value,
)
from .families import AmplyRegularParams, amply_regular_params, sharp_example
from .graph import Graph, diameter, is_complete, is_connected, min_degree
from .report import EQ, TheoremReport
from .transport import vertex_measure, wasserstein, wasserstein_forced


class GraphFacts:
    """Lazily computed, cached invariants of one graph."""

    def __init__(self, g: Graph, name: str = "", marked: Optional[Mapping[str, int]] = None):
        self.g = g
        self.name = name
        self.marked = dict(marked or {})
        self._kappa: dict[tuple[int, int], Fraction] = {}

    def kappa(self, u: int, v: int) -> Fraction:
        key = (min(u, v), max(u, v))
        if key not in self._kappa:
            self._kappa[key] = lly_curvature(self.g, *key).value
        return self._kappa[key]

    def pairs_at(self, i: int) -> list[tuple[int, int]]:
        g = self.g
        return [(u, v) for u, v in combinations(range(g.n), 2) if g.distance(u, v) == i]

    def kappa_at_scale(self, i: int) -> Optional[Fraction]:
        vals = [self.kappa(u, v) for u, v in self.pairs_at(i)]
        return min(vals) if vals else None

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def complete(self) -> bool:
        return is_complete(self.g)

    @cached_property
    def delta(self) -> int:
        return min_degree(self.g)

    @cached_property
    def diameter(self) -> Optional[int]:
        return diameter(self.g)

    @cached_property
    def vertex_conn(self) -> ConnectivityWitness:
        return vertex_connectivity(self.g)

    @cached_property
    def edge_conn(self) -> ConnectivityWitness:
        return edge_connectivity(self.g)

    @cached_property
    def alpha_max(self) -> int:
        g = self.g
        return max((len(g.common_neighbors(u, v)) for u, v in g.edges()), default=0)

    @cached_property
    def beta_max(self) -> Optional[int]:
        g = self.g
        vals = [len(g.common_neighbors(u, v)) for u, v in self.pairs_at(2)]
        return max(vals) if vals else None

    @cached_property
    def amply(self) -> Optional[AmplyRegularParams]:
        return amply_regular_params(self.g) if self.connected else None


def _facts(g: Graph, name: str, facts: Optional[GraphFacts]) -> GraphFacts:
    return facts if facts is not None else GraphFacts(g, name)


def _needs_noncomplete(f: GraphFacts) -> str:
    if not f.connected:
        return "graph is disconnected"
    if f.complete:
        return "graph is complete"
    return ""


def check_thm_1_1(g: Graph, name: str = "", facts: Optional[GraphFacts] = None) -> TheoremReport:
    """``k(G) >= delta(G) * kappa^(2)(G)`` for non-complete connected graphs."""
    f = _facts(g, name, facts)
    why = _needs_noncomplete(f)
    if why:
        return TheoremReport("thm_1_1", f.name, False, None, None, note=why)
    k2 = f.kappa_at_scale(2)
    w = f.vertex_conn
    return TheoremReport(
        "thm_1_1",
        f.name,
        True,
        Fraction(w.value),
        f.delta * k2,
        witnesses={"separator": sorted(w.separator), "delta": f.delta, "kappa2": k2},
    )


def check_thm_1_2(
    g: Graph,
    name: str = "",
    facts: Optional[GraphFacts] = None,
    alpha: Optional[int] = None,
    beta: Optional[int] = None,
) -> TheoremReport:
    """``k(G) >= (2 kappa(G) + 1) delta(G) - 2 alpha - beta - 2``.

    ``alpha``/``beta`` default to the largest common-neighbor counts over
    adjacent and distance-2 pairs. On a complete graph the report is
    vacuous, but the inequality is still evaluated when ``beta`` is given.
    """
    f = _facts(g, name, facts)
    why = _needs_noncomplete(f)
    a = f.alpha_max if alpha is None else alpha
    b = f.beta_max if beta is None else beta
    if not f.connected or b is None or g.n < 2:
        return TheoremReport("thm_1_2", f.name, False, None, None, note=why or "no distance-2 pairs")
    kappa = f.kappa_at_scale(1)
    rhs = (2 * kappa + 1) * f.delta - 2 * a - b - 2
    return TheoremReport(
        "thm_1_2",
        f.name,
        not why,
        Fraction(f.vertex_conn.value),
        rhs,
        witnesses={"kappa": kappa, "delta": f.delta, "alpha": a, "beta": b,
                   "separator": sorted(f.vertex_conn.separator)},
        note=why,
    )


def check_thm_3_2(
    g: Graph, name: str = "", facts: Optional[GraphFacts] = None, beta: Optional[int] = None
) -> TheoremReport:
    """``k(G) >= 2 delta(G) kappa^(2)(G) - beta``."""
    f = _facts(g, name, facts)
    why = _needs_noncomplete(f)
    if why:
        return TheoremReport("thm_3_2", f.name, False, None, None, note=why)
    b = f.beta_max if beta is None else beta
    k2 = f.kappa_at_scale(2)
    return TheoremReport(
        "thm_3_2",
        f.name,
        True,
        Fraction(f.vertex_conn.value),
        2 * f.delta * k2 - b,
        witnesses={"kappa2": k2, "delta": f.delta, "beta": b,
                   "separator": sorted(f.vertex_conn.separator)},
    )


def check_thm_1_4(g: Graph, name: str = "", facts: Optional[GraphFacts] = None) -> TheoremReport:
    """Positive curvature on every edge forces ``k'(G) = delta(G)``.

    When the hypothesis fails but every edge has nonnegative curvature and
    ``k' < delta``, the witness ``nonnegative_gap`` is set: such a finite
    graph would answer the open question about weakening the hypothesis.
    """
    f = _facts(g, name, facts)
    if not f.connected:
        return TheoremReport("thm_1_4", f.name, False, None, None, relation=EQ, note="graph is disconnected")
    worst = None
    for u, v in g.edges():
        k = f.kappa(u, v)
        if worst is None or k < worst[1]:
            worst = ((u, v), k)
    positive = worst is None or worst[1] > 0
    ke = f.edge_conn
    wit = {"worst_edge": worst[0] if worst else None, "min_kappa": worst[1] if worst else None,
           "cut": sorted(ke.separator)}
    if worst is not None and not positive:
        wit["nonnegative_gap"] = worst[1] >= 0 and ke.value < f.delta
    return TheoremReport(
        "thm_1_4",
        f.name,
        positive,
        Fraction(ke.value),
        Fraction(f.delta),
        relation=EQ,
        witnesses=wit,
        note="" if positive else "an edge has non-positive curvature",
    )


def oriented(g: Graph, u: int, v: int) -> tuple[int, int]:
    """Orient an edge so that the first endpoint has the larger degree."""
    return (u, v) if g.degree(u) >= g.degree(v) else (v, u)


def check_thm_1_5(g: Graph, name: str = "", facts: Optional[GraphFacts] = None) -> TheoremReport:
    """If ``k(G) >= (n-1)/2`` then ``kappa(x,y) >= (2k - n + 2)/d_x`` on every edge (``d_x >= d_y``).

    Per-edge values ``(kappa, bound)`` are always evaluated and stored in
    ``witnesses["edges"]``; the report's ``lhs``/``rhs`` are those of the
    edge with the smallest margin.
    """
    f = _facts(g, name, facts)
    n = g.n
    k = f.vertex_conn.value
    met = 2 * k >= n - 1
    per_edge = {}
    tight = None
    for u, v in g.edges():
        x, y = oriented(g, u, v)
        kap = f.kappa(x, y)
        bound = Fraction(2 * k - n + 2, g.degree(x))
        per_edge[(x, y)] = (kap, bound)
        if tight is None or kap - bound < tight[1] - tight[2]:
            tight = ((x, y), kap, bound)
    if tight is None:
        return TheoremReport("thm_1_5", f.name, False, None, None, note="no edges")
    return TheoremReport(
        "thm_1_5",
        f.name,
        met,
        tight[1],
        tight[2],
        witnesses={"k": k, "edge": tight[0], "edges": per_edge},
        note="" if met else "k(G) < (n-1)/2",
    )


def _sharp_report(g: Graph, x: int, y: int, f: GraphFacts) -> TheoremReport:
    n, k = g.n, g.degree(x)
    kap = f.kappa(x, y)
    conn = f.vertex_conn.value
    return TheoremReport(
        "thm_1_6",
        f.name,
        True,
        kap,
        Fraction(2 * k - n + 2, k),
        relation=EQ,
        witnesses={"n": n, "k": k, "x": x, "y": y, "connectivity": conn},
        conditions={
            "connectivity == k": conn == k,
            "d_x == d_y == k": g.degree(y) == k,
            "x ~ y": g.has_edge(x, y),
        },
    )


def check_thm_1_6(n: int, k: int) -> TheoremReport:
    """Build the extremal graph for ``(n, k)`` and confirm its connectivity
    and the exact curvature ``(2k - n + 2)/k`` of the marked edge.

    Raises ``GraphError`` when ``(n, k)`` violates the parity/range constraints.
    """
    ex = sharp_example(n, k)
    f = GraphFacts(ex.graph, f"sharp-example({n},{k})", {"x": ex.x, "y": ex.y})
    return _sharp_report(ex.graph, ex.x, ex.y, f)


def check_sharp_pair(g: Graph, name: str = "", facts: Optional[GraphFacts] = None) -> TheoremReport:
    """Graph form of :func:`check_thm_1_6` using the marked vertices ``x`` and ``y``."""
    f = _facts(g, name, facts)
    x, y = f.marked.get("x"), f.marked.get("y")
    if x is None or y is None:
        return TheoremReport("thm_1_6", f.name, False, None, None, relation=EQ, note="no marked pair x, y")
    n, k = g.n, g.degree(x)
    if (n - k) % 2 == 0 or not (3 * k >= n + 1 and k <= n - 1) or not g.has_edge(x, y):
        return TheoremReport("thm_1_6", f.name, False, None, None, relation=EQ,
                             note="marked pair does not meet the (n, k) constraints")
    return _sharp_report(g, x, y, f)


def chlz_lower_bound(params: AmplyRegularParams) -> Fraction:
    """``(2 + ceil(alpha (beta - alpha) / (beta - 1))) / d`` for ``1 != beta >= alpha``."""
    d, a, b = params.d, params.alpha, params.beta
    if b is None or b == 1 or b < a:
        raise ValueError(f"bound needs 1 != beta >= alpha, got alpha={a}, beta={b}")
    return Fraction(2 + math.ceil(Fraction(a * (b - a), b - 1)), d)


def check_cor_1_3(
    g: Graph,
    name: str = "",
    facts: Optional[GraphFacts] = None,
    params: Optional[AmplyRegularParams] = None,
) -> TheoremReport:
    """Amply regular ``(d, alpha, beta)`` with ``1 != beta >= alpha``:
    ``k(G) >= d - 2 floor((alpha^2 - alpha)/(beta - 1)) - beta + 2`` and ``k'(G) = d``.

    Also records the curvature lower bound it rests on as a side condition.
    """
    f = _facts(g, name, facts)
    pr = params if params is not None else f.amply
    if pr is None or pr.beta is None or pr.beta == 1 or pr.beta < pr.alpha:
        return TheoremReport("cor_1_3", f.name, False, None, None,
                             note=f"parameters {pr} outside 1 != beta >= alpha")
    d, a, b = pr.d, pr.alpha, pr.beta
    rhs = d - 2 * ((a * a - a) // (b - 1)) - b + 2
    kappa = f.kappa_at_scale(1)
    chlz = chlz_lower_bound(pr)
    ke = f.edge_conn.value
    return TheoremReport(
        "cor_1_3",
        f.name,
        True,
        Fraction(f.vertex_conn.value),
        Fraction(rhs),
        witnesses={"params": (d, a, b), "k_edge": ke, "kappa": kappa, "chlz": chlz},
        conditions={"k_edge == d": ke == d, "kappa >= chlz": kappa >= chlz},
    )


def check_lemma_2_4(g: Graph, name: str = "", facts: Optional[GraphFacts] = None) -> TheoremReport:
    """``kappa^(i)(G) >= kappa(G)`` at every realized scale ``i >= 2``."""
    f = _facts(g, name, facts)
    if not f.connected:
        return TheoremReport("lemma_2_4", f.name, False, None, None, note="graph is disconnected")
    base = f.kappa_at_scale(1)
    scales = {i: f.kappa_at_scale(i) for i in range(2, (f.diameter or 0) + 1)}
    if base is None or not scales:
        return TheoremReport("lemma_2_4", f.name, False, None, None, note="no scale beyond 1")
    worst = min(scales.values())
    return TheoremReport("lemma_2_4", f.name, True, worst, base, witnesses={"scales": scales})


def lemma_4_1_samples(dy: int) -> list[Fraction]:
    lo = Fraction(1, 1 + dy)
    return [lo, (1 + lo) / 2, Fraction(dy, 1 + dy)]


def forced_simple_plan(g: Graph, x: int, y: int, p) -> list[tuple[tuple[int, int], Fraction]]:
    """Diagonal minima plus ``pi(x, y) = p - (1-p)/d_y``."""
    p = Fraction(p)
    mu1, mu2 = vertex_measure(g, x, p), vertex_measure(g, y, p)
    forced = [((v, v), min(mu1.get(v, Fraction(0)), mu2.get(v, Fraction(0))))
              for v in sorted(set(mu1) | set(mu2))]
    forced.append(((x, y), p - (1 - p) / g.degree(y)))
    return forced


def check_lemma_4_1(
    g: Graph,
    name: str = "",
    facts: Optional[GraphFacts] = None,
    p_samples: Optional[Callable[[int], Sequence[Fraction]]] = None,
) -> TheoremReport:
    """A simple optimal plan with ``pi(x,y) = p - (1-p)/d_y`` exists for ``d_x >= d_y``.

    Checked as equality between the forced-entry minimum and the
    unconstrained Wasserstein distance; ``lhs`` is the largest gap found.
    """
    f = _facts(g, name, facts)
    if not f.connected or g.num_edges == 0:
        return TheoremReport("lemma_4_1", f.name, False, None, None, relation=EQ, note="no edges or disconnected")
    samples = p_samples or lemma_4_1_samples
    worst = Fraction(0)
    worst_at = None
    count = 0
    for u, v in g.edges():
        orients = [(u, v), (v, u)] if g.degree(u) == g.degree(v) else [oriented(g, u, v)]
        for x, y in orients:
            for p in samples(g.degree(y)):
                p = Fraction(p)
                w = wasserstein(g, vertex_measure(g, x, p), vertex_measure(g, y, p)).value
                forced = wasserstein_forced(
                    g, vertex_measure(g, x, p), vertex_measure(g, y, p), forced_simple_plan(g, x, y, p)
                )
                count += 1
                if worst_at is None or forced - w > worst:
                    worst, worst_at = forced - w, ((x, y), p)
    return TheoremReport("lemma_4_1", f.name, True, worst, Fraction(0), relation=EQ,
                         witnesses={"instances": count, "worst": worst_at})


def check_lemma_3_1(g: Graph, name: str = "", facts: Optional[GraphFacts] = None) -> TheoremReport:
    """Every vertex of a minimum separator has a neighbor in every component it separates."""
    f = _facts(g, name, facts)
    why = _needs_noncomplete(f)
    if why:
        return TheoremReport("lemma_3_1", f.name, False, None, None, note=why)
    w = f.vertex_conn
    least = min(
        len(g.neighbor_set(u).intersection(part)) for u in w.separator for part in w.components
    )
    return TheoremReport("lemma_3_1", f.name, True, Fraction(least), Fraction(1),
                         witnesses={"separator": sorted(w.separator), "components": w.components})


def check_lemma_5_1(g: Graph, name: str = "", facts: Optional[GraphFacts] = None) -> TheoremReport:
    """``delta(G) >= (n-1)/2`` implies diameter at most 2."""
    f = _facts(g, name, facts)
    met = g.n >= 1 and 2 * f.delta >= g.n - 1
    diam = f.diameter
    if not met:
        return TheoremReport("lemma_5_1", f.name, False, None, None, note="delta < (n-1)/2")
    return TheoremReport("lemma_5_1", f.name, True, Fraction(2),
                         Fraction(diam) if diam is not None else Fraction(g.n),
                         witnesses={"diameter": diam, "delta": f.delta})


def check_matching_bound(
    g: Graph, name: str = "", facts: Optional[GraphFacts] = None
) -> TheoremReport:
    """On diameter-two graphs the matching certificate never exceeds the exact curvature.

    Side conditions confirm for each edge that the plan bound evaluated at
    ``p = 1/2 + 1/(2(1+d_y))`` matches its closed form and dominates the
    true Wasserstein distance.
    """
    f = _facts(g, name, facts)
    if not f.connected or f.diameter is None or f.diameter > 2 or g.num_edges == 0:
        return TheoremReport("matching_bound", f.name, False, None, None, note="diameter > 2")
    worst = None
    plan_ok = True
    for u, v in g.edges():
        cert = matching_transport_bound(g, u, v)
        gap = f.kappa(u, v) - cert.bound
        if worst is None or gap < worst[0]:
            worst = (gap, (cert.x, cert.y), cert.bound)
        p = (1 + Fraction(1, 1 + g.degree(cert.y))) / 2
        ub = matching_plan_upper_bound(g, cert, p)
        w = wasserstein(g, vertex_measure(g, cert.x, p), vertex_measure(g, cert.y, p)).value
        plan_ok &= ub == pi_p_bound_value(g, cert.x, cert.y, p, cert.matching) and ub >= w
    return TheoremReport(
        "matching_bound", f.name, True, f.kappa(*worst[1]), worst[2],
        witnesses={"edge": worst[1]},
        conditions={"plan bound admissible": plan_ok},
    )


def check_whitney(g: Graph, name: str = "", facts: Optional[GraphFacts] = None) -> TheoremReport:
    f = _facts(g, name, facts)
    k, ke = f.vertex_conn.value, f.edge_conn.value
    return TheoremReport("whitney", f.name, True, Fraction(f.delta), Fraction(ke),
                         witnesses={"k": k, "k_edge": ke, "delta": f.delta},
                         conditions={"k <= k_edge": k <= ke})


CHECKS: dict[str, Callable[..., TheoremReport]] = {
    "whitney": check_whitney,
    "thm_1_1": check_thm_1_1,
    "thm_1_2": check_thm_1_2,
    "thm_3_2": check_thm_3_2,
    "thm_1_4": check_thm_1_4,
    "thm_1_5": check_thm_1_5,
    "thm_1_6": check_sharp_pair,
    "cor_1_3": check_cor_1_3,
    "lemma_2_4": check_lemma_2_4,
    "lemma_3_1": check_lemma_3_1,
    "lemma_4_1": check_lemma_4_1,
    "lemma_5_1": check_lemma_5_1,
    "matching_bound": check_matching_bound,
}

SuiteItem = Union[tuple[str, Graph], tuple[str, Graph, Mapping[str, int]]]


def run_suite(graphs: Iterable[SuiteItem], checks: Optional[Sequence[str]] = None) -> list[TheoremReport]:
    """Run the selected checks (all by default) on every graph.

    Reports come back graph by graph, checks in the order given.
    """
    ids = list(CHECKS) if checks is None or list(checks) == ["all"] else list(checks)
    unknown = [c for c in ids if c not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    out = []
    for item in graphs:
        name, g = item[0], item[1]
        marked = item[2] if len(item) > 2 else None
        facts = GraphFacts(g, name, marked)
        for cid in ids:
            out.append(CHECKS[cid](g, name, facts))
    return out
