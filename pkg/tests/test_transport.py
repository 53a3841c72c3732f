from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from llyconn.curvature import matching_transport_bound, pi_p_bound_value, pi_p_plan
from llyconn.families import complete, cycle, random_connected, sharp_example
from llyconn.graph import GraphError, build_graph
from llyconn.transport import (
    TransportError,
    TransportPlan,
    plan_cost,
    plan_upper_bound,
    vertex_measure,
    wasserstein,
    wasserstein_forced,
)
from llyconn.theorems import forced_simple_plan, lemma_4_1_samples, oriented

from .conftest import connected_graphs
from .oracles import dual_wasserstein


def assert_certified(g, mu1, mu2, res):
    plan = res.plan
    assert plan.source_marginal() == {v: m for v, m in mu1.items() if m}
    assert plan.target_marginal() == {v: m for v, m in mu2.items() if m}
    assert all(m > 0 for _, m in plan.items())
    assert plan_cost(g, plan) == res.value
    f = res.dual.potential
    for u in range(g.n):
        row = g.distances_from(u)
        for v in range(g.n):
            if row[v] is not None:
                assert abs(f[u] - f[v]) <= row[v]
    obj = sum(f[v] * m for v, m in mu1.items()) - sum(f[v] * m for v, m in mu2.items())
    assert obj == res.dual.objective == res.value


def test_vertex_measure_examples():
    assert vertex_measure(complete(3), 0, F(1, 3)) == {0: F(1, 3), 1: F(1, 3), 2: F(1, 3)}
    assert vertex_measure(cycle(5), 2, 1) == {2: 1}
    assert vertex_measure(cycle(5), 0, F(1, 3)) == {0: F(1, 3), 1: F(1, 3), 4: F(1, 3)}


def test_vertex_measure_isolated():
    g = build_graph(2, [])
    with pytest.raises(TransportError):
        vertex_measure(g, 0, F(1, 2))
    assert vertex_measure(g, 0, 1) == {0: 1}


def test_wasserstein_identity():
    g = cycle(5)
    mu = vertex_measure(g, 0, F(1, 3))
    res = wasserstein(g, mu, mu)
    assert res.value == 0
    assert res.plan.mass == {(v, v): m for v, m in mu.items()}


def test_wasserstein_single_edge():
    g = complete(2)
    mu1, mu2 = vertex_measure(g, 0, F(3, 4)), vertex_measure(g, 1, F(3, 4))
    res = wasserstein(g, mu1, mu2)
    assert res.value == F(1, 2)
    assert_certified(g, mu1, mu2, res)


def test_wasserstein_c5():
    g = cycle(5)
    mu1, mu2 = vertex_measure(g, 0, F(1, 3)), vertex_measure(g, 1, F(1, 3))
    res = wasserstein(g, mu1, mu2)
    assert res.value == F(2, 3)
    assert res.plan[(4, 2)] == F(1, 3)
    assert_certified(g, mu1, mu2, res)


def test_wasserstein_disconnected():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(TransportError):
        wasserstein(g, {0: F(1)}, {2: F(1)})


def test_rejects_bad_measure():
    g = complete(3)
    with pytest.raises(TransportError):
        wasserstein(g, {0: F(1, 2)}, {1: F(1)})
    with pytest.raises(TransportError):
        wasserstein(g, {0: F(3, 2), 1: F(-1, 2)}, {1: F(1)})


def test_plan_cost_examples():
    g = complete(2)
    assert plan_cost(g, TransportPlan({(0, 0): F(1)})) == 0
    assert plan_cost(g, TransportPlan({(0, 1): F(1, 2), (0, 0): F(1, 2)})) == F(1, 2)
    with pytest.raises(TransportError):
        plan_cost(build_graph(2, []), {(0, 1): F(1)})


def test_plan_cost_pi_p_on_sharp_example():
    ex = sharp_example(10, 5)
    g, x, y = ex.graph, ex.x, ex.y
    p = F(5, 6)
    cert = matching_transport_bound(g, x, y)
    plan = pi_p_plan(g, x, y, p, cert.matching)
    # cost part of the bound: pi(x,y) at distance 1 plus matched mass (none here)
    assert plan_cost(g, plan) == p - (1 - p) / 5 == F(4, 5)
    assert pi_p_bound_value(g, x, y, p, cert.matching) == 2 * 2 * (1 - p) / 5 + p - (1 - p) / 5


def test_forced_examples():
    g = cycle(5)
    mu1, mu2 = vertex_measure(g, 0, F(1, 3)), vertex_measure(g, 1, F(1, 3))
    assert wasserstein_forced(g, mu1, mu2, []) == wasserstein(g, mu1, mu2).value

    k2 = complete(2)
    p = F(3, 4)
    m1, m2 = vertex_measure(k2, 0, p), vertex_measure(k2, 1, p)
    assert wasserstein_forced(k2, m1, m2, [((0, 1), p - (1 - p) / 1)]) == F(1, 2)

    forced = [((0, 1), F(0))] + [((v, v), min(mu1.get(v, 0), mu2.get(v, 0))) for v in range(5)]
    assert wasserstein_forced(g, mu1, mu2, forced) == F(2, 3)


def test_forced_infeasible():
    g = complete(2)
    mu1, mu2 = vertex_measure(g, 0, F(3, 4)), vertex_measure(g, 1, F(3, 4))
    with pytest.raises(TransportError):
        wasserstein_forced(g, mu1, mu2, [((0, 1), F(9, 10))])
    # pinning every usable pair to zero leaves nothing to carry the mass
    with pytest.raises(TransportError):
        wasserstein_forced(g, mu1, mu2, [((0, 1), F(0)), ((0, 0), F(0))])


def test_forced_strictly_larger():
    g = cycle(5)
    mu1, mu2 = vertex_measure(g, 0, F(1, 3)), vertex_measure(g, 1, F(1, 3))
    # forbidding the diagonal at 0 costs extra
    assert wasserstein_forced(g, mu1, mu2, [((0, 0), F(0))]) > F(2, 3)


def test_plan_upper_bound_examples():
    g = complete(4)
    mu1, mu2 = vertex_measure(g, 0, F(1, 2)), vertex_measure(g, 1, F(1, 2))
    res = wasserstein(g, mu1, mu2)
    assert plan_upper_bound(g, res.plan, mu1, mu2) == res.value
    assert plan_upper_bound(g, {}, mu1, mu2) == 2


def test_plan_upper_bound_sharp_example_is_tight():
    ex = sharp_example(10, 5)
    g, x, y = ex.graph, ex.x, ex.y
    p = F(1, 2)
    cert = matching_transport_bound(g, x, y)
    plan = pi_p_plan(g, x, y, p, cert.matching)
    mu1, mu2 = vertex_measure(g, x, p), vertex_measure(g, y, p)
    ub = plan_upper_bound(g, plan, mu1, mu2)
    assert ub == pi_p_bound_value(g, x, y, p, cert.matching) == F(4, 5)
    assert wasserstein(g, mu1, mu2).value == ub


def test_plan_upper_bound_errors():
    g = cycle(6)
    mu = vertex_measure(g, 0, F(1, 2))
    with pytest.raises(GraphError):
        plan_upper_bound(g, {}, mu, mu)
    g = complete(3)
    mu = vertex_measure(g, 0, F(1, 2))
    with pytest.raises(TransportError):
        plan_upper_bound(g, {(0, 0): F(3, 4)}, mu, mu)


def random_measure(draw, n):
    support = draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=n, unique=True))
    weights = draw(st.lists(st.integers(1, 12), min_size=len(support), max_size=len(support)))
    total = sum(weights)
    return {v: F(w, total) for v, w in zip(support, weights)}


@st.composite
def graph_with_measures(draw, k=2, max_n=8):
    g = draw(connected_graphs(min_n=1, max_n=max_n))
    return (g, *[random_measure(draw, g.n) for _ in range(k)])


@settings(max_examples=80, deadline=None)
@given(graph_with_measures(k=2))
def test_flow_matches_dual_oracle(inst):
    g, mu1, mu2 = inst
    res = wasserstein(g, mu1, mu2)
    assert_certified(g, mu1, mu2, res)
    assert res.value == dual_wasserstein(g, mu1, mu2)


@settings(max_examples=60, deadline=None)
@given(graph_with_measures(k=3, max_n=10))
def test_triangle_inequality(inst):
    g, a, b, c = inst
    assert wasserstein(g, a, c).value <= wasserstein(g, a, b).value + wasserstein(g, b, c).value


@settings(max_examples=40, deadline=None)
@given(graph_with_measures(k=2), st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=3))
def test_forced_never_below_unconstrained(inst, pins):
    g, mu1, mu2 = inst
    w = wasserstein(g, mu1, mu2).value
    forced = []
    for u, v in pins:
        u, v = u % g.n, v % g.n
        if (u, v) not in dict(forced):
            forced.append(((u, v), F(0)))
    try:
        assert wasserstein_forced(g, mu1, mu2, forced) >= w
    except TransportError:
        pass


@pytest.mark.parametrize("seed", range(12))
def test_lemma_4_1_on_random_graphs(seed):
    g = random_connected(7 + seed % 4, F(1, 2), seed)
    for u, v in g.edges():
        x, y = oriented(g, u, v)
        for p in lemma_4_1_samples(g.degree(y)):
            mu1, mu2 = vertex_measure(g, x, p), vertex_measure(g, y, p)
            forced = forced_simple_plan(g, x, y, p)
            assert wasserstein_forced(g, mu1, mu2, forced) == wasserstein(g, mu1, mu2).value
