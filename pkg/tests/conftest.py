import pytest
from hypothesis import strategies as st

from llyconn.families import complete, empty, random_connected, two_kn_join
from llyconn.graph import build_graph

PETERSEN_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
)

CRITERIA: dict[str, bool] = {}


@pytest.fixture
def bowtie():
    return two_kn_join(2, complete(1))


@pytest.fixture
def k3_pair_join():
    return two_kn_join(3, empty(2))


@pytest.fixture
def petersen():
    return build_graph(10, PETERSEN_EDGES)


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    prob = draw(st.sampled_from(["1/4", "2/5", "1/2", "3/4"]))
    return random_connected(n, prob, seed)


@pytest.fixture
def record_criterion():
    def record(label: str, ok: bool) -> None:
        CRITERIA[label] = ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(CRITERIA, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if CRITERIA[label] else 'FAIL'}  criterion {label}")
