import itertools
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from signed_energy.core import SignedGraph, from_edge_list

settings.register_profile(
    "repo", derandomize=True, max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def signed_graphs(draw, min_n=0, max_n=8, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=len(chosen), max_size=len(chosen)))
    return from_edge_list(n, [(u, v, s) for (u, v), s in zip(chosen, signs)])


def random_signed_graph(rng: random.Random, n: int, p: float = 0.4, connected: bool = False) -> SignedGraph:
    while True:
        edges = [(u, v, rng.choice([1, -1])) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
        g = from_edge_list(n, edges)
        if not connected:
            return g
        from signed_energy.core import is_connected

        if is_connected(g):
            return g


@pytest.fixture
def rng():
    return random.Random(20261016)


def c4_negative():
    return from_edge_list(4, [(0, 1, "+"), (1, 2, "+"), (2, 3, "+"), (3, 0, "-")])
