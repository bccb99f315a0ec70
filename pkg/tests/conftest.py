import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from polyseq.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.p))
    h.add_edges_from(g.edges)
    return h


def random_graph(rng: random.Random, p: int, density: float) -> Graph:
    return Graph(p, [(i, j) for i in range(p) for j in range(i + 1, p) if rng.random() < density])


@st.composite
def graphs(draw, min_p=0, max_p=8):
    p = draw(st.integers(min_p, max_p))
    pairs = [(i, j) for i in range(p) for j in range(i + 1, p)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(p, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def permuted(draw, g: Graph):
    perm = draw(st.permutations(range(g.p)))
    return g.relabel(perm)


@pytest.fixture
def rng():
    return random.Random(20240601)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
