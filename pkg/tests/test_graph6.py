import pytest
from hypothesis import given, settings

from conftest import graphs
from polyseq import families
from polyseq.errors import InvalidInputError
from polyseq.graph import Graph
from polyseq.graph6 import from_graph6, to_graph6

import networkx as nx


@settings(max_examples=300, deadline=None)
@given(graphs(max_p=20))
def test_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


@settings(max_examples=200, deadline=None)
@given(graphs(max_p=12))
def test_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.p))
    h.add_edges_from(g.edges)
    assert to_graph6(g) == nx.to_graph6_bytes(h, header=False).decode().strip()


def test_known_strings():
    assert to_graph6(Graph(0)) == "?"
    assert to_graph6(families.complete(4)) == "C~"
    assert from_graph6(">>graph6<<C~") == families.complete(4)


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C\x7f", "C>"])
def test_malformed(bad):
    with pytest.raises(InvalidInputError):
        from_graph6(bad)
