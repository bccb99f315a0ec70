import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from polyseq import families
from polyseq.connectivity import SeparationCertificate
from polyseq.errors import InvalidInputError
from polyseq.graph import Graph
from polyseq.planarity import K33, KuratowskiCertificate, PlanarEmbedding, euler_holds
from polyseq.polyhedrality import (
    TooSmall,
    certificate_from_json,
    is_polyhedral,
    is_polyhedral_graph,
    verify_certificate,
)
from polyseq.witness import pyramid_witness

import networkx as nx


def test_k4_is_polyhedral():
    assert isinstance(is_polyhedral(families.complete(4)), PlanarEmbedding)


def test_k33_gets_kuratowski():
    g = families.complete_bipartite(3, 3)
    cert = is_polyhedral(g)
    assert isinstance(cert, KuratowskiCertificate) and cert.kind == K33
    assert verify_certificate(g, cert)


def test_pyramid_witness_gets_separation():
    w = pyramid_witness(families.pyramid(6))
    cert = is_polyhedral(w.graph)
    assert isinstance(cert, SeparationCertificate) and cert.cut == (0,)


def test_verify_examples():
    assert not verify_certificate(families.complete(4), TooSmall(4))
    assert verify_certificate(families.cycle(3), TooSmall(3))
    assert verify_certificate(families.cycle(4), SeparationCertificate((0, 2), (1, 3)))


@pytest.mark.parametrize(
    "g", [families.tetrahedron(), families.cube(), families.octahedron(), families.icosahedron(), families.prism(5)]
)
def test_platonic_and_prisms(g):
    assert is_polyhedral_graph(g)
    assert isinstance(is_polyhedral(g), PlanarEmbedding)


@settings(max_examples=300, deadline=None)
@given(graphs(max_p=9))
def test_certificate_always_verifies(g):
    res = is_polyhedral(g)
    truth = g.p >= 4 and nx.check_planarity(to_nx(g))[0] and nx.node_connectivity(to_nx(g)) >= 3
    assert is_polyhedral_graph(g) == truth
    if isinstance(res, PlanarEmbedding):
        assert truth and euler_holds(g, res)
    else:
        assert not truth and verify_certificate(g, res)


def test_json_dispatch():
    for cert in (TooSmall(2), SeparationCertificate((1,), (0, 2)), is_polyhedral(families.complete(5))):
        assert certificate_from_json(cert.to_json()) == cert
    with pytest.raises(InvalidInputError):
        certificate_from_json({"kind": "nonsense"})
