import pytest

from polyseq import families
from polyseq.canon import is_isomorphic
from polyseq.errors import ForciblyPolyhedralError, WrongCaseError
from polyseq.graph import degree_sequence, two_switch
from polyseq.planarity import K5, K33, KuratowskiCertificate, branch_set, planar_embedding
from polyseq.connectivity import SeparationCertificate
from polyseq.polyhedrality import verify_certificate
from polyseq.witness import (
    CASE_TAGS,
    NONTRI_GENERIC,
    PYRAMID,
    TRI_BIPYRAMID,
    TRI_GENERIC,
    build_witness,
    nontriangulation_witness,
    pyramid_witness,
    triangulation_witness,
)


def check(g, w):
    assert degree_sequence(w.graph) == degree_sequence(g)
    assert two_switch(g, w.trace.switch) == w.graph
    assert verify_certificate(w.graph, w.certificate)
    assert w.trace.case_tag in CASE_TAGS


def test_prism_gives_k33():
    g = families.prism(3)
    w = build_witness(g)
    check(g, w)
    assert w.trace.case_tag == NONTRI_GENERIC
    assert is_isomorphic(w.graph, families.complete_bipartite(3, 3))
    assert w.certificate.kind == K33


def test_prism_nontriangulation_entry():
    g = families.prism(3)
    w = nontriangulation_witness(g, planar_embedding(g))
    b = w.trace.bindings
    check(g, w)
    assert {b["u1"], b["u2"], b["y"]} in [set(s) for s in w.certificate.branch_vertices]


def test_hexagonal_pyramid():
    g = families.pyramid(6)
    w = build_witness(g)
    check(g, w)
    b = w.trace.bindings
    assert w.trace.case_tag == PYRAMID
    assert w.trace.switch.as_tuple() == (b["u2"], b["u3"], b["u6"], b["u5"])
    assert w.certificate.cut == (b["c"],)


@pytest.mark.parametrize("n", range(6, 11))
def test_pyramid_family(n):
    g = families.pyramid(n)
    w = pyramid_witness(g)
    check(g, w)
    assert isinstance(w.certificate, SeparationCertificate) and w.certificate.cut == (0,)


@pytest.mark.parametrize("n, name", [(3, "tetrahedron"), (4, "square pyramid"), (5, "pentagonal pyramid")])
def test_small_pyramids_forcibly(n, name):
    with pytest.raises(ForciblyPolyhedralError, match=name):
        pyramid_witness(families.pyramid(n))


def test_pyramid_witness_wrong_case():
    with pytest.raises(WrongCaseError):
        pyramid_witness(families.cube())


def test_nontriangulation_rejects_pyramid():
    g = families.pyramid(4)
    with pytest.raises(WrongCaseError):
        nontriangulation_witness(g, planar_embedding(g))


@pytest.mark.parametrize("n", range(5, 10))
def test_bipyramids(n):
    g = families.bipyramid(n)
    w = build_witness(g)
    check(g, w)
    b = w.trace.bindings
    assert w.trace.case_tag == TRI_BIPYRAMID
    assert w.certificate.kind == K5
    assert set(w.certificate.branch_vertices) == {b["u2"], b["u4"], b["u5"], b["u"], b["w"]}
    assert w.trace.switch.as_tuple() == (b["u"], b["u1"], b["w"], b["u3"])


def test_pentagonal_bipyramid_sequence():
    assert degree_sequence(families.bipyramid(5)) == (5, 5, 4, 4, 4, 4, 4)


def test_octahedron_forcibly():
    g = families.octahedron()
    with pytest.raises(ForciblyPolyhedralError, match="octahedron"):
        triangulation_witness(g, planar_embedding(g))
    with pytest.raises(ForciblyPolyhedralError):
        build_witness(g)


def test_icosahedron():
    g = families.icosahedron()
    w = triangulation_witness(g, planar_embedding(g))
    check(g, w)
    assert w.trace.case_tag == TRI_GENERIC
    assert isinstance(w.certificate, KuratowskiCertificate) and w.certificate.kind == K5


@pytest.mark.parametrize("a", range(5))
def test_split_tetrahedra_forcibly(a):
    with pytest.raises(ForciblyPolyhedralError):
        build_witness(families.split_tetrahedron(a))


def test_split_tetrahedra_wrong_case():
    g = families.split_tetrahedron(2)
    with pytest.raises(WrongCaseError):
        triangulation_witness(g, planar_embedding(g))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_prisms_and_cube(n):
    g = families.prism(n)
    check(g, build_witness(g))


def test_trace_json_is_plain():
    w = build_witness(families.prism(3))
    data = w.trace.to_json()
    assert data["case"] == NONTRI_GENERIC
    assert data["switch"] == list(w.trace.switch.as_tuple())
    assert all(isinstance(v, int) for v in data["bindings"].values())
