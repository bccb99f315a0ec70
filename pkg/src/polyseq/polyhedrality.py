"""Polyhedral graphs: planar, 3-connected, at least four vertices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .connectivity import SeparationCertificate, vertex_connectivity_at_least, verify_separation
from .errors import InvalidInputError
from .graph import Graph
from .planarity import (
    KuratowskiCertificate,
    PlanarEmbedding,
    is_planar,
    planarity_check,
    verify_kuratowski,
)


@dataclass(frozen=True)
class TooSmall:
    p: int

    def to_json(self) -> dict:
        return {"kind": "too_small", "p": self.p}


NonPolyhedralCertificate = Union[TooSmall, SeparationCertificate, KuratowskiCertificate]


def is_polyhedral(g: Graph) -> Union[PlanarEmbedding, NonPolyhedralCertificate]:
    """An embedding if ``g`` is a polyhedron, else the cheapest certificate."""
    if g.p < 4:
        return TooSmall(g.p)
    conn = vertex_connectivity_at_least(g, 3)
    if conn is not True:
        return conn
    return planarity_check(g)


def is_polyhedral_graph(g: Graph) -> bool:
    """Boolean form of :func:`is_polyhedral` without certificate extraction."""
    if g.p < 4 or g.m > 3 * g.p - 6 or min(g.degrees()) < 3:
        return False
    return vertex_connectivity_at_least(g, 3) is True and is_planar(g)


def verify_certificate(g: Graph, cert) -> bool:
    if isinstance(cert, TooSmall):
        return cert.p == g.p and g.p < 4
    if isinstance(cert, SeparationCertificate):
        return verify_separation(g, cert)
    if isinstance(cert, KuratowskiCertificate):
        return verify_kuratowski(g, cert)
    return False


def certificate_to_json(cert) -> dict:
    return cert.to_json()


def certificate_from_json(data: dict):
    kind = data.get("kind")
    if kind == "too_small":
        return TooSmall(int(data["p"]))
    if kind == "separation":
        return SeparationCertificate.from_json(data)
    if kind in ("K5", "K33"):
        return KuratowskiCertificate.from_json(data)
    if kind == "embedding":
        return PlanarEmbedding.from_json(data)
    raise InvalidInputError(f"unknown certificate kind {kind!r}")
    raise ValueError(f"unknown certificate kind {kind!r}")
