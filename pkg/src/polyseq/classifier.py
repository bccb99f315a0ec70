"""Classify a degree sequence as forcibly polyhedral or not.

The positive side is a lookup among the eight known sequences. Every other
graphical sequence gets an explicit non-polyhedral realisation: the
Havel-Hakimi graph itself when it already fails, otherwise a two-switch of
it built by :func:`polyseq.witness.build_witness`.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import eight
from .graph import Graph, degree_sequence
from .graph6 import to_graph6
from .planarity import PlanarEmbedding
from .polyhedrality import is_polyhedral, verify_certificate
from .sequences import DegreeSequence, as_sequence, havel_hakimi_realise, is_graphical
from .witness import WitnessTrace, build_witness

NOT_GRAPHICAL = "NOT_GRAPHICAL"
FORCIBLY_POLYHEDRAL = "FORCIBLY_POLYHEDRAL"
NOT_FORCIBLY = "NOT_FORCIBLY"


@dataclass
class ClassificationResult:
    verdict: str
    sequence: DegreeSequence
    polyhedron: str | None = None
    graph: Graph | None = None
    witness: Graph | None = None
    certificate: object = None
    trace: WitnessTrace | None = None

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "sequence": list(self.sequence)}
        if self.verdict == FORCIBLY_POLYHEDRAL:
            out["polyhedron"] = self.polyhedron
            out["graph6"] = to_graph6(self.graph)
        elif self.verdict == NOT_FORCIBLY:
            out["witness"] = to_graph6(self.witness) if self.witness.p <= 62 else None
            out["certificate"] = self.certificate.to_json()
            out["trace"] = self.trace.to_json() if self.trace else None
        return out

    def to_text(self) -> str:
        seq = self.sequence.to_text() or "(empty)"
        if self.verdict == NOT_GRAPHICAL:
            return f"{seq}: not graphical"
        if self.verdict == FORCIBLY_POLYHEDRAL:
            return f"{seq}: forcibly polyhedral ({self.polyhedron}) {to_graph6(self.graph)}"
        lines = [f"{seq}: not forcibly polyhedral"]
        lines.append(f"  witness: {to_graph6(self.witness)}")
        lines.append(f"  certificate: {self.certificate.to_json()}")
        if self.trace:
            lines.append(f"  case: {self.trace.case_tag} switch {self.trace.switch.as_tuple()}")
        return "\n".join(lines)


def the_eight() -> list[tuple[DegreeSequence, Graph]]:
    return [(seq, eight.build(key)) for key, seq in eight.SEQUENCES.items()]


def classify(s) -> ClassificationResult:
    seq = as_sequence(s)
    if not is_graphical(seq):
        return ClassificationResult(NOT_GRAPHICAL, seq)
    key = eight.lookup(seq)
    if key is not None:
        return ClassificationResult(FORCIBLY_POLYHEDRAL, seq, eight.NAMES[key], eight.build(key))
    g0 = havel_hakimi_realise(seq)
    res = is_polyhedral(g0)
    if not isinstance(res, PlanarEmbedding):
        return ClassificationResult(NOT_FORCIBLY, seq, witness=g0, certificate=res)
    w = build_witness(g0, res)
    return ClassificationResult(NOT_FORCIBLY, seq, witness=w.graph, certificate=w.certificate, trace=w.trace)


def check_result(res: ClassificationResult) -> bool:
    """Independent re-check of a NOT_FORCIBLY result."""
    if res.verdict != NOT_FORCIBLY:
        return True
    return degree_sequence(res.witness) == res.sequence and verify_certificate(res.witness, res.certificate)
