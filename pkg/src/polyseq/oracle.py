"""Brute-force ground truth by exhaustive enumeration of realisations.

``enumerate_realisations`` fills the adjacency matrix row by row. Unprocessed
vertices with equal degree and identical adjacency to the processed ones are
interchangeable, so a row only chooses *how many* neighbours to take from
each such class (always the lowest-labelled ones). Residual degrees are
pruned with Erdős–Gallai, and the survivors are deduplicated by canonical
form.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from . import eight
from .canon import canonical_form
from .errors import NotGraphicalError, UnsupportedOrderError
from .graph import Graph
from .polyhedrality import is_polyhedral_graph
from .sequences import DegreeSequence, as_sequence, erdos_gallai_ok, is_graphical

MAX_ENUM_ORDER = 10
MAX_SWEEP_ORDER = 9


def _distributions(sizes: list[int], total: int):
    """All tuples ``c`` with ``0 <= c[i] <= sizes[i]`` summing to ``total``."""
    if not sizes:
        if total == 0:
            yield ()
        return
    rest = sum(sizes[1:])
    for c in range(min(sizes[0], total), max(0, total - rest) - 1, -1):
        for tail in _distributions(sizes[1:], total - c):
            yield (c,) + tail


def _labelled_realisations(ds: list[int]) -> Iterator[list[int]]:
    p = len(ds)
    adj = [0] * p
    residual = list(ds)

    def rec(i: int):
        if i == p:
            yield list(adj)
            return
        need = residual[i]
        cells: dict[tuple[int, int], list[int]] = {}
        for j in range(i + 1, p):
            if residual[j] > 0:
                cells.setdefault((ds[j], adj[j]), []).append(j)
        groups = list(cells.values())
        for counts in _distributions([len(gr) for gr in groups], need):
            chosen = [v for gr, c in zip(groups, counts) for v in gr[:c]]
            for v in chosen:
                adj[i] |= 1 << v
                adj[v] |= 1 << i
                residual[v] -= 1
            residual[i] = 0
            rest = sorted(residual[i + 1 :], reverse=True)
            if erdos_gallai_ok(rest):
                yield from rec(i + 1)
            residual[i] = need
            for v in chosen:
                adj[i] &= ~(1 << v)
                adj[v] &= ~(1 << i)
                residual[v] += 1

    if erdos_gallai_ok(sorted(ds, reverse=True)):
        yield from rec(0)


def _to_graph(adj: list[int]) -> Graph:
    p = len(adj)
    return Graph(p, [(i, j) for i in range(p) for j in range(i + 1, p) if adj[i] >> j & 1])


def enumerate_realisations(s) -> Iterator[Graph]:
    """Each isomorphism class realising ``s`` exactly once."""
    seq = as_sequence(s)
    if seq.p > MAX_ENUM_ORDER:
        raise UnsupportedOrderError(f"enumeration supports p <= {MAX_ENUM_ORDER}, got {seq.p}")
    seen: set[bytes] = set()
    for adj in _labelled_realisations(list(seq)):
        g = _to_graph(adj)
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield g


def count_realisations(s) -> int:
    return sum(1 for _ in enumerate_realisations(s))


def forcibly_polyhedral_bruteforce(s) -> tuple[bool, Graph | None]:
    seq = as_sequence(s)
    if not is_graphical(seq):
        raise NotGraphicalError(f"{seq.to_text()} is not graphical")
    for g in enumerate_realisations(seq):
        if not is_polyhedral_graph(g):
            return False, g
    return True, None


def graphical_sequences(p: int, min_degree: int = 0) -> Iterator[DegreeSequence]:
    """Graphical non-increasing sequences of length ``p``, lexicographic order."""

    def rec(prefix, hi):
        if len(prefix) == p:
            if is_graphical(prefix):
                yield DegreeSequence(prefix)
            return
        for d in range(min_degree, hi + 1):
            yield from rec(prefix + [d], d)

    yield from rec([], max(p - 1, 0))


def polyhedral_graphs(p: int) -> Iterator[Graph]:
    """All polyhedral graphs of order ``p``, grouped by degree sequence."""
    for seq in graphical_sequences(p, min_degree=3):
        if seq.degree_sum > 6 * p - 12:
            continue
        for g in enumerate_realisations(seq):
            if is_polyhedral_graph(g):
                yield g


@dataclass
class SequenceRecord:
    sequence: DegreeSequence
    realisations: int
    polyhedral: int
    forcibly: bool
    first_nonpolyhedral: Graph | None
    classifier_verdict: str | None = None

    @property
    def agrees(self) -> bool:
        return self.classifier_verdict is None or (
            (self.classifier_verdict == "FORCIBLY_POLYHEDRAL") == self.forcibly
        )

    def to_json(self) -> dict:
        from .graph6 import to_graph6

        return {
            "sequence": list(self.sequence),
            "realisations": self.realisations,
            "polyhedral": self.polyhedral,
            "forcibly_polyhedral": self.forcibly,
            "first_nonpolyhedral": to_graph6(self.first_nonpolyhedral) if self.first_nonpolyhedral else None,
            "classifier_verdict": self.classifier_verdict,
            "agrees": self.agrees,
        }


@dataclass
class SweepReport:
    max_order: int
    records: list[SequenceRecord] = field(default_factory=list)
    fast_reject: list[dict] = field(default_factory=list)

    @property
    def summary(self) -> list[DegreeSequence]:
        return [r.sequence for r in self.records if r.forcibly]

    @property
    def disagreements(self) -> list[SequenceRecord]:
        return [r for r in self.records if not r.agrees]

    def to_json(self) -> dict:
        return {
            "max_order": self.max_order,
            "summary": [list(s) for s in self.summary],
            "summary_text": [s.to_text() for s in self.summary],
            "disagreements": len(self.disagreements),
            "records": [r.to_json() for r in self.records],
            "fast_reject": self.fast_reject,
        }

    def to_text(self) -> str:
        lines = [f"{'sequence':<28} {'real':>5} {'poly':>5} forcibly classify"]
        for r in self.records:
            lines.append(
                f"{r.sequence.to_text():<28} {r.realisations:>5} {r.polyhedral:>5} "
                f"{'yes' if r.forcibly else 'no':<8} {r.classifier_verdict or '-'}"
            )
        lines.append(f"fast-rejected sequences: {len(self.fast_reject)}")
        lines.append(f"disagreements: {len(self.disagreements)}")
        lines.append(f"forcibly polyhedral ({len(self.summary)}): " + "; ".join(s.to_text() for s in self.summary))
        return "\n".join(lines)


def _sweep_one(seq: DegreeSequence) -> SequenceRecord:
    from .classifier import classify

    total = poly = 0
    first = None
    for g in enumerate_realisations(seq):
        total += 1
        if is_polyhedral_graph(g):
            poly += 1
        elif first is None:
            first = g
    verdict = classify(seq).verdict
    return SequenceRecord(seq, total, poly, first is None, first, verdict)


def _fast_reject_one(seq: DegreeSequence) -> dict:
    from .classifier import classify
    from .graph6 import to_graph6

    res = classify(seq)
    return {
        "sequence": list(seq),
        "verdict": res.verdict,
        "witness": to_graph6(res.witness) if res.witness is not None else None,
        "certificate": res.certificate.to_json() if res.certificate is not None else None,
    }


def sweep(p_max: int, jobs: int = 1) -> SweepReport:
    """Re-derive the forcibly polyhedral sequences of order at most ``p_max``."""
    if p_max > MAX_SWEEP_ORDER:
        raise UnsupportedOrderError(f"sweep supports p_max <= {MAX_SWEEP_ORDER}, got {p_max}")
    main: list[DegreeSequence] = []
    cheap: list[DegreeSequence] = []
    for p in range(0, p_max + 1):
        for seq in graphical_sequences(p):
            (main if p >= 4 and min(seq) >= 3 else cheap).append(seq)
    main.sort(key=tuple)
    cheap.sort(key=tuple)
    report = SweepReport(p_max)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            report.records = list(ex.map(_sweep_one, main, chunksize=4))
            report.fast_reject = list(ex.map(_fast_reject_one, cheap, chunksize=16))
    else:
        report.records = [_sweep_one(s) for s in main]
        report.fast_reject = [_fast_reject_one(s) for s in cheap]
    return report


def known_sequences(p_max: int) -> list[DegreeSequence]:
    return sorted((s for s in eight.SEQUENCES.values() if s.p <= p_max), key=tuple)
