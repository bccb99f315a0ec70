"""Degree sequences: parsing, graphicality and Havel-Hakimi realisation."""

from __future__ import annotations

import re
from itertools import groupby
from typing import Iterable

from .errors import NotGraphicalError, ParseError
from .graph import Graph

_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


class DegreeSequence(tuple):
    """Non-increasing tuple of non-negative vertex degrees."""

    def __new__(cls, degrees: Iterable[int] = ()):
        ds = [int(d) for d in degrees]
        if any(d < 0 for d in ds):
            raise ParseError(f"negative degree in {ds}")
        return super().__new__(cls, sorted(ds, reverse=True))

    @property
    def p(self) -> int:
        return len(self)

    @property
    def degree_sum(self) -> int:
        return sum(self)

    def to_text(self) -> str:
        """Compact exponent notation, e.g. ``4^3,3^2``."""
        parts = []
        for d, run in groupby(self):
            k = len(list(run))
            parts.append(str(d) if k == 1 else f"{d}^{k}")
        return ",".join(parts)

    def __repr__(self) -> str:
        return f"DegreeSequence({self.to_text() or 'empty'})"


def parse_sequence(text: str) -> DegreeSequence:
    """Parse ``"4^3,3^2"`` or ``"4,4,4,3,3"``; exponents mean repetition."""
    s = text.strip()
    if not s:
        return DegreeSequence()
    out: list[int] = []
    for tok in s.split(","):
        if tok.strip().startswith("-"):
            raise ParseError(f"negative entry {tok.strip()!r}")
        m = _TOKEN.match(tok)
        if m is None:
            raise ParseError(f"malformed token {tok.strip()!r} in {text!r}")
        d = int(m.group(1))
        k = int(m.group(2)) if m.group(2) is not None else 1
        out.extend([d] * k)
    return DegreeSequence(out)


def as_sequence(s) -> DegreeSequence:
    if isinstance(s, DegreeSequence):
        return s
    if isinstance(s, str):
        return parse_sequence(s)
    return DegreeSequence(s)


def is_graphical(s) -> bool:
    """Decide graphicality by repeated Havel-Hakimi reduction."""
    ds = sorted(as_sequence(s), reverse=True)
    if sum(ds) % 2:
        return False
    while ds and ds[0] > 0:
        d = ds.pop(0)
        if d > len(ds):
            return False
        for i in range(d):
            ds[i] -= 1
            if ds[i] < 0:
                return False
        ds.sort(reverse=True)
    return True


def havel_hakimi_realise(s) -> Graph:
    """Greedy realisation on vertices labelled by position in ``s``.

    The vertex with the largest residual degree (lowest index on ties) is
    joined to the next largest residual degrees (lowest index on ties).
    """
    seq = as_sequence(s)
    if not is_graphical(seq):
        raise NotGraphicalError(f"{seq.to_text()} is not graphical")
    p = len(seq)
    residual = list(seq)
    edges = []
    alive = set(range(p))
    while alive:
        v = min(alive, key=lambda x: (-residual[x], x))
        alive.discard(v)
        d = residual[v]
        if d == 0:
            continue
        targets = sorted(alive, key=lambda x: (-residual[x], x))[:d]
        for t in targets:
            residual[t] -= 1
            edges.append((v, t))
        residual[v] = 0
    return Graph(p, edges)


def erdos_gallai_ok(ds: list[int]) -> bool:
    """Erdős–Gallai test on a non-increasing list (used for search pruning)."""
    n = len(ds)
    total = sum(ds)
    if total % 2:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += ds[k - 1]
        tail = sum(min(d, k) for d in ds[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True
