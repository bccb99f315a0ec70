"""graph6 encoding for orders 0..62."""

from __future__ import annotations

from .errors import InvalidInputError
from .graph import Graph

HEADER = ">>graph6<<"
MAX_ORDER = 62


def to_graph6(g: Graph) -> str:
    n = g.p
    if n > MAX_ORDER:
        raise InvalidInputError(f"graph6 supports orders up to {MAX_ORDER}, got {n}")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise InvalidInputError("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise InvalidInputError(f"invalid graph6 character in {text!r}")
    n = ord(s[0]) - 63
    if n > MAX_ORDER:
        raise InvalidInputError(f"graph6 orders above {MAX_ORDER} are not supported")
    need = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (need + 5) // 6:
        raise InvalidInputError(
            f"graph6 body has {len(body)} characters, expected {(need + 5) // 6} for order {n}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    if any(bits[need:]):
        raise InvalidInputError("nonzero padding bits in graph6 string")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)
