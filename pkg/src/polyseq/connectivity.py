"""Vertex connectivity up to 3 and minimum-length disjoint path systems.

Both rest on the vertex-split network: vertex ``v`` becomes ``2v -> 2v+1``
with unit capacity, and each edge ``uv`` becomes ``2u+1 -> 2v`` and
``2v+1 -> 2u``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import InsufficientConnectivityError, InvalidInputError
from .graph import Graph

_BIG = 1 << 30


@dataclass(frozen=True)
class SeparationCertificate:
    """Removing ``cut`` leaves the two ``side_witnesses`` in different components."""

    cut: tuple[int, ...]
    side_witnesses: tuple[int, int]

    def to_json(self) -> dict:
        return {"kind": "separation", "cut": list(self.cut), "side_witnesses": list(self.side_witnesses)}

    @classmethod
    def from_json(cls, data: dict) -> SeparationCertificate:
        s, t = data["side_witnesses"]
        return cls(tuple(int(x) for x in data["cut"]), (int(s), int(t)))


@dataclass(frozen=True)
class PathSystem:
    source: int
    target: int
    paths: tuple[tuple[int, ...], ...]

    @property
    def total_length(self) -> int:
        return sum(len(p) - 1 for p in self.paths)


def verify_separation(g: Graph, cert: SeparationCertificate) -> bool:
    try:
        cut = set(cert.cut)
        s, t = cert.side_witnesses
        if len(cut) != len(cert.cut) or len(cut) > 2:
            return False
        if any(not 0 <= v < g.p for v in cut | {s, t}):
            return False
        if s == t or s in cut or t in cut:
            return False
    except (TypeError, ValueError):
        return False
    return path_avoiding(g, s, t, cut) is None


def _split_network(g: Graph, s: int, t: int, edge_cap: int):
    cap: dict[int, dict[int, int]] = {x: {} for x in range(2 * g.p)}
    for v in range(g.p):
        cap[2 * v][2 * v + 1] = _BIG if v in (s, t) else 1
        cap[2 * v + 1].setdefault(2 * v, 0)
    for u, v in g.sorted_edges():
        for a, b in ((u, v), (v, u)):
            cap[2 * a + 1][2 * b] = edge_cap
            cap[2 * b].setdefault(2 * a + 1, 0)
    return cap


def _max_flow_cut(g: Graph, s: int, t: int, limit: int):
    """Max flow from s to t (stopping at ``limit``) and, if below, a minimum cut."""
    cap = _split_network(g, s, t, _BIG)
    src, dst = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        prev = {src: None}
        q = deque([src])
        while q and dst not in prev:
            x = q.popleft()
            for y in sorted(cap[x]):
                if cap[x][y] > 0 and y not in prev:
                    prev[y] = x
                    q.append(y)
        if dst not in prev:
            reach = set(prev)
            cut = tuple(v for v in range(g.p) if 2 * v in reach and 2 * v + 1 not in reach)
            return flow, cut
        y = dst
        while prev[y] is not None:
            x = prev[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1
    return flow, None


def vertex_connectivity_at_least(g: Graph, k: int) -> Union[bool, SeparationCertificate]:
    """``True`` if ``g`` is k-connected, else a smallest separation.

    A complete graph on at most ``k`` vertices has no separation at all and
    yields ``False``.
    """
    if k not in (1, 2, 3):
        raise InvalidInputError(f"connectivity level must be 1, 2 or 3, got {k}")
    comps = g.components()
    if len(comps) > 1:
        return SeparationCertificate((), (comps[0][0], comps[1][0]))
    best = None
    for s in range(g.p):
        for t in range(s + 1, g.p):
            if g.has_edge(s, t):
                continue
            flow, cut = _max_flow_cut(g, s, t, k)
            if cut is not None and (best is None or len(cut) < len(best.cut)):
                best = SeparationCertificate(cut, (s, t))
                if len(cut) <= 1:
                    return best
    if best is not None:
        return best
    if g.p <= k:
        return False
    return True


def is_k_connected(g: Graph, k: int) -> bool:
    return vertex_connectivity_at_least(g, k) is True


def internally_disjoint_paths(g: Graph, w: int, u: int, k: int) -> PathSystem:
    """``k`` internally disjoint w-u paths of minimum total length.

    Successive shortest augmenting paths on the split network with unit
    capacities and unit cost per original edge.
    """
    if w == u:
        raise InvalidInputError("source and target must differ")
    cap = _split_network(g, w, u, 1)
    cost: dict[tuple[int, int], int] = {}
    for x, nbrs in cap.items():
        for y in nbrs:
            if x % 2 == 1 and y == x - 1:
                c = 0
            elif x % 2 == 0 and y == x + 1:
                c = 0
            elif x % 2 == 1:
                c = 1
            else:
                c = -1
            cost[(x, y)] = c
    src, dst = 2 * w + 1, 2 * u
    nodes = sorted(cap)
    for _ in range(k):
        dist = {x: _BIG for x in nodes}
        prev: dict[int, int] = {}
        dist[src] = 0
        for _round in range(len(nodes)):
            changed = False
            for x in nodes:
                if dist[x] == _BIG:
                    continue
                for y in sorted(cap[x]):
                    if cap[x][y] > 0 and dist[x] + cost[(x, y)] < dist[y]:
                        dist[y] = dist[x] + cost[(x, y)]
                        prev[y] = x
                        changed = True
            if not changed:
                break
        if dist[dst] == _BIG:
            raise InsufficientConnectivityError(
                f"fewer than {k} internally disjoint paths between {w} and {u}"
            )
        y = dst
        while y != src:
            x = prev[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
    # read paths off saturated edge arcs (residual reverse capacity > 0)
    used = {}
    for x in range(1, 2 * g.p, 2):
        for y in sorted(cap[x]):
            if y != x - 1 and cost[(x, y)] == 1 and cap[y][x] > 0:
                used.setdefault(x // 2, []).append(y // 2)
    paths = []
    for first in sorted(used[w]):
        p = [w, first]
        while p[-1] != u:
            p.append(used[p[-1]][0])
        paths.append(tuple(p))
    return PathSystem(w, u, tuple(paths))


def path_avoiding(g: Graph, x: int, y: int, forbidden: Iterable[int]) -> list[int] | None:
    """Shortest x-y path in ``g`` minus ``forbidden`` (lowest labels on ties)."""
    bad = set(forbidden)
    if x in bad or y in bad:
        raise InvalidInputError("path endpoints may not be forbidden")
    prev = {x: None}
    q = deque([x])
    while q:
        a = q.popleft()
        if a == y:
            out = [a]
            while prev[out[-1]] is not None:
                out.append(prev[out[-1]])
            return out[::-1]
        for b in g.neighbors(a):
            if b not in prev and b not in bad:
                prev[b] = a
                q.append(b)
    return None
