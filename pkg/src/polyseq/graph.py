"""Simple undirected graphs on vertices ``0 .. p-1``.

Graphs are immutable; every transformation returns a new instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidFaceError, InvalidInputError, InvalidSwitchError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple undirected graph with dense integer labels."""

    __slots__ = ("_p", "_edges", "_adj", "_hash")

    def __init__(self, p: int, edges: Iterable[Sequence[int]] = ()):
        if p < 0:
            raise InvalidInputError(f"negative order {p}")
        adj: list[set[int]] = [set() for _ in range(p)]
        norm: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InvalidInputError(f"loop edge ({u}, {v})")
            if not (0 <= u < p and 0 <= v < p):
                raise InvalidInputError(f"edge ({u}, {v}) has an endpoint outside 0..{p - 1}")
            norm.add(_norm(u, v))
            adj[u].add(v)
            adj[v].add(u)
        self._p = p
        self._edges = frozenset(norm)
        self._adj = tuple(frozenset(a) for a in adj)
        self._hash = None

    @property
    def p(self) -> int:
        return self._p

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def adj(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._p and v in self._adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self._p, ((perm[u], perm[v]) for u, v in self._edges))

    def without_vertices(self, removed: Iterable[int]) -> list[set[int]]:
        """Adjacency lists with ``removed`` deleted (labels are kept)."""
        gone = set(removed)
        return [set() if v in gone else set(self._adj[v]) - gone for v in range(self._p)]

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        gone = set(removed)
        seen = set(gone)
        comps = []
        for s in range(self._p):
            if s in seen:
                continue
            seen.add(s)
            comp, stack = [s], [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._p == other._p and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._p, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(p={self._p}, edges={self.sorted_edges()})"


def make_graph(p: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph(p, edges)


def degree_sequence(g: Graph):
    from .sequences import DegreeSequence

    return DegreeSequence(g.degrees())


@dataclass(frozen=True)
class TwoSwitch:
    """Replace edges v1v2, v3v4 by v1v3, v2v4."""

    v1: int
    v2: int
    v3: int
    v4: int

    def __post_init__(self):
        if len({self.v1, self.v2, self.v3, self.v4}) != 4:
            raise InvalidSwitchError(f"switch vertices not pairwise distinct: {self.as_tuple()}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v1, self.v2, self.v3, self.v4)

    def inverse(self) -> TwoSwitch:
        return TwoSwitch(self.v1, self.v3, self.v2, self.v4)


def switch_violation(g: Graph, t: TwoSwitch) -> str | None:
    """Name the first failed precondition of ``t`` on ``g``, or ``None``."""
    v1, v2, v3, v4 = t.as_tuple()
    if any(not 0 <= v < g.p for v in (v1, v2, v3, v4)):
        return "vertex out of range"
    if not g.has_edge(v1, v2):
        return f"v1v2 = {v1}{v2} is not an edge"
    if not g.has_edge(v3, v4):
        return f"v3v4 = {v3}{v4} is not an edge"
    if g.has_edge(v1, v3):
        return f"v1v3 = {v1}{v3} is already an edge"
    if g.has_edge(v2, v4):
        return f"v2v4 = {v2}{v4} is already an edge"
    return None


def two_switch(g: Graph, t: TwoSwitch | Sequence[int]) -> Graph:
    if not isinstance(t, TwoSwitch):
        t = TwoSwitch(*t)
    why = switch_violation(g, t)
    if why is not None:
        raise InvalidSwitchError(why)
    edges = set(g.edges)
    edges.discard(_norm(t.v1, t.v2))
    edges.discard(_norm(t.v3, t.v4))
    edges.add(_norm(t.v1, t.v3))
    edges.add(_norm(t.v2, t.v4))
    return Graph(g.p, edges)


def face_split(g: Graph, face) -> Graph:
    """Insert a new vertex ``p`` inside ``face`` joined to its boundary.

    ``face`` is a :class:`~polyseq.planarity.Face` or a cyclic vertex list.
    """
    from .planarity import is_planar

    boundary = list(getattr(face, "boundary", face))
    n = len(boundary)
    if n < 3 or len(set(boundary)) != n:
        raise InvalidFaceError(f"face boundary {boundary} is not a simple cycle")
    for i in range(n):
        if not g.has_edge(boundary[i], boundary[(i + 1) % n]):
            raise InvalidFaceError(
                f"face boundary {boundary}: {boundary[i]}{boundary[(i + 1) % n]} is not an edge"
            )
    h = Graph(g.p + 1, list(g.edges) + [(g.p, v) for v in boundary])
    # A wheel on the boundary is 3-connected, so the new vertex sits in a face
    # bounded exactly by the cycle in some embedding iff h is planar.
    if not is_planar(h):
        raise InvalidFaceError(f"{boundary} is not a face of any planar embedding")
    return h
