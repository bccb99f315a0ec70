"""Canonical labeling by partition refinement and individualisation search.

The canonical labeling is the one maximising the adjacency code over all
leaves of the search tree. Subtrees shown equivalent by an automorphism
found at an earlier leaf are skipped, which keeps highly symmetric graphs
(complete, empty, regular) tractable.
"""

from __future__ import annotations

from .errors import UnsupportedOrderError
from .graph import Graph

MAX_CANON_ORDER = 32


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of ``cells`` (cell order is label-free)."""
    while True:
        for w in cells:
            wmask = 0
            for x in w:
                wmask |= 1 << x
            new = []
            split = False
            for c in cells:
                if len(c) == 1:
                    new.append(c)
                    continue
                groups: dict[int, list[int]] = {}
                for x in c:
                    groups.setdefault((adj[x] & wmask).bit_count(), []).append(x)
                if len(groups) == 1:
                    new.append(c)
                else:
                    split = True
                    new.extend(groups[k] for k in sorted(groups))
            if split:
                cells = new
                break
        else:
            return cells


def _individualise(cells: list[list[int]], v: int) -> list[list[int]]:
    out = []
    for c in cells:
        if v in c:
            out.append([v])
            rest = [x for x in c if x != v]
            if rest:
                out.append(rest)
        else:
            out.append(c)
    return out


class _Search:
    def __init__(self, g: Graph):
        self.n = g.p
        self.adj = [sum(1 << u for u in g.adj(v)) for v in range(g.p)]
        self.best_code = None
        self.best_order: list[int] | None = None
        self.first_code = None
        self.first_order: list[int] | None = None
        self.first_prefix: list[int] | None = None
        self.autos: list[list[int]] = []

    def code(self, order: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            mask = 0
            a = self.adj[v]
            while a:
                low = a & -a
                mask |= 1 << pos[low.bit_length() - 1]
                a ^= low
            rows.append(mask)
        return tuple(rows)

    def _automorphism(self, order: list[int], ref: list[int]) -> list[int]:
        gamma = [0] * self.n
        for a, b in zip(ref, order):
            gamma[a] = b
        return gamma

    def leaf(self, cells, prefix) -> int | None:
        order = [c[0] for c in cells]
        code = self.code(order)
        if self.first_code is None:
            self.first_code = self.best_code = code
            self.first_order = self.best_order = order
            self.first_prefix = list(prefix)
            return None
        if code == self.first_code:
            self.autos.append(self._automorphism(order, self.first_order))
            d = 0
            while d < len(prefix) and prefix[d] == self.first_prefix[d]:
                d += 1
            return d
        if code == self.best_code:
            self.autos.append(self._automorphism(order, self.best_order))
        elif code > self.best_code:
            self.best_code = code
            self.best_order = order
        return None

    def orbit_rep(self, prefix: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.autos:
            if all(gamma[v] == v for v in prefix):
                for x in range(self.n):
                    a, b = find(x), find(gamma[x])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(x) for x in range(self.n)]

    def dfs(self, cells, prefix) -> int | None:
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            return self.leaf(cells, prefix)
        level = len(prefix)
        done: set[int] = set()
        for v in sorted(target):
            if self.autos and done:
                rep = self.orbit_rep(prefix)
                if rep[v] in {rep[x] for x in done}:
                    continue
            jump = self.dfs(_refine(self.adj, _individualise(cells, v)), prefix + [v])
            done.add(v)
            if jump is not None and jump < level:
                return jump
        return None


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``perm`` with ``g.relabel(perm)`` canonical."""
    if g.p > MAX_CANON_ORDER:
        raise UnsupportedOrderError(f"canonical form supports p <= {MAX_CANON_ORDER}, got {g.p}")
    if g.p == 0:
        return []
    s = _Search(g)
    s.dfs(_refine(s.adj, [list(range(g.p))]), [])
    perm = [0] * g.p
    for i, v in enumerate(s.best_order):
        perm[v] = i
    return perm


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string: order byte plus packed upper triangle."""
    perm = canonical_labeling(g)
    h = g.relabel(perm)
    n = g.p
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if h.has_edge(i, j) else 0)
            nbits += 1
    nbytes = (nbits + 7) // 8
    acc <<= nbytes * 8 - nbits
    return bytes([n]) + acc.to_bytes(nbytes, "big")


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.p != h.p or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
