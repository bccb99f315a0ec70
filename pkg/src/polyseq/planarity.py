"""Planarity testing with certificates on both sides.

Each biconnected block is embedded by path addition (Demoucron, Malgrange
and Pertuiset): grow an embedded subgraph from a cycle, always placing a
fragment that has the fewest admissible faces. Block rotations are then
concatenated at cut vertices. Non-planar graphs are shrunk to an
edge-minimal non-planar subgraph, which is a subdivision of K5 or K3,3.

Face traversal convention: the dart ``u -> v`` is followed by
``v -> succ_v(u)`` where ``succ_v`` is the cyclic successor in the rotation
at ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Union

from .graph import Graph

K5 = "K5"
K33 = "K33"


@dataclass(frozen=True)
class Face:
    boundary: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.boundary)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.boundary)

    def darts(self):
        b = self.boundary
        return [(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]

    def starting_at(self, v: int) -> list[int]:
        i = self.boundary.index(v)
        return list(self.boundary[i:] + self.boundary[:i])


@dataclass(frozen=True)
class PlanarEmbedding:
    """Rotation system: ``rotation[v]`` is the cyclic neighbour order at ``v``."""

    rotation: tuple[tuple[int, ...], ...]

    @cached_property
    def faces(self) -> list[Face]:
        return faces(self)

    def succ(self, v: int, u: int) -> int:
        r = self.rotation[v]
        return r[(r.index(u) + 1) % len(r)]

    @cached_property
    def dart_face(self) -> dict[tuple[int, int], int]:
        out = {}
        for i, f in enumerate(self.faces):
            for d in f.darts():
                out[d] = i
        return out

    def face_of_dart(self, u: int, v: int) -> Face:
        return self.faces[self.dart_face[(u, v)]]

    def to_json(self) -> dict:
        return {"kind": "embedding", "rotation": [list(r) for r in self.rotation]}

    @classmethod
    def from_json(cls, data: dict) -> PlanarEmbedding:
        return cls(tuple(tuple(int(x) for x in r) for r in data["rotation"]))


@dataclass(frozen=True)
class KuratowskiCertificate:
    """A subdivision of K5 or K3,3.

    ``branch_vertices`` is a 5-tuple for K5 and a pair of triples for K3,3;
    ``paths`` lists one vertex path per branch pair that must be joined.
    """

    kind: str
    branch_vertices: tuple
    paths: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        if self.kind == K5:
            bv = list(self.branch_vertices)
        else:
            bv = [list(t) for t in self.branch_vertices]
        return {"kind": self.kind, "branch_vertices": bv, "paths": [list(p) for p in self.paths]}

    @classmethod
    def from_json(cls, data: dict) -> KuratowskiCertificate:
        kind = data["kind"]
        if kind == K5:
            bv = tuple(int(x) for x in data["branch_vertices"])
        else:
            bv = tuple(tuple(int(x) for x in t) for t in data["branch_vertices"])
        return cls(kind, bv, tuple(tuple(int(x) for x in p) for p in data["paths"]))


# ---------------------------------------------------------------------------
# Blocks
# ---------------------------------------------------------------------------


def _blocks(adj: list[set[int]]) -> list[list[tuple[int, int]]]:
    """Biconnected components as edge lists (iterative Tarjan)."""
    n = len(adj)
    disc = [-1] * n
    low = [0] * n
    t = 0
    out = []
    for root in range(n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(sorted(adj[root])))]
        estack: list[tuple[int, int]] = []
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    estack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(sorted(adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    block = []
                    while True:
                        e = estack.pop()
                        block.append(e)
                        if e == (parent, v):
                            break
                    out.append(block)
    return out


# ---------------------------------------------------------------------------
# Path addition on one biconnected block
# ---------------------------------------------------------------------------


def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    start = min(adj)
    parent = {start: None}
    depth = {start: 0}
    stack = [(start, iter(sorted(adj[start])))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                stack.append((w, iter(sorted(adj[w]))))
                break
            if w != parent[v] and depth[w] < depth[v]:
                cyc = [v]
                x = v
                while x != w:
                    x = parent[x]
                    cyc.append(x)
                return cyc
        else:
            stack.pop()
    raise ValueError("no cycle in block")


def _embed_block(adj: dict[int, set[int]], want_faces: bool = True):
    """Oriented faces of a planar embedding of a biconnected block, or None."""
    cycle = _find_cycle(adj)
    in_h = set(cycle)
    h_edges = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    faces = [list(cycle), cycle[::-1]]
    face_sets = [set(cycle), set(cycle)]
    total = sum(len(a) for a in adj.values()) // 2
    while len(h_edges) < total:
        chosen = None
        for att, interior, link in _fragments(adj, in_h, h_edges):
            admissible = [i for i, fs in enumerate(face_sets) if att <= fs]
            if not admissible:
                return None
            if chosen is None or len(admissible) == 1:
                chosen = (att, interior, link, admissible[0])
                if len(admissible) == 1:
                    break
        att, interior, link, fi = chosen
        path = link if not interior else _fragment_path(adj, att, interior)
        f = faces[fi]
        i, j = f.index(path[0]), f.index(path[-1])
        k = len(f)
        mid = path[1:-1]
        arc_ij = [f[(i + s) % k] for s in range((j - i) % k + 1)]
        arc_ji = [f[(j + s) % k] for s in range((i - j) % k + 1)]
        f1 = arc_ij + mid[::-1]
        f2 = arc_ji + mid
        faces[fi] = f1
        face_sets[fi] = set(f1)
        faces.append(f2)
        face_sets.append(set(f2))
        in_h.update(mid)
        for a, b in zip(path, path[1:]):
            h_edges.add(frozenset((a, b)))
    return faces


def _fragments(adj, in_h, h_edges):
    for v in sorted(in_h):
        for w in sorted(adj[v]):
            if w > v and w in in_h and frozenset((v, w)) not in h_edges:
                yield frozenset((v, w)), None, [v, w]
    seen = set()
    for s in sorted(adj):
        if s in in_h or s in seen:
            continue
        comp = {s}
        seen.add(s)
        stack = [s]
        att = set()
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in in_h:
                    att.add(y)
                elif y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        yield frozenset(att), comp, None


def _fragment_path(adj, att, interior) -> list[int]:
    a = min(att)
    prev = {}
    frontier = []
    for x in sorted(adj[a]):
        if x in interior:
            prev[x] = a
            frontier.append(x)
    while frontier:
        nxt = []
        for x in frontier:
            for y in sorted(adj[x]):
                if y in att and y != a:
                    path = [y, x]
                    while path[-1] != a:
                        path.append(prev[path[-1]])
                    return path[::-1]
                if y in interior and y not in prev:
                    prev[y] = x
                    nxt.append(y)
        frontier = nxt
    raise ValueError("fragment with a single attachment in a biconnected block")


def _rotation_from_faces(vertices, faces) -> dict[int, list[int]]:
    succ: dict[int, dict[int, int]] = {v: {} for v in vertices}
    for f in faces:
        k = len(f)
        for i in range(k):
            succ[f[i]][f[i - 1]] = f[(i + 1) % k]
    rot = {}
    for v, s in succ.items():
        start = min(s)
        order = [start]
        x = s[start]
        while x != start:
            order.append(x)
            x = s[x]
        rot[v] = order
    return rot


def _embed(g: Graph, want_rotation: bool):
    adj = [set(g.adj(v)) for v in range(g.p)]
    rotation: list[list[int]] = [[] for _ in range(g.p)]
    for block in _blocks(adj):
        if len(block) == 1:
            u, v = block[0]
            rotation[u].append(v)
            rotation[v].append(u)
            continue
        badj: dict[int, set[int]] = {}
        for u, v in block:
            badj.setdefault(u, set()).add(v)
            badj.setdefault(v, set()).add(u)
        nv, ne = len(badj), len(block)
        if ne > 3 * nv - 6:
            return None
        fs = _embed_block(badj)
        if fs is None:
            return None
        if want_rotation:
            for v, order in _rotation_from_faces(badj, fs).items():
                rotation[v].extend(order)
    return rotation


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def is_planar(g: Graph) -> bool:
    if g.p >= 3 and g.m > 3 * g.p - 6:
        return False
    return _embed(g, want_rotation=False) is not None


def planar_embedding(g: Graph) -> PlanarEmbedding | None:
    if g.p >= 3 and g.m > 3 * g.p - 6:
        return None
    rot = _embed(g, want_rotation=True)
    if rot is None:
        return None
    return PlanarEmbedding(tuple(tuple(r) for r in rot))


def planarity_check(g: Graph) -> Union[PlanarEmbedding, KuratowskiCertificate]:
    emb = planar_embedding(g)
    if emb is not None:
        return emb
    return kuratowski_subdivision(g)


def faces(embedding: PlanarEmbedding) -> list[Face]:
    rot = embedding.rotation
    pos = [{u: i for i, u in enumerate(r)} for r in rot]
    seen = set()
    out = []
    for v in range(len(rot)):
        for u in rot[v]:
            if (v, u) in seen:
                continue
            boundary = []
            a, b = v, u
            while (a, b) not in seen:
                seen.add((a, b))
                boundary.append(a)
                r = rot[b]
                a, b = b, r[(pos[b][a] + 1) % len(r)]
            out.append(Face(tuple(boundary)))
    return out


def euler_holds(g: Graph, embedding: PlanarEmbedding) -> bool:
    """Genus-zero check: V - E + F = 1 + C over the non-trivial components."""
    comps = [c for c in g.components() if len(c) > 1 or g.degree(c[0]) > 0]
    nv = sum(len(c) for c in comps)
    if len(embedding.rotation) != g.p:
        return False
    for v in range(g.p):
        r = embedding.rotation[v]
        if sorted(r) != g.neighbors(v) or len(set(r)) != len(r):
            return False
    return nv - g.m + len(embedding.faces) == 2 * len(comps)


def is_triangulation(g: Graph, embedding: PlanarEmbedding) -> bool:
    return g.p >= 3 and all(f.n == 3 for f in embedding.faces) and g.m == 3 * g.p - 6


def kuratowski_subdivision(g: Graph) -> KuratowskiCertificate:
    """Shrink a non-planar ``g`` to a Kuratowski subdivision and read it off."""
    keep_v = set(range(g.p))
    edges = set(g.edges)

    def sub(vs, es):
        return Graph(g.p, [e for e in es if e[0] in vs and e[1] in vs])

    for v in range(g.p):
        trial = keep_v - {v}
        if not is_planar(sub(trial, edges)):
            keep_v = trial
    edges = {e for e in edges if e[0] in keep_v and e[1] in keep_v}
    for e in sorted(edges):
        trial = edges - {e}
        if not is_planar(Graph(g.p, trial)):
            edges = trial
    h = Graph(g.p, edges)
    branch = sorted(v for v in range(g.p) if h.degree(v) >= 3)
    bset = set(branch)
    paths = []
    for b in branch:
        for nb in h.neighbors(b):
            path = [b, nb]
            while path[-1] not in bset:
                prev, cur = path[-2], path[-1]
                path.append(next(x for x in h.adj(cur) if x != prev))
            if path[0] < path[-1]:
                paths.append(tuple(path))
    paths.sort()
    if len(branch) == 5:
        return KuratowskiCertificate(K5, tuple(branch), tuple(paths))
    side = {branch[0]: 0}
    order = [branch[0]]
    ends = {b: [] for b in branch}
    for p in paths:
        ends[p[0]].append(p[-1])
        ends[p[-1]].append(p[0])
    while order:
        x = order.pop()
        for y in ends[x]:
            if y not in side:
                side[y] = 1 - side[x]
                order.append(y)
    left = tuple(sorted(b for b in branch if side[b] == 0))
    right = tuple(sorted(b for b in branch if side[b] == 1))
    return KuratowskiCertificate(K33, (left, right), tuple(paths))


def required_pairs(cert: KuratowskiCertificate) -> set[frozenset[int]] | None:
    bv = cert.branch_vertices
    if cert.kind == K5:
        if len(bv) != 5 or len(set(bv)) != 5:
            return None
        return {frozenset(pr) for pr in combinations(bv, 2)}
    if cert.kind == K33:
        if len(bv) != 2 or len(bv[0]) != 3 or len(bv[1]) != 3:
            return None
        if len(set(bv[0]) | set(bv[1])) != 6:
            return None
        return {frozenset((a, b)) for a in bv[0] for b in bv[1]}
    return None


def branch_set(cert: KuratowskiCertificate) -> set[int]:
    if cert.kind == K5:
        return set(cert.branch_vertices)
    return set(cert.branch_vertices[0]) | set(cert.branch_vertices[1])


def verify_kuratowski(g: Graph, cert: KuratowskiCertificate) -> bool:
    try:
        pairs = required_pairs(cert)
        if pairs is None:
            return False
        branch = branch_set(cert)
        if any(not isinstance(v, int) or not 0 <= v < g.p for v in branch):
            return False
        if len(cert.paths) != len(pairs):
            return False
        covered = set()
        used_interior: set[int] = set()
        for path in cert.paths:
            if len(path) < 2:
                return False
            ends = frozenset((path[0], path[-1]))
            if ends not in pairs or ends in covered:
                return False
            covered.add(ends)
            inner = path[1:-1]
            for v in inner:
                if not isinstance(v, int) or v in branch or v in used_interior:
                    return False
                used_interior.add(v)
            for a, b in zip(path, path[1:]):
                if not g.has_edge(a, b):
                    return False
        return covered == pairs
    except (TypeError, IndexError, ValueError):
        return False
