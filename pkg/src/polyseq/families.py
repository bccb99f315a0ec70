"""Named graphs used as inputs, references and test fixtures."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def tetrahedron() -> Graph:
    return complete(4)


def prism(n: int = 3) -> Graph:
    """Two n-cycles ``0..n-1`` and ``n..2n-1`` joined by a matching."""
    es = [(i, (i + 1) % n) for i in range(n)]
    es += [(n + i, n + (i + 1) % n) for i in range(n)]
    es += [(i, n + i) for i in range(n)]
    return Graph(2 * n, es)


def cube() -> Graph:
    return prism(4)


def pyramid(n: int) -> Graph:
    """Apex ``0`` over the base cycle ``1..n``."""
    es = [(0, i) for i in range(1, n + 1)]
    es += [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph(n + 1, es)


def bipyramid(n: int) -> Graph:
    """Apexes ``0`` and ``1`` over the base cycle ``2..n+1``."""
    base = list(range(2, n + 2))
    es = [(a, b) for a in (0, 1) for b in base]
    es += [(base[i], base[(i + 1) % n]) for i in range(n)]
    return Graph(n + 2, es)


def octahedron() -> Graph:
    return bipyramid(4)


def icosahedron() -> Graph:
    # top 0, upper ring 1..5, lower ring 6..10, bottom 11
    es = []
    for i in range(5):
        a, b = 1 + i, 1 + (i + 1) % 5
        c, d = 6 + i, 6 + (i + 1) % 5
        es += [(0, a), (a, b), (c, d), (11, c), (a, c), (b, c)]
    return Graph(12, es)


# Original faces of K4, split in this order to build the s_a polyhedra.
TETRAHEDRON_FACES = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))


def split_tetrahedron(a: int, faces=TETRAHEDRON_FACES[:4]) -> Graph:
    """K4 with ``a`` of its original faces each split by one new vertex."""
    from .graph import face_split

    g = tetrahedron()
    for f in list(faces)[:a]:
        g = face_split(g, f)
    return g
