"""Constructive non-polyhedral realisations by a single two-switch.

Given a polyhedral graph whose degree sequence is not one of the eight
forcibly polyhedral ones, choose a switch so that the result is either
non-planar (a K3,3 or K5 subdivision is assembled from face boundaries,
neighbour cycles and disjoint paths already present in the input) or not
2-connected (pyramids). Each construction is checked with the generic
certificate verifier before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from . import eight
from .connectivity import SeparationCertificate, internally_disjoint_paths, path_avoiding
from .errors import (
    ForciblyPolyhedralError,
    InternalInvariantError,
    InvalidInputError,
    WrongCaseError,
)
from .graph import Graph, TwoSwitch, degree_sequence, switch_violation, two_switch
from .planarity import (
    K5,
    K33,
    Face,
    KuratowskiCertificate,
    PlanarEmbedding,
    is_triangulation,
    verify_kuratowski,
)
from .polyhedrality import is_polyhedral, verify_certificate

NONTRI_GENERIC = "NONTRI_GENERIC"
NONTRI_ADJACENT_FACES = "NONTRI_ADJACENT_FACES"
PYRAMID = "PYRAMID"
TRI_GENERIC = "TRI_GENERIC"
TRI_DD1 = "TRI_DD1"
TRI_BIPYRAMID = "TRI_BIPYRAMID"
CASE_TAGS = (NONTRI_GENERIC, NONTRI_ADJACENT_FACES, PYRAMID, TRI_GENERIC, TRI_DD1, TRI_BIPYRAMID)


@dataclass
class WitnessTrace:
    case_tag: str
    bindings: dict[str, int] = field(default_factory=dict)
    switch: TwoSwitch | None = None

    def to_json(self) -> dict:
        return {
            "case": self.case_tag,
            "bindings": dict(self.bindings),
            "switch": list(self.switch.as_tuple()) if self.switch else None,
        }


class Witness(NamedTuple):
    graph: Graph
    certificate: object
    trace: WitnessTrace | None


def _cycle_bindings(prefix: str, cyc) -> dict[str, int]:
    return {f"{prefix}{i + 1}": v for i, v in enumerate(cyc)}


def _arc(cyc: list[int], i: int, j: int) -> list[int]:
    """Vertices of the cyclic list from position ``i`` forward to ``j``."""
    n = len(cyc)
    return [cyc[(i + s) % n] for s in range((j - i) % n + 1)]


def _long_arc(face: Face, a: int, b: int) -> list[int]:
    """Boundary path from ``a`` to ``b`` that avoids the face edge ``ab``."""
    cyc = face.starting_at(a)
    if cyc[1] == b:
        cyc = [a] + cyc[1:][::-1]
    return cyc[: cyc.index(b) + 1]


def _other_face(emb: PlanarEmbedding, fidx: int, a: int, b: int) -> tuple[int, Face]:
    i = emb.dart_face[(a, b)]
    if i == fidx:
        i = emb.dart_face[(b, a)]
    return i, emb.faces[i]


def _split_at(arc: list[int], v: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    k = arc.index(v)
    return tuple(arc[: k + 1]), tuple(arc[k:])


def _trim_path(path: list[int], start_set, end_set) -> list[int]:
    """Sub-path from the last ``start_set`` vertex to the next ``end_set`` vertex."""
    i = max(k for k, v in enumerate(path) if v in start_set)
    j = next(k for k in range(i, len(path)) if path[k] in end_set)
    return path[i : j + 1]


def _finish(g: Graph, t: TwoSwitch, cert, tag: str, bindings: dict) -> Witness | None:
    if switch_violation(g, t) is not None:
        return None
    h = two_switch(g, t)
    if not verify_certificate(h, cert):
        return None
    return Witness(h, cert, WitnessTrace(tag, bindings, t))


# ---------------------------------------------------------------------------
# Pyramids
# ---------------------------------------------------------------------------


def _walk_cycle(adj_of, start: int, second: int) -> list[int]:
    cyc = [start, second]
    while True:
        nxt = [x for x in adj_of(cyc[-1]) if x != cyc[-2]]
        if len(nxt) != 1:
            return []
        if nxt[0] == start:
            return cyc
        if nxt[0] in cyc:
            return []
        cyc.append(nxt[0])


def pyramid_structure(g: Graph) -> tuple[int, list[int]] | None:
    """``(apex, base cycle)`` if ``g`` is an n-gonal pyramid, n >= 3."""
    n = g.p - 1
    if n < 3 or g.m != 2 * n:
        return None
    for c in range(g.p):
        if g.degree(c) != n:
            continue
        base = [v for v in range(g.p) if v != c]
        if any(g.degree(v) != 3 for v in base):
            continue
        u1 = min(base)
        nb = sorted(x for x in g.adj(u1) if x != c)
        cyc = _walk_cycle(lambda v: [x for x in g.adj(v) if x != c], u1, nb[0])
        if len(cyc) == n:
            return c, cyc
    return None


def pyramid_witness(g: Graph) -> Witness:
    st = pyramid_structure(g)
    if st is None:
        raise WrongCaseError("graph is not a pyramid")
    c, u = st
    n = len(u)
    if n <= 5:
        raise ForciblyPolyhedralError(
            {3: "tetrahedron", 4: "square pyramid", 5: "pentagonal pyramid"}[n]
        )
    t = TwoSwitch(u[1], u[2], u[5], u[4])
    cert = SeparationCertificate((c,), (u[0], u[3]))
    w = _finish(g, t, cert, PYRAMID, {"c": c, **_cycle_bindings("u", u)})
    if w is None:
        raise InternalInvariantError(f"pyramid switch failed on {g!r}")
    return w


# ---------------------------------------------------------------------------
# Non-triangulations
# ---------------------------------------------------------------------------


def _nontri_generic(g, emb, fi, u) -> Witness | None:
    n = len(u)
    f1i, f1 = _other_face(emb, fi, u[0], u[1])
    f2i, f2 = _other_face(emb, fi, u[2], u[3])
    fset = set(u)
    x0 = next(v for v in f1.starting_at(u[0]) if v not in (u[0], u[1]))
    y0 = next(v for v in f2.starting_at(u[2]) if v not in (u[2], u[3]))
    path = path_avoiding(g, x0, y0, fset)
    if path is None:
        return None
    sub = _trim_path(path, f1.vertices, f2.vertices)
    x, y = sub[0], sub[-1]
    u1x, xu2 = _split_at(_long_arc(f1, u[0], u[1]), x)
    u3y, yu4 = _split_at(_long_arc(f2, u[2], u[3]), y)
    paths = (
        (u[0], u[2]),
        (u[1], u[3]),
        tuple(_arc(u, 3, 0)),
        (u[1], u[2]),
        u1x,
        xu2,
        u3y,
        yu4,
        tuple(sub),
    )
    cert = KuratowskiCertificate(K33, ((u[0], u[1], y), (u[2], u[3], x)), paths)
    bindings = {**_cycle_bindings("u", u), "x": x, "y": y, "F": fi, "F1": f1i, "F2": f2i}
    return _finish(g, TwoSwitch(u[0], u[1], u[2], u[3]), cert, NONTRI_GENERIC, bindings)


def _nontri_adjacent(g, emb, fi, u) -> Witness | None:
    n = len(u)
    f4i, f4 = _other_face(emb, fi, u[1], u[2])
    fset = set(u)
    # edge u_m u_{m+1} (1-based), m = n first, then 4..n-1
    for m in [n] + list(range(4, n)):
        i2, i1 = m - 1, m % n  # positions of u'' = u_m and u' = u_{m+1}
        up, upp = u[i1], u[i2]
        f3i, f3 = _other_face(emb, fi, upp, up)
        if f3.vertices & f4.vertices:
            continue
        x0 = next(v for v in f4.starting_at(u[1]) if v not in (u[1], u[2]))
        y0 = next(v for v in f3.starting_at(upp) if v not in (up, upp))
        path = path_avoiding(g, x0, y0, fset)
        if path is None:
            continue
        sub = _trim_path(path, f4.vertices, f3.vertices)
        xp, yp = sub[0], sub[-1]
        up_y, y_upp = _split_at(_long_arc(f3, up, upp), yp)
        u2_x, x_u3 = _split_at(_long_arc(f4, u[1], u[2]), xp)
        paths = (
            (up, u[2]),
            (upp, u[1]),
            tuple(_arc(u, i1, 1)),
            tuple(_arc(u, 2, i2)),
            up_y,
            y_upp,
            u2_x,
            x_u3,
            tuple(sub),
        )
        cert = KuratowskiCertificate(K33, ((up, upp, xp), (u[1], u[2], yp)), paths)
        bindings = {
            **_cycle_bindings("u", u),
            "u'": up,
            "u''": upp,
            "x'": xp,
            "y'": yp,
            "F": fi,
            "F3": f3i,
            "F4": f4i,
        }
        w = _finish(g, TwoSwitch(up, upp, u[2], u[1]), cert, NONTRI_ADJACENT_FACES, bindings)
        if w is not None:
            return w
    return None


def _face_labelings(face: Face):
    """Boundary labelings u1..un: lowest vertex first, then the other rotations."""
    cyc = face.starting_at(min(face.boundary))
    n = len(cyc)
    for s in range(n):
        yield cyc[s:] + cyc[:s]
    rev = cyc[::-1]
    for s in range(n):
        yield rev[s:] + rev[:s]


def _faces_meet(emb: PlanarEmbedding, fi: int, u: list[int]) -> bool:
    _, f1 = _other_face(emb, fi, u[0], u[1])
    _, f2 = _other_face(emb, fi, u[2], u[3])
    return bool(f1.vertices & f2.vertices)


def nontriangulation_witness(g: Graph, embedding: PlanarEmbedding) -> Witness:
    if pyramid_structure(g) is not None:
        raise WrongCaseError("pyramids are handled by pyramid_witness")
    big = [i for i, f in enumerate(embedding.faces) if f.n >= 4]
    if not big:
        raise WrongCaseError("graph is a triangulation")
    for fi in big:
        labelings = list(_face_labelings(embedding.faces[fi]))
        n = len(labelings[0])
        # u1 is the lowest vertex; of its two orientations the one with
        # disjoint F1, F2 goes first. Other rotations are a fallback only.
        rev = 2 * n - 1  # reversed orientation, still starting at u1
        primary = sorted([labelings[0], labelings[rev]], key=lambda u: _faces_meet(embedding, fi, u))
        for u in primary + labelings[1:n] + labelings[n:rev]:
            if _faces_meet(embedding, fi, u):
                w = _nontri_adjacent(g, embedding, fi, u)
            else:
                w = _nontri_generic(g, embedding, fi, u)
            if w is not None:
                return w
    raise InternalInvariantError(f"no non-triangulation construction found for {g!r}")


# ---------------------------------------------------------------------------
# Triangulations
# ---------------------------------------------------------------------------


def _rotation_cycle(emb: PlanarEmbedding, v: int) -> list[int]:
    r = list(emb.rotation[v])
    k = r.index(min(r))
    return r[k:] + r[:k]


def bipyramid_structure(g: Graph, emb: PlanarEmbedding) -> tuple[int, int, list[int]] | None:
    """``(u, w, base cycle)`` if ``g`` is an n-gonal bipyramid, n >= 4."""
    n = g.p - 2
    if n < 4 or g.m != 3 * n:
        return None
    apexes = [v for v in range(g.p) if g.degree(v) == n]
    for i, u in enumerate(apexes):
        for w in apexes[i + 1 :]:
            if g.has_edge(u, w) or g.adj(u) != g.adj(w):
                continue
            base = _rotation_cycle(emb, u)
            if all(g.has_edge(base[k], base[(k + 1) % n]) for k in range(n)):
                return u, w, base
    return None


def _bipyramid_case(g, u, w, base) -> Witness:
    n = len(base)
    if n == 4:
        raise ForciblyPolyhedralError("octahedron")
    u1, u2, u3, u4, u5 = base[:5]
    paths = [(u, w), (u, u2), (u, u4), (u, u5), (w, u2), (w, u4), (w, u5), (u2, u3, u4), (u4, u5)]
    paths.append(tuple(base[4:]) + (u1, u2))
    cert = KuratowskiCertificate(K5, (u2, u4, u5, u, w), tuple(paths))
    bindings = {"u": u, "w": w, **_cycle_bindings("u", base)}
    res = _finish(g, TwoSwitch(u, u1, w, u3), cert, TRI_BIPYRAMID, bindings)
    if res is None:
        raise InternalInvariantError(f"bipyramid switch failed on {g!r}")
    return res


def _positions(cyc, vs):
    return sorted(vs, key=cyc.index)


def _cycle_arcs(cyc: list[int], marked: list[int]) -> list[tuple[int, ...]]:
    """Arcs of ``cyc`` between cyclically consecutive ``marked`` vertices."""
    idx = sorted(cyc.index(v) for v in marked)
    return [tuple(_arc(cyc, idx[k], idx[(k + 1) % len(idx)])) for k in range(len(idx))]


def _tri_generic(g, U, W, u, w, legs) -> Witness | None:
    pens = [leg[-2] for leg in legs]
    firsts = [leg[1] for leg in legs]
    for d in U:
        if d in pens:
            continue
        for d1 in W:
            if d1 in firsts or d == d1 or g.has_edge(d, d1):
                continue
            a, b, c = _positions(U, pens)
            leg_of = {leg[-2]: leg for leg in legs}
            paths = [(u, w), (u, a), (u, b), (u, c)]
            paths += [tuple(leg_of[v][:-1])[::-1] for v in (a, b, c)]
            paths += _cycle_arcs(U, [a, b, c])
            cert = KuratowskiCertificate(K5, (a, b, c, u, w), tuple(paths))
            bindings = {
                "u": u,
                "w": w,
                "a": a,
                "b": b,
                "c": c,
                "d": d,
                "a1": leg_of[a][1],
                "b1": leg_of[b][1],
                "c1": leg_of[c][1],
                "d1": d1,
            }
            res = _finish(g, TwoSwitch(u, d, w, d1), cert, TRI_GENERIC, bindings)
            if res is not None:
                return res
    return None


def _has_admissible_pair(g, U, W, legs) -> bool:
    pens = {leg[-2] for leg in legs}
    firsts = {leg[1] for leg in legs}
    return any(
        d != d1 and not g.has_edge(d, d1)
        for d in U
        if d not in pens
        for d1 in W
        if d1 not in firsts
    )


def _closing_switches(g, s, t, used_edges, preferred):
    """Switches (s, alpha, t, gamma) adding st without touching ``used_edges``."""
    seen = set()
    cands = list(preferred) + [
        (alpha, gamma) for alpha in g.neighbors(s) for gamma in g.neighbors(t)
    ]
    for alpha, gamma in cands:
        if (alpha, gamma) in seen:
            continue
        seen.add((alpha, gamma))
        if frozenset((s, alpha)) in used_edges or frozenset((t, gamma)) in used_edges:
            continue
        if len({s, alpha, t, gamma}) != 4:
            continue
        t_ = TwoSwitch(s, alpha, t, gamma)
        if switch_violation(g, t_) is None:
            yield t_


def _tri_dd1(g, U, W, u, w, legs) -> Witness | None:
    pens = [leg[-2] for leg in legs]
    firsts = [leg[1] for leg in legs]
    leg_of = {leg[-2]: leg for leg in legs}
    # links from a candidate d back to w: directly, or through a d1 off the cycle U
    links = []
    for d in U:
        if d in pens:
            continue
        if d in W:
            links.append((d, d, (d, w)))
    for d in U:
        if d in pens:
            continue
        for d1 in W:
            if d1 not in firsts and d1 not in U and g.has_edge(d, d1):
                links.append((d, d1, (d, d1, w)))
    for d, d1, link in links:
        k = U.index(d)
        q1, q2, q3 = sorted(pens, key=lambda v: (U.index(v) - k) % len(U))
        arcs = _cycle_arcs(U, [q1, q2, q3, d])
        spokes = [(u, v) for v in (q1, q2, q3, d)]
        b_leg = tuple(leg_of[q2][:-1])[::-1]  # q2 .. w
        # primary arrangement: ac joined by the switch, bd through w
        for a, c in ((q1, q3), (q3, q1)):
            through_w = b_leg + tuple(reversed(link))[1:]
            paths = spokes + arcs + [(a, c), through_w]
            cert = KuratowskiCertificate(K5, (a, q2, c, d, u), tuple(paths))
            used = {frozenset(e) for p in paths for e in zip(p, p[1:])}
            a1, c1 = leg_of[a][1], leg_of[c][1]
            preferred = []
            if a != a1:
                preferred.append((a1, c1 if c != c1 else w))
            for t in _closing_switches(g, a, c, used, preferred):
                bindings = {
                    "u": u, "w": w, "a": a, "b": q2, "c": c, "d": d,
                    "a1": a1, "b1": leg_of[q2][1], "c1": c1, "d1": d1,
                }
                res = _finish(g, t, cert, TRI_DD1, bindings)
                if res is not None:
                    return res
        # other diagonal: q1q3 through w, q2d joined by the switch
        through_w = tuple(leg_of[q1][:-1])[::-1] + tuple(leg_of[q3][:-1])[1:]
        paths = spokes + arcs + [(q2, d), through_w]
        cert = KuratowskiCertificate(K5, (q1, q2, q3, d, u), tuple(paths))
        used = {frozenset(e) for p in paths for e in zip(p, p[1:])}
        for t in _closing_switches(g, q2, d, used, []):
            bindings = {
                "u": u, "w": w, "a": q1, "b": q2, "c": q3, "d": d,
                "a1": leg_of[q1][1], "b1": leg_of[q2][1], "c1": leg_of[q3][1], "d1": d1,
            }
            res = _finish(g, t, cert, TRI_DD1, bindings)
            if res is not None:
                return res
    return None


def triangulation_witness(g: Graph, embedding: PlanarEmbedding) -> Witness:
    if eight.lookup(degree_sequence(g)) == "octahedron":
        raise ForciblyPolyhedralError("octahedron")
    bp = bipyramid_structure(g, embedding)
    if bp is not None:
        return _bipyramid_case(g, *bp)
    big = [v for v in range(g.p) if g.degree(v) >= 4]
    pairs = [(u, w) for i, u in enumerate(big) for w in big[i + 1 :] if not g.has_edge(u, w)]
    if not pairs:
        raise WrongCaseError("all vertices of degree at least four are pairwise adjacent")
    # ordered pairs, closest first: most common neighbours, then smallest
    # combined length of the three w-u paths, then lowest labels
    ranked = []
    for u0, w0 in pairs:
        common = len(g.adj(u0) & g.adj(w0))
        for u, w in ((u0, w0), (w0, u0)):
            legs = internally_disjoint_paths(g, w, u, 3)
            ranked.append((-common, legs.total_length, u, w, legs.paths))
    ranked.sort(key=lambda r: r[:4])
    for _, _, u, w, legs in ranked:
        U = _rotation_cycle(embedding, u)
        W = _rotation_cycle(embedding, w)
        if _has_admissible_pair(g, U, W, legs):
            res = _tri_generic(g, U, W, u, w, legs)
        else:
            res = _tri_dd1(g, U, W, u, w, legs)
        if res is not None:
            return res
    raise InternalInvariantError(f"no triangulation construction found for {g!r}")


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------


def build_witness(g: Graph, embedding: PlanarEmbedding | None = None) -> Witness:
    """Two-switch ``g`` into a non-polyhedral graph with the same degrees."""
    key = eight.lookup(degree_sequence(g))
    if key is not None:
        raise ForciblyPolyhedralError(eight.NAMES[key])
    if embedding is None:
        res = is_polyhedral(g)
        if not isinstance(res, PlanarEmbedding):
            raise InvalidInputError("build_witness needs a polyhedral graph")
        embedding = res
    if pyramid_structure(g) is not None:
        w = pyramid_witness(g)
    elif is_triangulation(g, embedding):
        w = triangulation_witness(g, embedding)
    else:
        w = nontriangulation_witness(g, embedding)
    if degree_sequence(w.graph) != degree_sequence(g) or not verify_certificate(w.graph, w.certificate):
        raise InternalInvariantError("witness failed its own checks")
    return w
