"""The eight forcibly polyhedral sequences and their unique realisations."""

from __future__ import annotations

from . import families
from .sequences import DegreeSequence, as_sequence


def _s(a: int) -> DegreeSequence:
    return DegreeSequence([a + 3] * (4 - a) + [a + 2] * a + [3] * a)


NAMES = {
    "s0": "tetrahedron",
    "s1": "triangular bipyramid",
    "s2": "tetrahedron with 2 face splits",
    "s3": "tetrahedron with 3 face splits",
    "s4": "tetrahedron with 4 face splits",
    "octahedron": "octahedron",
    "square_pyramid": "square pyramid",
    "pentagonal_pyramid": "pentagonal pyramid",
}

SEQUENCES: dict[str, DegreeSequence] = {
    **{f"s{a}": _s(a) for a in range(5)},
    "octahedron": DegreeSequence([4] * 6),
    "square_pyramid": DegreeSequence([4, 3, 3, 3, 3]),
    "pentagonal_pyramid": DegreeSequence([5, 3, 3, 3, 3, 3]),
}

_BY_SEQUENCE = {seq: key for key, seq in SEQUENCES.items()}


def build(key: str):
    if key in ("s0", "s1", "s2", "s3", "s4"):
        return families.split_tetrahedron(int(key[1:]))
    if key == "octahedron":
        return families.octahedron()
    if key == "square_pyramid":
        return families.pyramid(4)
    if key == "pentagonal_pyramid":
        return families.pyramid(5)
    raise KeyError(key)


def lookup(s) -> str | None:
    """Key of ``s`` among the eight, or ``None``."""
    return _BY_SEQUENCE.get(as_sequence(s))
