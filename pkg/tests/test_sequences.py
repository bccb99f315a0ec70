import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from polyseq import families
from polyseq.canon import is_isomorphic
from polyseq.errors import NotGraphicalError, ParseError
from polyseq.graph import degree_sequence
from polyseq.sequences import (
    DegreeSequence,
    erdos_gallai_ok,
    havel_hakimi_realise,
    is_graphical,
    parse_sequence,
)


def test_parse_exponents():
    assert parse_sequence("4^3,3^2") == (4, 4, 4, 3, 3)
    assert parse_sequence("3,3,3,3") == (3, 3, 3, 3)
    assert parse_sequence(" 6 , 5^3 ,3^3") == (6, 5, 5, 5, 3, 3, 3)


@pytest.mark.parametrize("bad", ["4,-1", "a", "3^", "^2", "3,,3", "3^-1"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_sequence(bad)


def test_sorted_and_text():
    s = DegreeSequence([3, 5, 3, 4])
    assert tuple(s) == (5, 4, 3, 3)
    assert s.to_text() == "5,4,3^2"
    assert parse_sequence(s.to_text()) == s
    assert s.p == 4 and s.degree_sum == 15


def test_negative_rejected():
    with pytest.raises(ParseError):
        DegreeSequence([1, -1])


@pytest.mark.parametrize(
    "s, expected",
    [((3, 3, 3, 3), True), ((3, 3, 3, 1), False), ((), True), ((1,), False), ((2, 2, 2), True), ((4, 1, 1, 1), False)],
)
def test_is_graphical(s, expected):
    assert is_graphical(s) is expected


def test_realise_small():
    assert is_isomorphic(havel_hakimi_realise((2, 2, 2)), families.cycle(3))
    assert havel_hakimi_realise((3, 3, 3, 3)) == families.complete(4)
    g = havel_hakimi_realise((6, 3, 3, 3, 3, 3, 3))
    assert degree_sequence(g) == (6,) + (3,) * 6


def test_realise_not_graphical():
    with pytest.raises(NotGraphicalError):
        havel_hakimi_realise((3, 3, 3, 1))


def _brute_graphical(ds):
    p = len(ds)
    pairs = [(i, j) for i in range(p) for j in range(i + 1, p)]
    for mask in range(1 << len(pairs)):
        deg = [0] * p
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                deg[i] += 1
                deg[j] += 1
        if sorted(deg, reverse=True) == list(ds):
            return True
    return False


def test_graphical_matches_exhaustive_search():
    for p in range(0, 6):
        for ds in itertools.combinations_with_replacement(range(p - 1, -1, -1), p):
            ds = tuple(sorted(ds, reverse=True))
            truth = _brute_graphical(ds)
            assert is_graphical(ds) == truth, ds
            assert erdos_gallai_ok(list(ds)) == truth, ds


@settings(max_examples=300, deadline=None)
@given(graphs(max_p=12))
def test_sequence_of_graph_is_graphical(g):
    s = degree_sequence(g)
    assert is_graphical(s)
    assert degree_sequence(havel_hakimi_realise(s)) == s


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 9), max_size=10))
def test_realise_iff_graphical(ds):
    s = DegreeSequence(ds)
    if is_graphical(s):
        assert degree_sequence(havel_hakimi_realise(s)) == s
    else:
        with pytest.raises(NotGraphicalError):
            havel_hakimi_realise(s)
