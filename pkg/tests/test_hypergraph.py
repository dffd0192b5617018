"""Uniform hypergraphs: construction, adjacency, isomorphism, text format."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

import pytest

from hyperspec.errors import (
    BadEdge,
    BadSetSize,
    BadSize,
    CapExceeded,
    ParseError,
)
from hyperspec.hypergraph import (
    Hypergraph,
    adjacency_tensor,
    canonical_form,
    complement,
    count_simplices,
    edge_bitmask,
    enumerate_all,
    format_hypergraph,
    from_bitmask,
    is_isomorphic,
    neighbors_in,
    parse_hypergraph,
    simplices,
    subset_order,
)
from hyperspec.tensor import is_symmetric


def test_construction_and_accessors():
    h = Hypergraph.from_edges(4, 3, [(1, 2, 3), (3, 2, 4)])
    assert h.n == 4 and h.k == 3
    assert h.edge_count == 2
    assert h.has_edge((1, 2, 3)) and h.has_edge((2, 3, 4))
    assert not h.has_edge((1, 2, 4))
    assert h.degree(3) == 2 and h.degree(1) == 1
    assert h.degree_sequence() == (1, 1, 2, 2)  # sorted ascending


def test_construction_validation():
    with pytest.raises(BadEdge):
        Hypergraph.from_edges(4, 3, [(1, 2)])  # wrong arity
    with pytest.raises(BadEdge):
        Hypergraph.from_edges(4, 3, [(1, 2, 5)])  # out of range
    with pytest.raises(BadEdge):
        Hypergraph.from_edges(4, 3, [(1, 2, 2)])  # repeated vertex
    with pytest.raises(BadSize):
        Hypergraph.from_edges(2, 3, [])  # k > n
    with pytest.raises(BadSize):
        Hypergraph.from_edges(3, 0, [])
    with pytest.raises(BadSize):
        Hypergraph.from_edges(3, 1, [(1,)])  # singleton edges unsupported
    assert Hypergraph.empty(3, 1).edge_count == 0  # vertex-only shell is fine


def test_complete_counts():
    assert Hypergraph.complete(5, 3).edge_count == comb(5, 3)
    assert Hypergraph.complete(4, 4).edge_count == 1


def test_adjacency_tensor_single_edge():
    h = Hypergraph.from_edges(3, 3, [(1, 2, 3)])
    a = adjacency_tensor(h)
    assert a.order == 3 and a.dim == 3
    nz = dict(a.nonzero_items())
    assert len(nz) == 6  # all orderings of the one edge
    assert all(v == Fraction(1, 2) for v in nz.values())
    assert is_symmetric(a)


def test_adjacency_tensor_complete():
    a = adjacency_tensor(Hypergraph.complete(4, 3))
    nz = dict(a.nonzero_items())
    assert len(nz) == comb(4, 3) * factorial(3)
    assert all(v == Fraction(1, 2) for v in nz.values())
    # weight is 1/(k-1)! so that row sums count incident edges
    assert sum(nz.values()) == comb(4, 3) * 3


def test_complement():
    h = Hypergraph.from_edges(5, 3, [(1, 2, 3)])
    c = complement(h)
    assert c.edge_count == comb(5, 3) - 1
    assert not c.has_edge((1, 2, 3))
    assert complement(c).edges == h.edges
    almost = complement(Hypergraph.from_edges(5, 3, [(1, 2, 3)]))
    back = complement(almost)
    assert back.edge_count == 1


def test_simplex_counts():
    # a simplex is k+1 vertices whose k-subsets are all present
    assert count_simplices(Hypergraph.complete(4, 3)) == 1
    assert count_simplices(Hypergraph.complete(6, 3)) == comb(6, 4)
    full = Hypergraph.complete(6, 3)
    pruned = Hypergraph.from_edges(6, 3, full.edges - {(1, 2, 3)})
    # dropping one triple kills the simplices through it: those are the
    # comb(6-3, 1) = 3 four-sets containing {1,2,3}
    assert count_simplices(pruned) == comb(6, 4) - 3
    assert count_simplices(Hypergraph.empty(5, 3)) == 0


def test_simplex_count_law():
    for n in (4, 5, 6, 7, 8):
        for k in (3, 4):
            if k + 1 > n:
                continue
            assert count_simplices(Hypergraph.complete(n, k)) == comb(n, k + 1)


def test_simplices_listing():
    h = Hypergraph.from_edges(5, 3, Hypergraph.complete(4, 3).edges)
    found = list(simplices(h))
    assert found == [(1, 2, 3, 4)]


def test_neighbors_in():
    edges = [(1, 2, 4), (1, 2, 5), (2, 3, 4), (2, 3, 6), (1, 3, 5), (1, 3, 6)]
    h = Hypergraph.from_edges(6, 3, edges)
    assert neighbors_in(h, (1, 2), (4, 5, 6)) == frozenset({4, 5})
    assert neighbors_in(h, (2, 3), (4, 5, 6)) == frozenset({4, 6})
    assert neighbors_in(h, (4, 5), (1, 2, 3)) == frozenset()
    with pytest.raises(BadSetSize):
        neighbors_in(h, (1,), (4, 5, 6))  # core must have k-1 vertices


def test_bitmask_round_trip():
    order = subset_order(5, 3)
    assert len(order) == comb(5, 3)
    assert order[0] == (1, 2, 3)
    rng = random.Random(41)
    for _ in range(20):
        chosen = [e for e in order if rng.random() < 0.4]
        h = Hypergraph.from_edges(5, 3, chosen)
        mask = edge_bitmask(h)
        back = from_bitmask(5, 3, mask)
        assert back.edges == h.edges
        assert edge_bitmask(back) == mask


def test_canonical_form_is_label_invariant():
    rng = random.Random(42)
    base = Hypergraph.from_edges(5, 3, [(1, 2, 3), (2, 3, 4), (3, 4, 5)])
    for _ in range(10):
        relabel = list(range(1, 6))
        rng.shuffle(relabel)
        moved = Hypergraph.from_edges(
            5, 3, [tuple(sorted(relabel[v - 1] for v in e)) for e in base.edges]
        )
        assert canonical_form(moved) == canonical_form(base)
    # different degree multiset, so no relabeling can match
    other = Hypergraph.from_edges(5, 3, [(1, 2, 3), (1, 4, 5), (2, 4, 5)])
    assert canonical_form(other) != canonical_form(base)


def test_canonical_form_cap():
    with pytest.raises(CapExceeded):
        canonical_form(Hypergraph.empty(12, 3), cap=10)


def test_is_isomorphic_finds_mappings():
    base = Hypergraph.from_edges(5, 3, [(1, 2, 3), (2, 3, 4), (3, 4, 5)])
    ident = is_isomorphic(base, base)
    assert ident is not None
    relabel = [3, 1, 4, 5, 2]
    moved = Hypergraph.from_edges(
        5, 3, [tuple(sorted(relabel[v - 1] for v in e)) for e in base.edges]
    )
    images = is_isomorphic(base, moved)
    assert images is not None
    mapped = {
        tuple(sorted(images[v - 1] for v in e)) for e in base.edges
    }
    assert mapped == set(moved.edges)
    sparse = Hypergraph.from_edges(5, 3, [(1, 2, 3), (2, 3, 4)])
    assert is_isomorphic(base, sparse) is None


def test_is_isomorphic_agrees_with_canonical_form():
    all_n4 = list(enumerate_all(4, 3))
    assert len(all_n4) == 16
    for g in all_n4:
        for h in all_n4:
            via_canon = canonical_form(g) == canonical_form(h)
            via_search = is_isomorphic(g, h) is not None
            assert via_canon == via_search


def test_enumerate_all():
    assert len(list(enumerate_all(4, 3))) == 16
    classes = list(enumerate_all(4, 3, up_to_iso=True))
    assert len(classes) == 5
    assert len(list(enumerate_all(5, 4))) == 32
    two_edges = list(enumerate_all(4, 3, edge_count=2))
    assert len(two_edges) == comb(4, 2)
    assert all(g.edge_count == 2 for g in two_edges)
    with pytest.raises(CapExceeded):
        list(enumerate_all(12, 3))  # 220 subsets exceeds the default cap


def test_format_round_trip():
    h = Hypergraph.from_edges(5, 3, [(1, 2, 3), (2, 4, 5)])
    text = format_hypergraph(h)
    assert parse_hypergraph(text).edges == h.edges
    assert parse_hypergraph(text).n == 5
    empty = Hypergraph.empty(4, 2)
    assert parse_hypergraph(format_hypergraph(empty)).edges == frozenset()


def test_parse_accepts_comments_and_blank_lines():
    text = "# header comment\n\n5 3\n1 2 3\n\n# trailing\n2 4 5\n"
    h = parse_hypergraph(text)
    assert h.n == 5 and h.k == 3
    assert h.edges == frozenset({(1, 2, 3), (2, 4, 5)})


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as info:
        parse_hypergraph("")
    assert "header" in str(info.value)

    with pytest.raises(ParseError) as info:
        parse_hypergraph("5\n")
    assert str(info.value).startswith("line 1:")

    with pytest.raises(ParseError) as info:
        parse_hypergraph("5 3\n1 2\n")
    assert str(info.value).startswith("line 2:")

    with pytest.raises(ParseError) as info:
        parse_hypergraph("5 3\n1 2 x\n")
    assert str(info.value).startswith("line 2:")

    with pytest.raises(ParseError) as info:
        parse_hypergraph("5 3\n3 2 1\n")  # vertices must ascend
    assert str(info.value).startswith("line 2:")

    with pytest.raises(ParseError) as info:
        parse_hypergraph("5 3\n1 2 3\n1 2 3\n")  # duplicate edge
    assert str(info.value).startswith("line 3:")

    with pytest.raises(ParseError) as info:
        parse_hypergraph("5 3\n1 2 9\n")  # out of range
    assert str(info.value).startswith("line 2:")
