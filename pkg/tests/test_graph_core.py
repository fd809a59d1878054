from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satforge import (
    Graph,
    common_neighborhood,
    complete_graph,
    count_cliques,
    cycle_graph,
    empty_graph,
    from_edges,
    from_graph6,
    is_clique_free,
    is_saturated,
    join,
    min_degree,
    path_graph,
    to_dot,
    to_graph6,
    triangles_per_edge,
)
from satforge.graph import bits

from conftest import naive_clique_count, naive_is_saturated, petersen


@st.composite
def small_graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return from_edges(n, sorted(chosen))


def test_from_edges_basics():
    tri = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert tri == complete_graph(3)
    assert from_edges(2, []).edge_count() == 0
    dup = from_edges(4, [(0, 1), (1, 0)])
    assert dup.edge_count() == 1


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(0, [])


def test_count_cliques_examples():
    assert count_cliques(complete_graph(5), 3) == 10
    assert count_cliques(join(complete_graph(2), empty_graph(8)), 3) == 8
    assert count_cliques(petersen(), 3) == 0
    assert count_cliques(complete_graph(4), 1) == 4
    assert count_cliques(cycle_graph(6), 2) == 6
    assert count_cliques(complete_graph(3), 7) == 0  # r > n


def test_count_cliques_rejects_bad_order():
    with pytest.raises(ValueError):
        count_cliques(complete_graph(3), 0)


@settings(max_examples=150, deadline=None)
@given(small_graphs(), st.integers(min_value=2, max_value=5))
def test_count_cliques_matches_enumeration(g, r):
    assert count_cliques(g, r) == naive_clique_count(g, r)


def test_count_cliques_matches_enumeration_order_ten():
    rng = random.Random(17)
    samples = [petersen()]
    for n in (9, 10):
        for p in (0.3, 0.6):
            edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < p
            ]
            samples.append(from_edges(n, edges))
    for g in samples:
        for r in (2, 3, 4, 5):
            assert count_cliques(g, r) == naive_clique_count(g, r)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=7), st.integers(min_value=2, max_value=4))
def test_count_cliques_monotone_under_edge_addition(g, r):
    non_edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    for u, v in non_edges:
        assert count_cliques(g.with_edge(u, v), r) >= count_cliques(g, r)


def test_is_clique_free():
    assert is_clique_free(cycle_graph(5), 3)
    assert not is_clique_free(complete_graph(4), 4)


def test_is_saturated_examples():
    assert is_saturated(join(complete_graph(3), empty_graph(6)), 5)
    assert is_saturated(cycle_graph(5), 3)
    assert not is_saturated(path_graph(4), 3)


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_n=6), st.integers(min_value=3, max_value=5))
def test_saturation_matches_definition_oracle(g, s):
    assert is_saturated(g, s) == naive_is_saturated(g, s)


def test_min_degree():
    assert min_degree(join(complete_graph(2), empty_graph(8))) == 2
    assert min_degree(empty_graph(3)) == 0


def test_common_neighborhood():
    k4 = complete_graph(4)
    assert sorted(bits(common_neighborhood(k4, 0, 1))) == [2, 3]
    c5 = cycle_graph(5)
    assert common_neighborhood(c5, 0, 1) == 0
    book = join(complete_graph(2), empty_graph(8))
    assert sorted(bits(common_neighborhood(book, 2, 3))) == [0, 1]
    with pytest.raises(ValueError):
        common_neighborhood(k4, 2, 2)


def test_triangles_per_edge():
    k4 = complete_graph(4)
    assert set(triangles_per_edge(k4).values()) == {2}
    assert set(triangles_per_edge(cycle_graph(5)).values()) == {0}
    book = join(complete_graph(2), empty_graph(8))
    tpe = triangles_per_edge(book)
    assert tpe[(0, 1)] == 8
    assert all(c == 1 for e, c in tpe.items() if e != (0, 1))


@settings(max_examples=80, deadline=None)
@given(small_graphs())
def test_triangle_handshake(g):
    assert sum(triangles_per_edge(g).values()) == 3 * count_cliques(g, 3)


def test_join_examples():
    book3 = join(complete_graph(2), empty_graph(3))
    assert book3.n == 5 and book3.edge_count() == 7
    assert count_cliques(book3, 3) == 3
    assert join(empty_graph(1), empty_graph(1)) == complete_graph(2)
    assert join(complete_graph(2), complete_graph(2)) == complete_graph(4)


def test_graph6_roundtrip():
    rng = random.Random(5)
    for n in (1, 2, 7, 30, 62, 63, 100):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.3
        ]
        g = from_edges(n, edges)
        assert from_graph6(to_graph6(g)) == g


def test_graph6_known_strings():
    assert to_graph6(complete_graph(3)) == b"Bw"
    assert to_graph6(path_graph(4)) == b"Ch"
    assert from_graph6(b">>graph6<<Bw") == complete_graph(3)
    with pytest.raises(ValueError):
        from_graph6(b"")


def test_dot_export():
    text = to_dot(complete_graph(3), {"all": frozenset({0, 1, 2})})
    assert "graph G {" in text and "0 -- 1;" in text and "(all)" in text


def test_immutability_helpers():
    g = cycle_graph(4)
    h = g.with_edge(0, 2)
    assert g.edge_count() == 4 and h.edge_count() == 5
    assert h.without_edge(0, 2) == g
    grown = g.with_vertex(0b0011)
    assert grown.n == 5 and grown.degree(4) == 2


def test_vertex_cap():
    assert empty_graph(512).n == 512
    with pytest.raises(ValueError):
        empty_graph(513)
    with pytest.raises(ValueError):
        join(empty_graph(400), empty_graph(200))
