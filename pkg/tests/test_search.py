from __future__ import annotations

import random

import pytest

from satforge import (
    SearchQuery,
    canonical_form,
    complete_graph,
    count_cliques,
    cycle_graph,
    ehm,
    empty_graph,
    enumerate_graphs,
    enumerate_saturated,
    is_saturated,
    join,
    merge_reports,
    min_degree,
    random_saturated_graph,
    sat_value,
    split_work,
)


def test_census_validates_generation_core():
    for n, expect in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)]:
        assert len(enumerate_graphs(n)) == expect


def test_enumerate_saturated_membership():
    forms5 = {canonical_form(g) for g in enumerate_saturated(5, 3)}
    assert canonical_form(cycle_graph(5)) in forms5
    assert canonical_form(join(complete_graph(1), empty_graph(4))) in forms5
    forms6 = {canonical_form(g) for g in enumerate_saturated(6, 4)}
    assert canonical_form(ehm(4, 6).graph) in forms6


def test_enumerate_saturated_yields_verify(sat4_families):
    for n, family in sat4_families.items():
        forms = set()
        for g in family:
            assert g.n == n
            assert is_saturated(g, 4)
            forms.add(canonical_form(g))
        assert len(forms) == len(family)  # one representative per class


def test_enumerate_degree_filters():
    exact = list(enumerate_saturated(7, 4, t=3))
    at_least = list(enumerate_saturated(7, 4, t=3, exact_degree=False))
    assert all(min_degree(g) == 3 for g in exact)
    assert all(min_degree(g) >= 3 for g in at_least)
    assert len(at_least) > len(exact)


def test_enumerate_cap():
    with pytest.raises(ValueError):
        list(enumerate_saturated(11, 4))


def test_query_validation():
    with pytest.raises(ValueError):
        SearchQuery(5, 3, 3)
    with pytest.raises(ValueError):
        SearchQuery(3, 3, 4)
    with pytest.raises(ValueError):
        SearchQuery(6, 3, 4, t=1)


def test_sat_values_small():
    rep = sat_value(SearchQuery(5, 2, 3))
    assert rep.minimum == 4
    assert rep.extremal == (canonical_form(ehm(3, 5).graph),)
    rep = sat_value(SearchQuery(7, 3, 4))
    assert rep.minimum == 5
    assert rep.extremal == (canonical_form(ehm(4, 7).graph),)
    rep = sat_value(SearchQuery(7, 2, 3, t=2))
    assert rep.minimum == 9


def test_extremal_graphs_reverify():
    from satforge import from_graph6

    for query in (SearchQuery(6, 3, 4), SearchQuery(7, 2, 3, t=2)):
        rep = sat_value(query)
        assert rep.extremal
        for form in rep.extremal:
            g = from_graph6(form)
            assert is_saturated(g, query.s)
            if query.t is not None:
                assert min_degree(g) == query.t
            assert count_cliques(g, query.r) == rep.minimum


def test_sat_value_infeasible():
    rep = sat_value(SearchQuery(6, 3, 4, t=5))
    assert rep.infeasible and rep.minimum is None and rep.extremal == ()


def test_budget_flags_nonexhaustive():
    rep = sat_value(SearchQuery(7, 3, 4, budget=40))
    assert not rep.exhaustive


def test_split_work_identity_and_merge():
    q = SearchQuery(7, 3, 4)
    assert split_work(q, 1) == [q]
    whole = sat_value(q)
    merged = merge_reports([sat_value(sq) for sq in split_work(q, 4)])
    assert merged.minimum == whole.minimum
    assert merged.extremal == whole.extremal
    assert merged.exhaustive
    with pytest.raises(ValueError):
        split_work(q, 0)


def test_split_work_more_shards_than_prefixes():
    q = SearchQuery(5, 2, 3, shard_depth=2)
    merged = merge_reports([sat_value(sq) for sq in split_work(q, 9)])
    assert merged.minimum == 4


def test_constructions_never_beat_search():
    # exhaustive minima are true minima over the family
    rep = sat_value(SearchQuery(7, 3, 4))
    assert count_cliques(ehm(4, 7).graph, 3) >= rep.minimum
    rep2 = sat_value(SearchQuery(6, 2, 3))
    assert ehm(3, 6).graph.edge_count() >= rep2.minimum


def test_random_saturated_graph():
    rng = random.Random(3)
    for _ in range(25):
        g = random_saturated_graph(12, 4, rng)
        assert is_saturated(g, 4)
    # deterministic under a fixed seed
    a = random_saturated_graph(10, 4, random.Random(9))
    b = random_saturated_graph(10, 4, random.Random(9))
    assert a == b
