from __future__ import annotations

from itertools import combinations

import pytest

from satforge import Graph, enumerate_saturated, from_edges


def naive_clique_count(g: Graph, r: int) -> int:
    """Independent oracle: test every r-subset directly."""
    if r == 1:
        return g.n
    return sum(
        1
        for sub in combinations(range(g.n), r)
        if all(g.has_edge(u, v) for u, v in combinations(sub, 2))
    )


def naive_is_saturated(g: Graph, s: int) -> bool:
    """Definition oracle: free, and every added edge creates a K_s
    through both endpoints."""
    if naive_clique_count(g, s) > 0:
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            grown = g.with_edge(u, v)
            hit = any(
                u in sub and v in sub
                for sub in combinations(range(g.n), s)
                if all(grown.has_edge(a, b) for a, b in combinations(sub, 2))
            )
            if not hit:
                return False
    return True


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


@pytest.fixture(scope="session")
def sat4_families():
    """K_4-saturated representatives by order, shared across the suite."""
    return {n: list(enumerate_saturated(n, 4)) for n in (5, 6, 7, 8)}


@pytest.fixture(scope="session")
def sat3_families():
    return {n: list(enumerate_saturated(n, 3)) for n in (5, 6, 7)}
