"""Exhaustive small-order computation of saturation minima.

Graphs are generated one representative per isomorphism class by
level-wise vertex extension: every class on k+1 vertices arises from a
class on k vertices plus one new vertex, so extending each representative
by every neighbourhood subset and deduplicating on canonical form covers
the space exactly once.  Branches that already contain the forbidden
clique are discarded immediately (freeness is hereditary); saturation and
degree filters run at the leaves only, where they are meaningful.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace

from .canon import canonical_form
from .graph import (
    Graph,
    _has_in,
    count_cliques,
    has_clique_in,
    is_saturated,
    min_degree,
)

EXHAUSTIVE_CAP = 10


class BudgetExceeded(Exception):
    """Internal signal: stop expanding, report non-exhaustive."""


@dataclass(frozen=True)
class SearchQuery:
    n: int
    r: int
    s: int
    t: int | None = None
    exact_degree: bool = True
    budget: int | None = None  # max child expansions; None = unlimited
    shard: tuple[int, int] | None = None  # (index, count)
    shard_depth: int = 5

    def __post_init__(self):
        if not 2 <= self.r < self.s:
            raise ValueError("need 2 <= r < s")
        if self.n < self.s:
            raise ValueError("need n >= s")
        if self.t is not None and self.t < self.s - 2:
            raise ValueError("need t >= s - 2 (saturated graphs force it)")
        if self.shard is not None:
            idx, cnt = self.shard
            if not 0 <= idx < cnt:
                raise ValueError("shard index out of range")


@dataclass(frozen=True)
class SearchReport:
    query: SearchQuery
    minimum: int | None  # None = infeasible
    extremal: tuple[bytes, ...]  # canonical graph6 forms attaining the minimum
    explored: dict[str, int] = field(compare=False, hash=False, default_factory=dict)
    exhaustive: bool = True

    @property
    def infeasible(self) -> bool:
        """No graph meets the constraints; only claimable after a full run."""
        return self.minimum is None and self.exhaustive


# -- isomorph-free generation ----------------------------------------------


def _seed_graph() -> Graph:
    return Graph(1, [0])


def _extensions(g: Graph, clique_free: int | None, counter: dict[str, int],
                budget: int | None):
    """All one-vertex extensions of g, pruned for forbidden cliques."""
    for mask in range(1 << g.n):
        if budget is not None and counter["candidates"] >= budget:
            raise BudgetExceeded
        counter["candidates"] += 1
        if clique_free is not None and has_clique_in(g, mask, clique_free - 1):
            continue  # the new vertex would close a K_s
        yield g.with_vertex(mask)


def _grow_level(
    reps: list[Graph],
    clique_free: int | None,
    counter: dict[str, int],
    budget: int | None,
) -> list[Graph]:
    out: dict[bytes, Graph] = {}
    for g in reps:
        for child in _extensions(g, clique_free, counter, budget):
            key = canonical_form(child)
            if key not in out:
                out[key] = child
    counter["classes"] += len(out)
    return list(out.values())


def enumerate_graphs(
    n: int, *, clique_free: int | None = None, counter: dict[str, int] | None = None
) -> list[Graph]:
    """One representative per isomorphism class of order n (optionally
    K_s-free).  Deterministic order."""
    counter = counter if counter is not None else {"candidates": 0, "classes": 0}
    reps = [_seed_graph()]
    for _ in range(n - 1):
        reps = _grow_level(reps, clique_free, counter, None)
    return reps


def enumerate_saturated(
    n: int,
    s: int,
    t: int | None = None,
    *,
    exact_degree: bool = True,
    allow_nonexhaustive: bool = False,
    counter: dict[str, int] | None = None,
):
    """Yield one representative per class of K_s-saturated graph of order
    n meeting the degree filter.  Every yield re-verifies saturation."""
    if n > EXHAUSTIVE_CAP and not allow_nonexhaustive:
        raise ValueError(
            f"exhaustive enumeration capped at n={EXHAUSTIVE_CAP}; "
            "pass allow_nonexhaustive=True to push past it"
        )
    counter = counter if counter is not None else {"candidates": 0, "classes": 0}
    reps = [_seed_graph()]
    for _ in range(n - 1):
        reps = _grow_level(reps, s, counter, None)
    for g in reps:
        if not is_saturated(g, s):
            continue
        if t is not None:
            d = min_degree(g)
            if exact_degree and d != t:
                continue
            if not exact_degree and d < t:
                continue
        yield g


# -- saturation minima -------------------------------------------------------


def _finish(query: SearchQuery, reps: list[Graph], counter: dict[str, int],
            exhaustive: bool) -> SearchReport:
    best: int | None = None
    extremal: dict[bytes, None] = {}
    found = 0
    for g in reps:
        if not is_saturated(g, query.s):
            continue
        if query.t is not None:
            d = min_degree(g)
            if query.exact_degree and d != query.t:
                continue
            if not query.exact_degree and d < query.t:
                continue
        found += 1
        value = count_cliques(g, query.r)
        if best is None or value < best:
            best = value
            extremal = {canonical_form(g): None}
        elif value == best:
            extremal[canonical_form(g)] = None
    counter["saturated"] = counter.get("saturated", 0) + found
    return SearchReport(
        query,
        best,
        tuple(sorted(extremal)),
        dict(counter),
        exhaustive,
    )


def sat_value(query: SearchQuery) -> SearchReport:
    """Minimum K_r count over the constrained K_s-saturated family.

    Exhaustive unless the budget runs out first (then exhaustive=False
    and the partial minimum is still reported).  A shard (i, k) restricts
    growth to every k-th representative at the shard depth; merging all
    shards reproduces the unsharded result.
    """
    if query.n > EXHAUSTIVE_CAP:
        raise ValueError(f"search capped at n={EXHAUSTIVE_CAP}")
    counter = {"candidates": 0, "classes": 0}
    depth = min(query.shard_depth, query.n)
    reps = [_seed_graph()]
    exhaustive = True
    try:
        for _ in range(depth - 1):
            reps = _grow_level(reps, query.s, counter, query.budget)
        if query.shard is not None:
            idx, cnt = query.shard
            reps = reps[idx::cnt]
        for _ in range(query.n - depth):
            reps = _grow_level(reps, query.s, counter, query.budget)
    except BudgetExceeded:
        exhaustive = False
        reps = []
    return _finish(query, reps, counter, exhaustive)


def split_work(query: SearchQuery, shards: int) -> list[SearchQuery]:
    """Independent sub-queries partitioning the extension tree by shard
    slices at the fixed shard depth."""
    if shards < 1:
        raise ValueError("need at least one shard")
    if query.shard is not None:
        raise ValueError("query is already sharded")
    if shards == 1:
        return [query]
    return [replace(query, shard=(i, shards)) for i in range(shards)]


def merge_reports(reports: list[SearchReport]) -> SearchReport:
    """Fold shard reports: minimum of minima, union of extremal forms."""
    if not reports:
        raise ValueError("nothing to merge")
    base = reports[0].query
    query = replace(base, shard=None)
    best: int | None = None
    for rep in reports:
        if rep.minimum is not None and (best is None or rep.minimum < best):
            best = rep.minimum
    extremal: set[bytes] = set()
    explored: dict[str, int] = {}
    for rep in reports:
        if rep.minimum == best and best is not None:
            extremal.update(rep.extremal)
        for k, v in rep.explored.items():
            explored[k] = explored.get(k, 0) + v
    return SearchReport(
        query,
        best,
        tuple(sorted(extremal)),
        explored,
        all(rep.exhaustive for rep in reports),
    )


# -- randomized saturation (smoke testing only) ------------------------------


def random_saturated_graph(n: int, s: int, rng: random.Random) -> Graph:
    """Greedy random maximal K_s-free graph: one shuffled pass over all
    pairs, adding an edge whenever it closes no K_s.  Maximal K_s-free is
    exactly K_s-saturated, and rejection is permanent under growth, so a
    single pass suffices."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    adj = [0] * n
    for u, v in pairs:
        # adding uv closes a K_s iff the common neighbourhood has a K_{s-2}
        if _has_in(adj, adj[u] & adj[v], s - 2):
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)
