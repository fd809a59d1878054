"""Canonical labeling for small graphs.

Equitable-partition refinement plus individualization backtracking, with
orbit pruning from automorphisms discovered along the way (two leaves of
the search tree that encode the same labeled adjacency string witness an
automorphism).  Exact for every order it accepts; the n <= 12 gate is a
contract guard, not an algorithmic limit, and callers that really want
larger graphs can pass allow_large=True and accept the running time.

The canonical form of a graph is the graph6 encoding of its canonically
relabeled copy, so equal byte strings mean isomorphic graphs and the
bytes remain readable by standard tools.
"""

from __future__ import annotations

from .graph import Graph, to_graph6

EXACT_CAP = 12


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbour counts per cell."""
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        split = False
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sigs: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                sigs.setdefault(sig, []).append(v)
            if len(sigs) == 1:
                out.append(cell)
            else:
                split = True
                for sig in sorted(sigs):
                    out.append(sigs[sig])
        cells = out
        if not split:
            return cells


def _adj_key(adj: tuple[int, ...], order: list[int]) -> int:
    """Upper-triangle adjacency bits of the relabeled graph as one int."""
    n = len(order)
    key = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            key = key << 1 | (row >> order[j] & 1)
    return key


class _Search:
    __slots__ = ("adj", "n", "best_key", "best_order", "leaves", "gens")

    def __init__(self, adj: tuple[int, ...], n: int):
        self.adj = adj
        self.n = n
        self.best_key: int | None = None
        self.best_order: list[int] | None = None
        self.leaves: dict[int, list[int]] = {}
        self.gens: list[tuple[int, ...]] = []

    def run(self) -> list[int]:
        cells = _refine(self.adj, [list(range(self.n))])
        self._descend(cells, ())
        assert self.best_order is not None
        return self.best_order

    def _descend(self, cells: list[list[int]], fixed: tuple[int, ...]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            self._leaf([c[0] for c in cells])
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if self._orbit_seen(v, tried, fixed):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            branch = cells[:target] + [[v], rest] + cells[target + 1 :]
            self._descend(_refine(self.adj, branch), fixed + (v,))

    def _leaf(self, order: list[int]) -> None:
        key = _adj_key(self.adj, order)
        if self.best_key is None or key < self.best_key:
            self.best_key = key
            self.best_order = order
        seen = self.leaves.get(key)
        if seen is None:
            self.leaves[key] = order
            return
        # equal keys: seen[i] -> order[i] transports the graph onto itself
        perm = [0] * self.n
        for a, b in zip(order, seen):
            perm[a] = b
        tperm = tuple(perm)
        if any(p != i for i, p in enumerate(tperm)) and tperm not in self.gens:
            self.gens.append(tperm)

    def _orbit_seen(self, v: int, tried: list[int], fixed: tuple[int, ...]) -> bool:
        """Is v in the orbit of an already-tried vertex, under generators
        fixing the individualized prefix pointwise?"""
        if not tried or not self.gens:
            return False
        gens = [g for g in self.gens if all(g[p] == p for p in fixed)]
        if not gens:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            w = frontier.pop()
            for g in gens:
                img = g[w]
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        return any(t in orbit for t in tried)


def canonical_order(g: Graph, *, allow_large: bool = False) -> list[int]:
    """A labeling order such that relabeled graphs of isomorphic inputs
    coincide; order[i] is the old vertex placed at position i."""
    if g.n > EXACT_CAP and not allow_large:
        raise ValueError(
            f"canonical labeling capped at n={EXACT_CAP}; "
            "pass allow_large=True to run anyway"
        )
    if g.n == 1:
        return [0]
    return _Search(g.adj, g.n).run()


def canonical_graph(g: Graph, *, allow_large: bool = False) -> Graph:
    return g.relabeled(canonical_order(g, allow_large=allow_large))


def canonical_form(g: Graph, *, allow_large: bool = False) -> bytes:
    """Canonical byte string: graph6 of the canonically relabeled graph."""
    return to_graph6(canonical_graph(g, allow_large=allow_large))


def are_isomorphic(g: Graph, h: Graph, *, allow_large: bool = False) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    return canonical_form(g, allow_large=allow_large) == canonical_form(
        h, allow_large=allow_large
    )
