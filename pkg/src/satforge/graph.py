"""Compact simple-graph type with bitset adjacency rows.

Vertices are 0..n-1 and every neighbourhood is a Python int used as a
bitset, so set algebra on neighbourhoods is single AND/OR operations.
Everything downstream (clique counting, saturation testing, the
construction pipelines) works on these masks.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_VERTICES = 512


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of *mask* in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = tuple(adj)
        if len(rows) != n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")
        self.n = n
        self.adj = rows

    # -- basic queries ------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographic."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    # -- derived graphs -----------------------------------------------

    def with_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise ValueError("loop edge")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def without_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def with_vertex(self, neighbor_mask: int = 0) -> Graph:
        """Append vertex n adjacent to the vertices of *neighbor_mask*."""
        rows = list(self.adj)
        for u in bits(neighbor_mask):
            rows[u] |= 1 << self.n
        rows.append(neighbor_mask)
        return Graph(self.n + 1, rows)

    def relabeled(self, order: list[int] | tuple[int, ...]) -> Graph:
        """Relabel so that old vertex order[i] becomes new vertex i."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = [0] * self.n
        for i, v in enumerate(order):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << pos[u]
            rows[i] = row
        return Graph(self.n, rows)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by *vertices*; new labels follow sorted old ones."""
    keep = sorted(set(vertices))
    if not keep:
        raise ValueError("induced subgraph needs at least one vertex")
    pos = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for v in keep:
        for u in bits(g.adj[v]):
            if u in pos:
                rows[pos[v]] |= 1 << pos[u]
    return Graph(len(keep), rows)


# -- constructors ------------------------------------------------------


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph with exactly the given edges; duplicate pairs collapse."""
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge ({u},{v})")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"join would exceed {MAX_VERTICES} vertices")
    hi = ((1 << h.n) - 1) << g.n
    lo = (1 << g.n) - 1
    rows = [g.adj[v] | hi for v in range(g.n)]
    rows += [(h.adj[v] << g.n) | lo for v in range(h.n)]
    return Graph(n, rows)


# -- cliques and saturation --------------------------------------------


def _count_in(adj, mask: int, k: int) -> int:
    if k == 1:
        return mask.bit_count()
    total = 0
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        if m.bit_count() < k - 1:
            # remaining candidates cannot host the rest of the clique
            break
        sub = m & adj[v]
        if sub:
            total += _count_in(adj, sub, k - 1)
    return total


def _has_in(adj, mask: int, k: int) -> bool:
    if k <= 0:
        return True
    if k == 1:
        return mask != 0
    if mask.bit_count() < k:
        return False
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        if _has_in(adj, m & adj[v], k - 1):
            return True
    return False


def count_cliques(g: Graph, r: int) -> int:
    """Exact number of r-vertex cliques (r=1 vertices, r=2 edges)."""
    if r < 1:
        raise ValueError("clique order must be >= 1")
    if r == 1:
        return g.n
    return _count_in(g.adj, g.full_mask(), r)


def has_clique(g: Graph, k: int) -> bool:
    return _has_in(g.adj, g.full_mask(), k)


def has_clique_in(g: Graph, mask: int, k: int) -> bool:
    """Does the subgraph induced by *mask* contain a k-clique?"""
    return _has_in(g.adj, mask, k)


def is_clique_free(g: Graph, s: int) -> bool:
    """True iff g contains no K_s (early-exit search, no full count)."""
    if s < 2:
        raise ValueError("forbidden clique order must be >= 2")
    return not _has_in(g.adj, g.full_mask(), s)


def common_neighborhood(g: Graph, u: int, v: int) -> int:
    """Bitset of common neighbours of two distinct vertices."""
    if u == v:
        raise ValueError("common neighbourhood needs distinct vertices")
    return g.adj[u] & g.adj[v]


def is_saturated(g: Graph, s: int) -> bool:
    """K_s-saturated: K_s-free and every non-edge closes a K_s.

    A new edge uv creates a K_s exactly when the common neighbourhood of
    u and v already holds a K_{s-2}, so no edge is ever actually added.
    """
    if s < 3:
        raise ValueError("saturation test needs clique order >= 3")
    adj = g.adj
    if _has_in(adj, g.full_mask(), s):
        return False
    for u in range(g.n):
        non = ~adj[u] & (g.full_mask() >> (u + 1) << (u + 1)) & ~(1 << u)
        for v in bits(non):
            if not _has_in(adj, adj[u] & adj[v], s - 2):
                return False
    return True


def min_degree(g: Graph) -> int:
    return min(row.bit_count() for row in g.adj)


def triangles_per_edge(g: Graph) -> dict[tuple[int, int], int]:
    """Map each edge uv (u < v) to |N(u) & N(v)|."""
    return {(u, v): (g.adj[u] & g.adj[v]).bit_count() for u, v in g.edges()}


# -- graph6 / DOT -------------------------------------------------------


def to_graph6(g: Graph) -> bytes:
    """Header-less graph6 bytes (>= 63 offset encoding)."""
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    else:
        head = bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    bit_stream = []
    for v in range(1, n):
        col = g.adj[v]
        bit_stream.extend((col >> u) & 1 for u in range(v))
    while len(bit_stream) % 6:
        bit_stream.append(0)
    body = bytearray()
    for i in range(0, len(bit_stream), 6):
        val = 0
        for b in bit_stream[i : i + 6]:
            val = val << 1 | b
        body.append(val + 63)
    return head + bytes(body)


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.strip().encode("ascii")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<") :]
    if not data:
        raise ValueError("empty graph6 input")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise ValueError("unsupported graph6 size encoding")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n < 1 or n > MAX_VERTICES:
        raise ValueError(f"graph6 order {n} outside 1..{MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise ValueError("graph6 body too short")
    stream = []
    for byte in body[:need]:
        val = byte - 63
        if not 0 <= val < 64:
            raise ValueError("graph6 byte out of range")
        stream.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if stream[idx]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    return Graph(n, rows)


def to_dot(g: Graph, labels: dict[str, frozenset[int]] | None = None) -> str:
    """DOT text for visualisation; label sets become vertex annotations."""
    names: dict[int, list[str]] = {}
    if labels:
        for name, verts in sorted(labels.items()):
            for v in verts:
                names.setdefault(v, []).append(name)
    lines = ["graph G {"]
    for v in range(g.n):
        if v in names:
            lines.append(f'  {v} [label="{v} ({",".join(names[v])})"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
