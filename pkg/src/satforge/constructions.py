"""Deterministic builders for the named saturated-graph families.

Each builder returns a LabeledGraph: the graph plus named vertex classes
so downstream verification can address the pieces (sides A/B, padding
classes X/Y, blow-up positions, gadget vertices) without re-deriving
them.  Vertex order inside every builder is fixed, so repeated runs are
bit-identical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, complete_graph, empty_graph, from_edges, join
from .support import SupportStructure, complete_to_support, padding_plan, assemble


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: dict[str, frozenset[int]]

    def label(self, name: str) -> frozenset[int]:
        return self.labels[name]


# -- join families -------------------------------------------------------


def ehm(s: int, n: int) -> LabeledGraph:
    """K_{s-2} joined to an independent set of n-s+2 vertices.

    The unique edge-minimum K_s-saturated graph; minimum degree s-2.
    """
    if s < 3:
        raise ValueError("requires s >= 3")
    if n < s:
        raise ValueError("requires n >= s")
    g = join(complete_graph(s - 2), empty_graph(n - s + 2))
    return LabeledGraph(
        g,
        {
            "clique": frozenset(range(s - 2)),
            "independent": frozenset(range(s - 2, n)),
        },
    )


def w_graph(s: int, m1: int, m3: int, m4: int) -> LabeledGraph:
    """Blown-up 5-wheel: hub clique of s-3 vertices joined to a 5-cycle
    whose positions 1, 3, 4 are independent sets of sizes m1, m3, m4.

    K_s-saturated with minimum degree s-1.  s = 3 (empty hub) degenerates
    to a blown-up 5-cycle; w_graph(3, 1, 1, 1) is C_5.
    """
    if s < 3:
        raise ValueError("requires s >= 3")
    if min(m1, m3, m4) < 1:
        raise ValueError("requires m1, m3, m4 >= 1")
    hub = s - 3
    sizes = [m1, 1, m3, m4, 1]
    starts = []
    base = hub
    for size in sizes:
        starts.append(base)
        base += size
    n = base
    parts = [frozenset(range(starts[i], starts[i] + sizes[i])) for i in range(5)]
    edges = []
    for h in range(hub):
        for v in range(h + 1, n):
            edges.append((h, v))
    for i in range(5):
        for u in parts[i]:
            for v in parts[(i + 1) % 5]:
                edges.append((u, v))
    g = from_edges(n, edges)
    labels = {"hub": frozenset(range(hub))}
    for i, part in enumerate(parts):
        labels[f"a{i + 1}"] = part
    return LabeledGraph(g, labels)


# -- support-structure families -------------------------------------------


def _pipeline(core: Graph, a_count: int, s: int, t: int, n: int,
              extra_labels: dict[str, frozenset[int]] | None = None) -> LabeledGraph:
    """Complete the core, plan padding, assemble, reattach sub-labels."""
    ss = SupportStructure(
        core,
        frozenset(range(a_count)),
        frozenset(range(a_count, core.n)),
        s,
    )
    done = complete_to_support(ss)
    plan = padding_plan(done, t, n)
    built = assemble(done, plan)
    if extra_labels:
        labels = dict(built.labels)
        labels.update(extra_labels)
        built = LabeledGraph(built.graph, labels)
    return built


H_CORE_TRIPLES = ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))


def h_core() -> Graph:
    """The 8-vertex core of the H family: a_1..a_4 then b_123..b_234."""
    edges = [(0, 1), (2, 3)]
    # 4-cycle on the b's: b_123 b_234, b_234 b_124, b_124 b_134, b_134 b_123
    b = {trip: 4 + i for i, trip in enumerate(H_CORE_TRIPLES)}
    cyc = [(1, 2, 3), (2, 3, 4), (1, 2, 4), (1, 3, 4)]
    edges += [(b[cyc[i]], b[cyc[(i + 1) % 4]]) for i in range(4)]
    for trip, bv in b.items():
        for r in trip:
            edges.append((r - 1, bv))
    return from_edges(8, edges)


def h_graph(t: int, n: int) -> LabeledGraph:
    """K_4-saturated, minimum degree t, exactly 2n + 2t - 12 triangles."""
    if t < 4:
        raise ValueError("requires t >= 4")
    if n <= 2 * t:
        raise ValueError("requires n > 2t")
    return _pipeline(h_core(), 4, 4, t, n)


def f_core(s: int) -> Graph:
    """Two complete (s-2)-partite sides with parts of size 2, a_i seeing
    the s-2 cyclically consecutive b's starting at its own index."""
    k = 2 * (s - 2)
    edges = []
    for side in (0, k):
        for i in range(k):
            for j in range(i + 1, k):
                if (i - j) % k != s - 2:
                    edges.append((side + i, side + j))
    for i in range(k):
        for off in range(s - 2):
            edges.append((i, k + (i + off) % k))
    return from_edges(2 * k, edges)


def f_graph(s: int, t: int, n: int) -> LabeledGraph:
    """K_s-saturated with minimum degree t; adding one vertex to the
    order adds binom(s-2, r-1) * 2^(r-1) copies of K_r."""
    if s <= 3:
        raise ValueError("requires s > 3")
    if t < 2 * (s - 2) + 1:
        raise ValueError("requires t >= 2(s-2)+1")
    if n < 2 * (s - 2) + 2 * t:
        raise ValueError("requires n >= 2(s-2)+2t")
    return _pipeline(f_core(s), 2 * (s - 2), s, t, n)


# Parallel line classes of the order-3 affine plane on points 1..9
# (3x3 grid: columns, diagonals, anti-diagonals; rows are not used).
R_LINE_CLASSES = (
    ((1, 4, 7), (2, 5, 8), (3, 6, 9)),
    ((1, 5, 9), (2, 6, 7), (3, 4, 8)),
    ((1, 6, 8), (2, 4, 9), (3, 5, 7)),
)


def r_core() -> Graph:
    """9 line-vertices in three triangles, 27 point-vertices in nine.

    a_{ijk} of class c is joined to the triangles of its three points and
    to the c-th vertex of every point triangle.
    """
    edges = []
    line_index = {}
    idx = 0
    for cls, lines in enumerate(R_LINE_CLASSES):
        for line in lines:
            line_index[line] = (idx, cls)
            idx += 1
    for cls in range(3):
        base = 3 * cls
        edges += [(base, base + 1), (base + 1, base + 2), (base, base + 2)]
    def bvert(point: int, c: int) -> int:
        return 9 + 3 * (point - 1) + c
    for point in range(1, 10):
        trio = [bvert(point, c) for c in range(3)]
        edges += [(trio[0], trio[1]), (trio[1], trio[2]), (trio[0], trio[2])]
    for line, (av, cls) in line_index.items():
        for point in line:
            for c in range(3):
                edges.append((av, bvert(point, c)))
        for point in range(1, 10):
            edges.append((av, bvert(point, cls)))
    return from_edges(36, edges)


def r_graph(t: int, n: int) -> LabeledGraph:
    """K_5-saturated with minimum degree t; 9 new triangles per vertex."""
    if t < 10:
        raise ValueError("requires t >= 10")
    if n <= 2 * t + 12:
        raise ValueError("requires n > 2t + 12")
    extra: dict[str, frozenset[int]] = {}
    for cls in range(3):
        extra[f"A_{cls + 1}"] = frozenset(range(3 * cls, 3 * cls + 3))
    for point in range(1, 10):
        extra[f"B_{point}"] = frozenset(range(9 + 3 * (point - 1), 9 + 3 * point))
    return _pipeline(r_core(), 9, 5, t, n, extra)


# -- case-analysis gadgets -------------------------------------------------

# Each gadget: the edge pattern inside N(x) (position pairs on 1..4), the
# trace-labelled extra vertices, and the forced/named edges among them.
# Vertex order: x, x1..x4, then the y's in listed order.
_GADGETS: dict[str, tuple[tuple[tuple[int, int], ...], tuple[tuple[str, tuple[int, ...]], ...], tuple[tuple[str, str], ...]]] = {
    "G1": (
        ((1, 2), (3, 4)),
        (("y123", (1, 2, 3)), ("y124", (1, 2, 4)), ("y134", (1, 3, 4)), ("y234", (2, 3, 4))),
        (("y123", "y134"), ("y123", "y234"), ("y124", "y134"), ("y124", "y234")),
    ),
    "G2": (
        ((1, 2), (2, 3), (3, 4)),
        (("y23", (2, 3)), ("z124", (1, 2, 4)), ("z134", (1, 3, 4))),
        (("y23", "z124"), ("y23", "z134"), ("z124", "z134")),
    ),
    "G3": (
        ((1, 2), (2, 3), (3, 4)),
        (("y23", (2, 3)), ("z124", (1, 2, 4)), ("z124p", (1, 2, 4)), ("z234", (2, 3, 4))),
        (("y23", "z124"), ("y23", "z124p"), ("z124", "z234"), ("z124p", "z234")),
    ),
    "G4": (
        ((1, 2), (2, 3), (3, 4)),
        (("y123", (1, 2, 3)), ("y124", (1, 2, 4)), ("y134", (1, 3, 4)), ("y234", (2, 3, 4))),
        (("y123", "y134"), ("y124", "y134"), ("y124", "y234")),
    ),
    "G5": (
        ((1, 2), (2, 3), (3, 4)),
        (("y123", (1, 2, 3)), ("y134", (1, 3, 4))),
        (("y123", "y134"),),
    ),
    "G6": (
        ((1, 2), (2, 3), (3, 4)),
        (("y124", (1, 2, 4)), ("y134", (1, 3, 4))),
        (("y124", "y134"),),
    ),
    "G7": (
        ((1, 2), (2, 3), (3, 4), (4, 1)),
        (("y123", (1, 2, 3)), ("y134", (1, 3, 4))),
        (("y123", "y134"),),
    ),
    "G8": (
        ((1, 2), (2, 3), (3, 4), (4, 1)),
        (("y123", (1, 2, 3)), ("y234", (2, 3, 4)), ("y134", (1, 3, 4)), ("y124", (1, 2, 4))),
        (("y123", "y134"), ("y124", "y234")),
    ),
    "G9": (
        ((1, 2), (2, 3), (3, 4), (4, 1)),
        (("y12", (1, 2)), ("y234", (2, 3, 4)), ("y134", (1, 3, 4))),
        (("y12", "y134"), ("y12", "y234")),
    ),
    "G10": (
        ((1, 2), (2, 3), (3, 4), (4, 1)),
        (("y12", (1, 2)), ("y23", (2, 3)), ("y134", (1, 3, 4))),
        (("y12", "y23"), ("y12", "y134"), ("y23", "y134")),
    ),
    "G11": (
        ((1, 2), (2, 3), (3, 4), (4, 1)),
        (("y12", (1, 2)), ("y34", (3, 4)), ("y134", (1, 3, 4)), ("y234", (2, 3, 4)),
         ("y123", (1, 2, 3)), ("y124", (1, 2, 4))),
        (("y12", "y134"), ("y12", "y234"), ("y34", "y123"), ("y34", "y124"),
         ("y123", "y134"), ("y124", "y234")),
    ),
    "G12": (
        ((1, 2), (2, 3), (3, 4), (4, 1)),
        (("y12", (1, 2)), ("y23", (2, 3)), ("y34", (3, 4)), ("y124", (1, 2, 4))),
        (("y12", "y23"), ("y23", "y34"), ("y12", "y34"), ("y124", "y23"), ("y124", "y34")),
    ),
}

APPENDIX_IDS = tuple(_GADGETS)


def appendix_graph(gid: str) -> LabeledGraph:
    """One of the twelve case-analysis gadgets G1..G12.

    These are induced subgraphs appearing in the degree-4 neighbourhood
    case analysis, not themselves saturated; only their triangle
    inventories are meaningful.
    """
    if gid not in _GADGETS:
        raise ValueError(f"unknown gadget id {gid!r}; valid: {', '.join(_GADGETS)}")
    nx_pairs, yspecs, yedges = _GADGETS[gid]
    names = ["x", "x1", "x2", "x3", "x4"] + [name for name, _ in yspecs]
    index = {name: i for i, name in enumerate(names)}
    edges = [(0, i) for i in range(1, 5)]
    edges += [(i, j) for i, j in nx_pairs]
    for name, trace in yspecs:
        edges += [(index[name], i) for i in trace]
    edges += [(index[a], index[b]) for a, b in yedges]
    g = from_edges(len(names), edges)
    labels = {name: frozenset({i}) for name, i in index.items()}
    return LabeledGraph(g, labels)
