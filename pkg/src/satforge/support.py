"""Support structures: verification, greedy completion, and assembly.

A support structure is a bipartitioned graph (A, B) whose sides are
K_{s-1}-free, whose vertices each see a K_{s-2} on the opposite side,
and which as a whole is K_s-free; the completed form additionally blocks
every missing edge (adding it would force a K_{s-1} inside a side or a
K_s overall).  Attaching independent padding classes X and Y to a
completed structure yields a K_s-saturated graph of prescribed order and
minimum degree; that assembly step is the engine behind the named graph
families in constructions.py.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    Graph,
    count_cliques,
    has_clique_in,
    induced_subgraph,
    is_saturated,
    min_degree,
)


class AssemblyError(RuntimeError):
    """Padding produced a graph violating saturation or the degree target."""


@dataclass(frozen=True)
class SupportStructure:
    graph: Graph
    A: frozenset[int]
    B: frozenset[int]
    s: int

    def __post_init__(self):
        if self.s < 3:
            raise ValueError("clique order s must be >= 3")
        if self.A & self.B:
            raise ValueError("A and B must be disjoint")
        if self.A | self.B != set(range(self.graph.n)):
            raise ValueError("A and B must cover all vertices")
        if not self.A or not self.B:
            raise ValueError("A and B must both be nonempty")

    @property
    def a_mask(self) -> int:
        return sum(1 << v for v in self.A)

    @property
    def b_mask(self) -> int:
        return sum(1 << v for v in self.B)

    def side_min_degree(self, side: frozenset[int]) -> int:
        return min(self.graph.degree(v) for v in side)


@dataclass(frozen=True)
class PreSupportReport:
    """The four defining conditions, evaluated independently."""

    sides_clique_free: bool      # A and B both K_{s-1}-free
    a_neighborhoods_ok: bool     # every a in A: N(a) & B holds a K_{s-2}
    b_neighborhoods_ok: bool     # every b in B: N(b) & A holds a K_{s-2}
    whole_clique_free: bool      # the whole graph is K_s-free
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return (
            self.sides_clique_free
            and self.a_neighborhoods_ok
            and self.b_neighborhoods_ok
            and self.whole_clique_free
        )


@dataclass(frozen=True)
class SupportReport:
    pre: PreSupportReport
    a_side_saturated: bool    # missing A-A edge forces K_{s-1} in A or K_s overall
    b_side_saturated: bool
    cross_saturated: bool     # missing A-B edge forces a K_s
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return (
            self.pre.ok
            and self.a_side_saturated
            and self.b_side_saturated
            and self.cross_saturated
        )


@dataclass(frozen=True)
class PaddingPlan:
    """Sizes of the padding classes for a target order and minimum degree.

    N and M are the raw degree deficits of the two sides; a negative M is
    clamped (no Y vertices) and the slack folds into X.
    """

    N: int
    M: int
    x_count: int
    y_count: int
    t: int
    a_side_bound: str = field(default="", compare=False)  # which min was active for N
    b_side_bound: str = field(default="", compare=False)  # which min was active for M


# -- verification -------------------------------------------------------


def check_pre_support(ss: SupportStructure) -> PreSupportReport:
    g, s = ss.graph, ss.s
    a_mask, b_mask = ss.a_mask, ss.b_mask
    failures: list[str] = []

    sides_free = not has_clique_in(g, a_mask, s - 1) and not has_clique_in(
        g, b_mask, s - 1
    )
    if not sides_free:
        failures.append(f"a side or b side contains K_{s - 1}")

    a_ok = True
    for a in sorted(ss.A):
        if not has_clique_in(g, g.adj[a] & b_mask, s - 2):
            a_ok = False
            failures.append(f"vertex {a} lacks K_{s - 2} in its B-neighbourhood")
    b_ok = True
    for b in sorted(ss.B):
        if not has_clique_in(g, g.adj[b] & a_mask, s - 2):
            b_ok = False
            failures.append(f"vertex {b} lacks K_{s - 2} in its A-neighbourhood")

    whole_free = not has_clique_in(g, g.full_mask(), s)
    if not whole_free:
        failures.append(f"graph contains K_{s}")

    return PreSupportReport(sides_free, a_ok, b_ok, whole_free, tuple(failures))


def _addition_blocked(ss: SupportStructure, u: int, v: int) -> bool:
    """Would adding uv create K_{s-1} inside a side, or a K_s overall?"""
    g, s = ss.graph, ss.s
    common = g.adj[u] & g.adj[v]
    if has_clique_in(g, common, s - 2):
        return True
    a_mask, b_mask = ss.a_mask, ss.b_mask
    uv = 1 << u | 1 << v
    if uv & a_mask == uv and has_clique_in(g, common & a_mask, s - 3):
        return True
    if uv & b_mask == uv and has_clique_in(g, common & b_mask, s - 3):
        return True
    return False


def check_support(ss: SupportStructure) -> SupportReport:
    """Completion fixed point: every missing edge is blocked.

    Inside a side, "blocked" means the new edge would close a K_{s-1}
    there or a K_s in the whole graph; across the sides only the K_s test
    applies.  The H-family core passes exactly under this reading (its
    missing A-A pairs close a K_s, not a K_{s-1} inside A).
    """
    g, s = ss.graph, ss.s
    failures: list[str] = []
    a_ok = b_ok = cross_ok = True
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            common = g.adj[u] & g.adj[v]
            in_a = u in ss.A and v in ss.A
            in_b = u in ss.B and v in ss.B
            if in_a or in_b:
                side_mask = ss.a_mask if in_a else ss.b_mask
                if not (
                    has_clique_in(g, common & side_mask, s - 3)
                    or has_clique_in(g, common, s - 2)
                ):
                    failures.append(f"missing side edge {u}-{v} is not blocked")
                    if in_a:
                        a_ok = False
                    else:
                        b_ok = False
            else:
                if not has_clique_in(g, common, s - 2):
                    failures.append(f"missing cross edge {u}-{v} creates no K_{s}")
                    cross_ok = False
    return SupportReport(check_pre_support(ss), a_ok, b_ok, cross_ok, tuple(failures))


# -- completion ---------------------------------------------------------


def complete_to_support(
    ss: SupportStructure, *, verify_steps: bool = False
) -> SupportStructure:
    """Greedy edge addition until every missing pair is blocked.

    Pairs are swept in lexicographic vertex order, with repeated sweeps
    until one adds nothing.  Blockedness is monotone under edge addition,
    so one sweep already reaches a fixed point; the extra sweep is the
    cheap proof of that.  The fixed order makes all downstream golden
    constants reproducible.
    """
    if not check_pre_support(ss).ok:
        raise ValueError("input is not a pre-support structure")
    cur = ss
    for _ in range(cur.graph.n * cur.graph.n):
        added = False
        for u in range(cur.graph.n):
            for v in range(u + 1, cur.graph.n):
                if cur.graph.has_edge(u, v) or _addition_blocked(cur, u, v):
                    continue
                cur = SupportStructure(cur.graph.with_edge(u, v), ss.A, ss.B, ss.s)
                added = True
                if verify_steps and not check_pre_support(cur).ok:
                    raise AssertionError(
                        f"adding {u}-{v} broke the pre-support conditions"
                    )
        if not added:
            return cur
    raise AssertionError("completion failed to stabilise")  # pragma: no cover


# -- padding and assembly ------------------------------------------------


def padding_plan(ss: SupportStructure, t: int, n: int) -> PaddingPlan:
    """Compute padding class sizes for order n and minimum degree t.

    Side degrees are read from the structure as given (normally the
    completed one, which is what assembly consumes).  Requires enough X
    vertices to lift the A/Y side strictly above its deficit N, so that
    the global minimum degree is pinned on the X/B side.
    """
    delta_a = ss.side_min_degree(ss.A)
    delta_b = ss.side_min_degree(ss.B)
    cap_n, bound_n = min(len(ss.B), delta_a), "B-size" if len(ss.B) <= delta_a else "A-degree"
    cap_m, bound_m = min(len(ss.A), delta_b), "A-size" if len(ss.A) <= delta_b else "B-degree"
    N = t - cap_n
    M = t - cap_m
    y_count = max(M, 0)
    x_count = n - len(ss.A) - len(ss.B) - y_count
    if x_count < 1:
        raise ValueError(
            f"order n={n} leaves no room for X "
            f"(|A|+|B|+|Y| = {len(ss.A) + len(ss.B) + y_count})"
        )
    if x_count <= N:
        raise ValueError(
            f"order n={n} too small: need x_count > N = {N}, got {x_count}"
        )
    return PaddingPlan(N, M, x_count, y_count, t, bound_n, bound_m)


def assemble(ss: SupportStructure, plan: PaddingPlan):
    """Attach independent sets X and Y: X joined to A and Y, Y to B and X.

    Output vertex order is A ascending, then B, then Y, then X, so every
    assembled family is bit-reproducible.  The result is verified to be
    K_s-saturated with minimum degree exactly plan.t and the call fails
    loudly otherwise.
    """
    report = check_support(ss)
    if not report.ok:
        raise ValueError(
            "assembly requires a completed support structure; failures: "
            + "; ".join(report.failures or report.pre.failures)
        )
    order = sorted(ss.A) + sorted(ss.B)
    core = ss.graph.relabeled(order)
    na, nb = len(ss.A), len(ss.B)
    ny, nx = plan.y_count, plan.x_count
    n = na + nb + ny + nx

    a_mask = (1 << na) - 1
    b_mask = ((1 << nb) - 1) << na
    y_mask = ((1 << ny) - 1) << (na + nb)
    x_mask = ((1 << nx) - 1) << (na + nb + ny)

    rows = [core.adj[v] for v in range(na + nb)]
    for v in range(na):
        rows[v] |= x_mask
    for v in range(na, na + nb):
        rows[v] |= y_mask
    rows += [b_mask | x_mask] * ny
    rows += [a_mask | y_mask] * nx
    g = Graph(n, rows)

    if not is_saturated(g, ss.s):
        raise AssemblyError(f"assembled graph is not K_{ss.s}-saturated")
    if min_degree(g) != plan.t:
        raise AssemblyError(
            f"assembled minimum degree {min_degree(g)} != target {plan.t}"
        )

    from .constructions import LabeledGraph  # local import to avoid a cycle

    labels = {
        "A": frozenset(range(na)),
        "B": frozenset(range(na, na + nb)),
        "Y": frozenset(range(na + nb, na + nb + ny)),
        "X": frozenset(range(na + nb + ny, n)),
    }
    return LabeledGraph(g, labels)


def x_clique_census(assembled, r: int) -> tuple[int, int]:
    """(K_r copies through X, x_count * k_{r-1} of the A side).

    These agree for every assembled graph: X is independent and Y sees
    nothing in A, so a clique through an X vertex uses exactly one X
    vertex and otherwise lives inside A.
    """
    g = assembled.graph
    x_set = assembled.labels["X"]
    rest = induced_subgraph(g, set(range(g.n)) - x_set)
    through_x = count_cliques(g, r) - count_cliques(rest, r)
    a_side = induced_subgraph(g, assembled.labels["A"])
    return through_x, len(x_set) * count_cliques(a_side, r - 1)
