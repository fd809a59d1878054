from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satforge import (
    SupportStructure,
    assemble,
    check_pre_support,
    check_support,
    complete_to_support,
    count_cliques,
    h_core,
    f_core,
    is_saturated,
    min_degree,
    padding_plan,
    r_core,
    x_clique_census,
)


def h_structure() -> SupportStructure:
    return SupportStructure(h_core(), frozenset(range(4)), frozenset(range(4, 8)), 4)


def f_structure(s: int) -> SupportStructure:
    core = f_core(s)
    k = 2 * (s - 2)
    return SupportStructure(core, frozenset(range(k)), frozenset(range(k, 2 * k)), s)


def r_structure() -> SupportStructure:
    return SupportStructure(r_core(), frozenset(range(9)), frozenset(range(9, 36)), 5)


def test_structure_validation():
    with pytest.raises(ValueError):
        SupportStructure(h_core(), frozenset(range(5)), frozenset(range(4, 8)), 4)
    with pytest.raises(ValueError):
        SupportStructure(h_core(), frozenset(range(4)), frozenset(range(4, 7)), 4)


def test_pre_support_h_core():
    rep = check_pre_support(h_structure())
    assert rep.ok
    assert rep.sides_clique_free and rep.whole_clique_free
    assert rep.a_neighborhoods_ok and rep.b_neighborhoods_ok


def test_pre_support_f_core_s5():
    assert check_pre_support(f_structure(5)).ok


def test_pre_support_detects_broken_neighborhood():
    # deleting the only A-side edge starves the b vertices of their K_2
    broken = h_core().without_edge(0, 1)
    rep = check_pre_support(
        SupportStructure(broken, frozenset(range(4)), frozenset(range(4, 8)), 4)
    )
    assert not rep.ok
    assert not rep.b_neighborhoods_ok
    assert any("lacks" in msg for msg in rep.failures)


def test_h_core_is_already_complete():
    ss = h_structure()
    assert check_support(ss).ok
    done = complete_to_support(ss, verify_steps=True)
    assert done.graph == ss.graph


def test_f_core_s5_needs_completion():
    ss = f_structure(5)
    before = check_support(ss)
    assert not before.ok and not before.cross_saturated
    done = complete_to_support(ss, verify_steps=True)
    after = check_support(done)
    assert after.ok
    # only cross edges were added: side subgraphs unchanged
    k = 2 * (5 - 2)
    for u in range(2 * k):
        for v in range(u + 1, 2 * k):
            same_side = (u < k) == (v < k)
            if same_side:
                assert ss.graph.has_edge(u, v) == done.graph.has_edge(u, v)


def test_r_core_completion_leaves_a_untouched():
    ss = r_structure()
    done = complete_to_support(ss)
    for u in range(9):
        for v in range(u + 1, 9):
            assert ss.graph.has_edge(u, v) == done.graph.has_edge(u, v)
    assert check_support(done).ok


def test_completion_idempotent():
    for ss in (h_structure(), f_structure(4), f_structure(5)):
        done = complete_to_support(ss)
        assert complete_to_support(done).graph == done.graph


def test_completion_rejects_non_pre_support():
    bad = SupportStructure(
        h_core().without_edge(0, 1), frozenset(range(4)), frozenset(range(4, 8)), 4
    )
    with pytest.raises(ValueError):
        complete_to_support(bad)


def test_padding_plan_h_core():
    done = complete_to_support(h_structure())
    plan = padding_plan(done, 4, 14)
    assert (plan.N, plan.M, plan.x_count, plan.y_count) == (0, 0, 6, 0)
    plan2 = padding_plan(done, 7, 20)
    assert (plan2.M, plan2.x_count) == (3, 9)
    with pytest.raises(ValueError):
        padding_plan(done, 4, 8)


def test_padding_plan_requires_strict_room():
    done = complete_to_support(h_structure())
    # x_count must strictly exceed N: t=5 needs n >= 11
    with pytest.raises(ValueError):
        padding_plan(done, 5, 10)
    plan = padding_plan(done, 5, 11)
    assert plan.x_count == 2 and plan.N == 1


def test_assemble_h_members():
    done = complete_to_support(h_structure())
    built = assemble(done, padding_plan(done, 4, 14))
    assert count_cliques(built.graph, 3) == 24
    built5 = assemble(done, padding_plan(done, 5, 12))
    assert count_cliques(built5.graph, 3) == 22
    assert min_degree(built5.graph) == 5
    assert is_saturated(built5.graph, 4)


def test_assemble_requires_support():
    raw = f_structure(5)
    plan_src = complete_to_support(raw)
    plan = padding_plan(plan_src, 7, 26)
    with pytest.raises(ValueError):
        assemble(raw, plan)


@settings(max_examples=12, deadline=None)
@given(st.integers(min_value=4, max_value=7), st.integers(min_value=1, max_value=12))
def test_assemble_soundness_h_family(t, slack):
    done = complete_to_support(h_structure())
    n = 2 * t + slack
    built = assemble(done, padding_plan(done, t, n))
    assert is_saturated(built.graph, 4)
    assert min_degree(built.graph) == t
    assert count_cliques(built.graph, 3) == 2 * n + 2 * t - 12


@settings(max_examples=8, deadline=None)
@given(st.integers(min_value=5, max_value=7), st.integers(min_value=0, max_value=6))
def test_x_census_f_family(t, slack):
    ss = complete_to_support(f_structure(4))
    n = 2 * (4 - 2) + 2 * t + slack
    built = assemble(ss, padding_plan(ss, t, n))
    for r in (3, 4):
        through, predicted = x_clique_census(built, r)
        assert through == predicted


def test_x_census_h_and_r():
    done = complete_to_support(h_structure())
    built = assemble(done, padding_plan(done, 6, 16))
    for r in (3, 4):
        assert x_clique_census(built, r)[0] == x_clique_census(built, r)[1]
    rr = complete_to_support(r_structure())
    built_r = assemble(rr, padding_plan(rr, 10, 40))
    for r in (3, 4):
        assert x_clique_census(built_r, r)[0] == x_clique_census(built_r, r)[1]


def test_per_step_safety_on_r_core():
    # verify_steps re-checks the pre-support conditions after each addition
    done = complete_to_support(r_structure(), verify_steps=True)
    assert check_support(done).ok
    # termination bound: completion never exceeds all missing pairs
    added = done.graph.edge_count() - r_structure().graph.edge_count()
    assert 0 <= added <= 36 * 35 // 2
