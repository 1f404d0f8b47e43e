import pytest
from hypothesis import given, settings, strategies as st

from antimagic import construct_lat as clt
from antimagic.graphs import (
    from_edge_list, make_complete_two, make_double_star, make_firecracker, make_path, make_star,
)
from antimagic.oracle import (
    EXHAUSTED, IMPOSSIBLE, INFEASIBLE, GuardExceeded, SearchBudget, brute_force_chi, exact_chi_la,
    exact_chi_lat, exists_with_colors, search_prescribed_total,
)
from antimagic.verify import check


@st.composite
def small_connected(draw, max_edges=6):
    n = draw(st.integers(2, 6))
    # random spanning tree plus extra edges
    edges = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    extra = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3))
    edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    edges = sorted(edges)[:max_edges]
    g = from_edge_list(n, edges)
    return g if g.is_connected() else from_edge_list(n, [(i - 1, i) for i in range(1, n)])


def _value(res):
    return res.value if res.definite else None


@settings(max_examples=40, deadline=None)
@given(small_connected())
def test_edge_oracle_matches_brute_force(g):
    assert _value(exact_chi_la(g)) == brute_force_chi(g, "edge")


@settings(max_examples=25, deadline=None)
@given(small_connected(max_edges=4))
def test_total_oracle_matches_brute_force(g):
    if g.order + g.size > 8:
        return
    assert _value(exact_chi_lat(g)) == brute_force_chi(g, "total")


@pytest.mark.parametrize("g,want", [
    (make_path(6), 3), (make_firecracker(3, 2), 4), (make_star(2), 3), (make_star(3), 4),
    (make_star(4), 5), (make_double_star(1, 2), 4),
])
def test_known_edge_values(g, want):
    res = exact_chi_la(g)
    assert res.value == want
    rep = check(g, res.witness)
    assert rep.certified and rep.color_count == want


@pytest.mark.parametrize("g,want", [
    (make_firecracker(3, 1), 2), (make_complete_two(), 2), (make_path(4), 3),
])
def test_known_total_values(g, want):
    res = exact_chi_lat(g)
    assert res.value == want
    assert check(g, res.witness).color_count == want


def test_k2_has_no_edge_labeling():
    res = exact_chi_la(make_star(1))
    assert res.value == INFEASIBLE and res.witness is None


def test_exists_with_colors():
    g = make_path(5)
    res = exists_with_colors(g, 3)
    assert res.value == 3 and check(g, res.witness).color_count == 3
    assert exists_with_colors(g, 1).value == IMPOSSIBLE


def test_guard_refuses_large_instances():
    with pytest.raises(GuardExceeded):
        exact_chi_la(make_firecracker(4, 3))
    with pytest.raises(GuardExceeded):
        exact_chi_lat(make_firecracker(3, 2), guard=12)


def test_budget_exhaustion_is_reported():
    res = exact_chi_la(make_firecracker(3, 3), SearchBudget(max_nodes=5))
    assert res.value == EXHAUSTED and not res.definite


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)
    with pytest.raises(ValueError):
        SearchBudget(mode="sometimes")


@pytest.mark.parametrize("n", [3, 4])
def test_prescribed_search_reaches_uniform_classes(n):
    g = make_firecracker(n, 1)
    want = check(g, clt.total_label_fn1(n, uniform=True)).weights
    assert set(want) == {5 * n - 1, 5 * n}
    lab = search_prescribed_total(g, want)
    assert lab is not None and check(g, lab).weights == want
