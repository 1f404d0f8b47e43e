import pytest
from hypothesis import given, settings, strategies as st

from antimagic import construct_la as cla
from antimagic import construct_lat as clt
from antimagic.graphs import fc_vertex, join_with_single_vertex, make_firecracker, vref
from antimagic.oracle import exact_chi_la
from antimagic.verify import check


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 30), st.integers(2, 30))
def test_la_certified_at_claimed_count(n, k):
    lab = cla.label_firecracker(n, k)
    rep = check(lab.graph, lab)
    assert rep.certified
    assert rep.color_count == lab.claimed_colors == n * k - n + 1
    assert rep.color_count == rep.leaf_bound


@pytest.mark.parametrize("n,k", [(1, 3), (4, 1), (1, 1)])
def test_la_cited_only(n, k):
    with pytest.raises(cla.CitedOnly):
        cla.label_firecracker(n, k)


@pytest.mark.parametrize("n,k", [(0, 3), (3, 0), (-1, 2)])
def test_la_rejects_bad_params(n, k):
    with pytest.raises(ValueError):
        cla.label_firecracker(n, k)


def test_la_f33_weights():
    lab = cla.label_firecracker(3, 3)
    w = check(lab.graph, lab).weights
    at = lab.graph.index
    assert [w[at[vref("center", i)]] for i in (1, 2, 3)] == [21, 21, 21]
    assert w[at[fc_vertex(1, 1)]] == 5
    assert w[at[fc_vertex(2, 1)]] == 9


@pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (3, 2)])
def test_la_matches_oracle(n, k):
    res = exact_chi_la(make_firecracker(n, k))
    assert res.value == cla.label_firecracker(n, k).claimed_colors


@pytest.mark.parametrize("n", range(3, 26))
def test_fn1_total_two_classes(n):
    t = clt.total_label_fn1(n, uniform=True)
    rep = check(t.graph, t)
    assert rep.certified
    assert sorted(rep.color_classes) == [5 * n - 1, 5 * n]


@pytest.mark.parametrize("n", [3, 4])
def test_fn1_small_default_is_certified(n):
    t = clt.total_label_fn1(n)
    rep = check(t.graph, t)
    assert rep.certified and rep.color_count == 2


@pytest.mark.parametrize("k", range(3, 16))
def test_f2k_classes(k):
    t = clt.total_label_f2k(k)
    rep = check(t.graph, t)
    assert rep.certified
    assert sorted(rep.color_classes) == sorted(clt.f2k_classes(k))


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 14), st.integers(2, 14))
def test_lat_at_most_three(n, k):
    t = clt.total_label_firecracker(n, k)
    rep = check(t.graph, t)
    assert rep.certified and rep.color_count <= clt.LAT_BOUND


@pytest.mark.parametrize("n", range(3, 14))
def test_join_transfer(n):
    lab = clt.join_transfer(clt.total_label_fn1(n))
    assert lab.graph.vertices == join_with_single_vertex(make_firecracker(n, 1)).vertices
    rep = check(lab.graph, lab)
    assert rep.certified and rep.color_count == 3


@pytest.mark.parametrize("fn,args", [
    (clt.total_label_firecracker, (2, 3)),
    (clt.total_label_firecracker, (3, 1)),
    (clt.total_label_fn1, (2,)),
    (clt.total_label_f2k, (2,)),
])
def test_lat_rejects_outside_regime(fn, args):
    with pytest.raises(ValueError):
        fn(*args)
