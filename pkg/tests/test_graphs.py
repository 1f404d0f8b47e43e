import pytest
from hypothesis import given, strategies as st

from antimagic.formats import FormatError, dumps, graph_from_json, graph_to_json
from antimagic.graphs import (
    FamilySpec, GraphError, disjoint_copies_k2, edge_corona, fc_vertex, join_with_single_vertex,
    make_double_star, make_empty, make_firecracker, make_path, make_star, vref,
)

small = st.integers(min_value=1, max_value=7)


@given(small, small)
def test_firecracker_shape(n, k):
    g = make_firecracker(n, k)
    assert g.order == n * (k + 1)
    assert g.size == n * k + n - 1
    assert g.is_tree()
    for i in range(1, n + 1):
        assert len(g.incidence[g.index[vref("center", i)]]) == k


@given(small, small)
def test_double_star_shape(k1, k2):
    if k1 > k2:
        with pytest.raises(GraphError):
            make_double_star(k1, k2)
        return
    g = make_double_star(k1, k2)
    assert (g.order, g.size) == (k1 + k2 + 2, k1 + k2 + 1)


@given(small, small)
def test_edge_corona_counts(k, r):
    host = make_star(k)
    for h in (make_empty(r), disjoint_copies_k2(r)):
        g = edge_corona(host, h)
        assert g.order == host.order + host.size * h.order
        assert g.size == host.size + host.size * (h.size + 2 * h.order)


def test_edge_corona_joins_both_endpoints():
    g = edge_corona(make_path(2), make_empty(3))
    a, b = g.index[vref("path", 1)], g.index[vref("path", 2)]
    copies = [v for v in range(g.order) if g.vertices[v].role == "copy"]
    assert len(copies) == 3
    assert all({a, b} <= g.neighbors[c] for c in copies)


def test_join_adds_universal_vertex():
    g = join_with_single_vertex(make_firecracker(3, 1))
    apex = g.index[vref("apex", 1)]
    assert len(g.incidence[apex]) == g.order - 1


def test_fc_vertex_roles():
    assert fc_vertex(2, 1) == vref("link", 2)
    assert fc_vertex(2, 3) == vref("leaf", 2, 3)


@pytest.mark.parametrize("text,order", [
    ("star:3", 4), ("dstar:2,3", 7), ("fc:3,2", 9), ("path:5", 5), ("rk2:2", 4),
    ("complete-two", 2), ("empty:4", 4),
])
def test_family_spec(text, order):
    assert FamilySpec.parse(text).build().order == order


@pytest.mark.parametrize("text", ["nope:1", "star:1,2", "star:x", "star:0", "path:-1"])
def test_family_spec_rejects(text):
    with pytest.raises(GraphError):
        FamilySpec.parse(text).build()


@given(small, small)
def test_graph_json_round_trip(n, k):
    g = make_firecracker(n, k)
    back = graph_from_json(graph_to_json(g))
    assert back.vertices == g.vertices and back.edges == g.edges
    assert dumps(graph_to_json(back)) == dumps(graph_to_json(g))


@pytest.mark.parametrize("doc", [
    {"vertices": [], "edges": []},
    {"format": 2, "vertices": [], "edges": []},
    {"format": 1, "vertices": [["path", 1]], "edges": [[0, 0]]},
    {"format": 1, "vertices": [["path", 1], ["path", 2]], "edges": [[0, 5]]},
    {"format": 1, "edges": []},
    [],
])
def test_graph_json_rejects(doc):
    with pytest.raises(FormatError):
        graph_from_json(doc)
