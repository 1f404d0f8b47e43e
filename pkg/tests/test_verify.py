import pytest
from hypothesis import given, settings, strategies as st

from antimagic.formats import FormatError, labeling_from_json, labeling_to_json
from antimagic.graphs import (
    edge_corona, from_edge_list, make_empty, make_firecracker, make_path, make_star,
)
from antimagic.labeling import EdgeLabeling, LabelingError, TotalLabeling
from antimagic.verify import (
    EXIT_BIJECTION, EXIT_OK, EXIT_PROPER, check, clique_lower_bound, has_clique, leaf_lower_bound,
)


@st.composite
def labeled_firecracker(draw, total=False):
    n = draw(st.integers(1, 5))
    k = draw(st.integers(1, 5))
    g = make_firecracker(n, k)
    top = g.size + (g.order if total else 0)
    perm = draw(st.permutations(range(1, top + 1)))
    if total:
        return TotalLabeling(g, tuple(perm[:g.order]), tuple(perm[g.order:]))
    return EdgeLabeling(g, tuple(perm))


@given(labeled_firecracker())
def test_any_permutation_is_a_bijection(lab):
    rep = check(lab.graph, lab)
    assert rep.bijection_ok
    # each edge label counts at both endpoints
    assert sum(rep.weights) == 2 * sum(lab.labels)
    assert rep.exit_code in (EXIT_OK, EXIT_PROPER)
    assert rep.proper_ok == all(rep.weights[a] != rep.weights[b] for a, b in lab.graph.edges)


@given(labeled_firecracker(total=True))
def test_total_weight_identity(lab):
    rep = check(lab.graph, lab)
    assert rep.bijection_ok
    assert sum(rep.weights) == sum(lab.vertex_labels) + 2 * sum(lab.edge_labels)


@given(labeled_firecracker(), st.data())
def test_duplicate_label_is_bijection_failure(lab, data):
    if lab.graph.size < 2:
        return
    e = data.draw(st.integers(0, lab.graph.size - 1))
    other = lab.labels[(e + 1) % lab.graph.size]
    rep = check(lab.graph, lab.replace(e, other))
    assert rep.exit_code == EXIT_BIJECTION
    assert {v.kind for v in rep.violations} >= {"duplicate", "missing"}


def test_out_of_range_label():
    g = make_path(3)
    rep = check(g, EdgeLabeling(g, (1, 3)))
    assert rep.exit_code == EXIT_BIJECTION
    assert any(v.kind == "range" for v in rep.violations)


def test_path_weights():
    g = make_path(4)
    rep = check(g, EdgeLabeling(g, (1, 2, 3)))
    assert rep.weights == (1, 3, 5, 3)
    assert rep.certified and rep.color_count == 3


def test_adjacent_clash_detected():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    # C_4 with labels 1,2,3,4: weights 5,3,5,7
    assert check(g, EdgeLabeling(g, (1, 2, 3, 4))).proper_ok
    g = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    # triangle with labels 1,2,3: weights 4,3,5
    assert check(g, EdgeLabeling(g, (1, 2, 3))).certified
    g = from_edge_list(2, [(0, 1)])
    rep = check(g, EdgeLabeling(g, (1,)))
    assert rep.exit_code == EXIT_PROPER
    assert rep.violations[0].kind == "adjacent"


def test_shape_mismatch_rejected():
    g = make_path(3)
    with pytest.raises(LabelingError):
        EdgeLabeling(g, (1,))
    with pytest.raises(LabelingError):
        TotalLabeling(g, (1, 2), (3, 4, 5))


def test_leaf_bound():
    assert leaf_lower_bound(make_star(4)) == 5
    assert leaf_lower_bound(make_path(6)) == 3
    assert leaf_lower_bound(make_firecracker(3, 3)) == 7
    assert leaf_lower_bound(edge_corona(make_star(2), make_empty(1))) is None


@settings(max_examples=40)
@given(st.integers(3, 7), st.sets(st.tuples(st.integers(0, 6), st.integers(0, 6)), max_size=15))
def test_clique_bound_matches_brute_force(n, pairs):
    edges = {(min(a, b), max(a, b)) for a, b in pairs if a != b and a < n and b < n}
    g = from_edge_list(n, sorted(edges))
    w = clique_lower_bound(g)
    assert has_clique(g, w) if w >= 2 else True
    if w < 5:
        assert not has_clique(g, w + 1)


@given(st.booleans().flatmap(lambda t: labeled_firecracker(total=t)))
def test_labeling_json_round_trip(lab):
    back = labeling_from_json(labeling_to_json(lab), lab.graph)
    assert back == lab


def test_labeling_json_rejects():
    g = make_path(3)
    good = labeling_to_json(EdgeLabeling(g, (1, 2)))
    for bad in (
        {**good, "format": 7},
        {**good, "labels": [[0, 1]]},
        {**good, "labels": [[0, 1], [0, 2]]},
        {**good, "labels": [[0, 1], [5, 2]]},
        {**good, "kind": "weird"},
        {**good, "labels": "xx"},
    ):
        with pytest.raises(FormatError):
            labeling_from_json(bad, g)
