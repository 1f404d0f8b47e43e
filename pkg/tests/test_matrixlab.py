import pytest
from hypothesis import given, settings, strategies as st

from antimagic import matrixlab as ml
from antimagic.fixtures import PRINTED_ROW_SUMS
from antimagic.graphs import edge_corona, make_path, make_star, make_empty
from antimagic.labeling import EdgeLabeling
from antimagic.verify import check


def test_appendix_a_exact():
    assert ml.assemble_dstar_empty(4, 5, 4) == ml.appendix_fixture("A")


def test_appendix_b_exact():
    assert ml.assemble_sk_k2(7, 5) == ml.appendix_fixture("B")


@pytest.mark.parametrize("ident", ["A", "B"])
def test_appendix_row_sums(ident):
    sums = ml.class_row_sums(ml.appendix_fixture(ident))
    assert sums == {k: [v] for k, v in PRINTED_ROW_SUMS[ident].items()}


def test_appendix_c_differs_only_in_first_layer_of_two_copies():
    built = ml.assemble_dstar_k2(3, 4, 6)
    printed = ml.appendix_fixture("C")
    diff = built.diff(printed)
    assert len(diff) == 16
    # the printed matrix is still a bijection but splits the u1 class in three
    assert printed.is_label_permutation()
    assert ml.class_row_sums(printed)["u1"] == [345, 361, 377]
    assert ml.class_row_sums(built)["u1"] == [361]
    for key in ("c1", "c2", "v", "u2"):
        assert ml.class_row_sums(built)[key] == [PRINTED_ROW_SUMS["C"][key]]


def test_fixture_graphs_certify():
    for ident, (name, *p) in ml.FIXTURE_PARAMS.items():
        g = ml.construction_graph(name, *p)
        rep = check(g, ml.matrix_to_labeling(ml.appendix_fixture(ident), g))
        assert rep.certified


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(ml.CONSTRUCTIONS)), st.data())
def test_constructions_certify_at_claimed_count(name, data):
    _, keys, want = ml.CONSTRUCTIONS[name]
    if name.startswith("dstar"):
        k1 = data.draw(st.integers(1, 5))
        host = (k1, data.draw(st.integers(k1, 6)))
    else:
        host = (data.draw(st.integers(2, 9)),)
    r = data.draw(st.integers(1, 7))
    g, m, lab = ml.assemble(name, *host, r)
    rep = check(g, lab)
    assert rep.certified and rep.color_count == want == lab.claimed_colors
    assert m.is_label_permutation()
    assert sorted(m.row_sums()) == sorted(rep.weights)


def test_sk_empty_k1_r2_is_improper():
    with pytest.raises(ml.AssemblyFailure):
        ml.assemble_sk_empty(1, 2)


@pytest.mark.parametrize("p", [(1, 3, 1), (2, 8, 1)])
def test_dstar_empty_swap_fallback(p):
    assert ml.dstar_empty_swaps(*p)
    g, _, lab = ml.assemble("dstar-empty", *p)
    assert check(g, lab).color_count == 4


def test_matrix_json_round_trip_and_render():
    m = ml.appendix_fixture("B")
    assert ml.LabelingMatrix.from_json(m.to_json()) == m
    text = m.render()
    assert ml.STAR in text and "*" in text
    assert len(text.splitlines()) == m.dimension


def test_matrix_json_rejects():
    doc = ml.assemble_sk_empty(2, 1).to_json()
    with pytest.raises(ml.MatrixError):
        ml.LabelingMatrix.from_json({**doc, "format": 3})
    with pytest.raises(ml.MatrixError):
        ml.LabelingMatrix.from_json({**doc, "entries": doc["entries"] + [doc["entries"][0]]})


def test_matrix_labeling_round_trip():
    g = edge_corona(make_star(3), make_empty(2))
    _, m, lab = ml.assemble("sk-empty", 3, 2)
    assert ml.matrix_of_labeling(lab) == m
    assert ml.matrix_to_labeling(m, g).labels == lab.labels


def test_matrix_support_mismatch():
    g = make_path(3)
    m = ml.matrix_of_labeling(EdgeLabeling(make_path(4), (1, 2, 3)))
    with pytest.raises(ml.MatrixError):
        ml.matrix_to_labeling(m, g)


def test_split3_and_reverse():
    t = ml.split3((1, 2, 3, 4, 5, 6), 2, 3)
    assert t == ml.VectorTriple(1, (2, 3), (4, 5, 6))
    assert t.concat() == (1, 2, 3, 4, 5, 6)
    assert ml.reverse((1, 2, 3)) == (3, 2, 1)
    with pytest.raises(ml.MatrixError):
        ml.split3((1, 2, 3), 2, 3)
    with pytest.raises(ml.MatrixError):
        ml.split3((1, 2, 3), 0, 2)


@pytest.mark.parametrize("name,params", [("sk-empty", (0, 2)), ("sk-k2", (2, 0)),
                                         ("dstar-k2", (3, 2, 1)), ("nope", (1, 1))])
def test_assemble_rejects(name, params):
    with pytest.raises((ml.MatrixError, ValueError)):
        ml.assemble(name, *params)
