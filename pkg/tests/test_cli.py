import json

import pytest

from antimagic.cli import main, parse_range
from antimagic.formats import parse_csv


@pytest.fixture
def out(tmp_path, monkeypatch):
    monkeypatch.setenv("ANTIMAGIC_OUT", str(tmp_path))
    return tmp_path


def test_gen_writes_graph_and_dot(out):
    assert main(["gen", "firecracker", "--n", "3", "--k", "2", "--dot"]) == 0
    doc = json.loads((out / "firecracker_3_2.graph.json").read_text())
    assert doc["format"] == 1 and len(doc["edges"]) == 8
    assert (out / "firecracker_3_2.dot").read_text().startswith("graph G {")


def test_gen_edge_corona(out):
    assert main(["gen", "edge-corona", "--g", "star:3", "--h", "empty:6"]) == 0
    (path,) = out.glob("*.graph.json")
    assert len(json.loads(path.read_text())["vertices"]) == 4 + 18


def test_out_flag_beats_env(out, tmp_path_factory):
    other = tmp_path_factory.mktemp("other")
    assert main(["--out", str(other), "gen", "path", "--n", "4"]) == 0
    assert (other / "path_4.graph.json").exists()
    assert not (out / "path_4.graph.json").exists()


def test_label_then_verify_round_trip(out):
    assert main(["label", "la", "--n", "4", "--k", "3"]) == 0
    rep = json.loads((out / "firecracker_4_3.la.report.json").read_text())
    assert rep["certified"] and rep["color_count"] == 9
    g, lab = out / "firecracker_4_3.la.graph.json", out / "firecracker_4_3.la.labeling.json"
    assert main(["verify", str(g), str(lab)]) == 0


def test_verify_exit_codes(out):
    main(["label", "la", "--n", "3", "--k", "3"])
    g = out / "firecracker_3_3.la.graph.json"
    lab = json.loads((out / "firecracker_3_3.la.labeling.json").read_text())
    dup = dict(lab, labels=[[i, 1 if i < 2 else x] for i, x in lab["labels"]])
    (out / "dup.json").write_text(json.dumps(dup))
    assert main(["verify", str(g), str(out / "dup.json")]) == 1
    (out / "broken.json").write_text("{")
    assert main(["verify", str(g), str(out / "broken.json")]) == 3
    assert main(["verify", str(g), str(out / "missing.json")]) == 3


def test_verify_improper_exit_code(out):
    main(["gen", "k2"])
    g = out / "k2.graph.json"
    (out / "one.json").write_text(json.dumps(
        {"format": 1, "kind": "edge", "claimed_colors": None, "labels": [[0, 1]]}))
    assert main(["verify", str(g), str(out / "one.json")]) == 2


@pytest.mark.parametrize("argv", [
    ["label", "lat", "--n", "5", "--k", "1", "--uniform"],
    ["label", "lat", "--n", "2", "--k", "4"],
    ["label", "lat", "--n", "4", "--k", "4"],
    ["label", "join", "--n", "5"],
    ["label", "matrix", "--construction", "sk-k2", "--k", "3", "--r", "2"],
    ["label", "matrix", "--construction", "dstar-empty", "--k1", "2", "--k2", "3", "--r", "2"],
    ["label", "matrix", "--fixture", "A"],
])
def test_label_variants(out, argv):
    assert main(argv) == 0


def test_label_matrix_writes_render(out):
    main(["label", "matrix", "--fixture", "B"])
    assert "★" in (out / "appendix_B.matrix.txt").read_text()
    assert json.loads((out / "appendix_B.matrix.json").read_text())["format"] == 1


@pytest.mark.parametrize("argv,code", [
    (["label", "la", "--n", "1", "--k", "3"], 4),
    (["label", "la", "--n", "3"], 3),
    (["label", "lat", "--n", "3", "--k", "0"], 3),
    (["label", "matrix"], 3),
    (["gen", "double-star", "--k1", "3", "--k2", "1"], 3),
    (["gen", "bogus"], 3),
    ([], 3),
])
def test_bad_invocations(out, argv, code, capsys):
    assert main(argv) == code
    assert "error" in capsys.readouterr().err


def test_search(out):
    assert main(["search", "--family", "path:6"]) == 0
    assert json.loads((out / "path_6.la.oracle.json").read_text())["value"] == 3
    assert main(["search", "--family", "fc:3,1", "--kind", "lat"]) == 0
    assert main(["search", "--family", "path:5", "--colors", "3"]) == 0


def test_search_guard_refusal(out):
    assert main(["search", "--family", "fc:4,3"]) == 4
    assert main(["search", "--family", "fc:3,2", "--guard", "5"]) == 4


def test_sweep_csv(out):
    assert main(["sweep", "la", "--n", "2:4", "--k", "2,3"]) == 0
    rows = parse_csv((out / "sweep_la.csv").read_text())
    assert len(rows) == 6
    assert all(r["certified"] == "true" and r["claimed"] == r["achieved"] for r in rows)
    cfg = json.loads((out / "sweep_la.config.json").read_text())
    assert cfg["grid"] == {"n": [2, 3, 4], "k": [2, 3]}


def test_sweep_empty_grid(out):
    assert main(["sweep", "sk-empty", "--k", "5:2", "--r", "1:3"]) == 0
    assert (out / "sweep_sk-empty.csv").read_text().strip() == \
        "k,r,claimed,achieved,certified,elapsed_ms"


def test_sweep_uncertified_row_exits_two(out):
    # sk-empty at k=1, r=2 has no proper layout
    assert main(["sweep", "sk-empty", "--k", "1", "--r", "1:2"]) == 2
    rows = parse_csv((out / "sweep_sk-empty.csv").read_text())
    assert [r["certified"] for r in rows] == ["true", "false"]


def test_sweep_ledger(out):
    ledger = out / "errata.json"
    assert main(["sweep", "fn1", "--n", "3:5", "--ledger", str(ledger)]) == 0
    first = ledger.read_text()
    assert main(["sweep", "fn1", "--n", "3:5", "--ledger", str(ledger)]) == 0
    assert ledger.read_text() == first


def test_export(out):
    main(["label", "lat", "--n", "3", "--k", "2"])
    g, lab = out / "firecracker_3_2.lat.graph.json", out / "firecracker_3_2.lat.labeling.json"
    assert main(["export", "dot", "--graph", str(g), "--labeling", str(lab)]) == 0
    assert "label=" in (out / "firecracker_3_2.dot").read_text()
    assert main(["export", "csv", "--graph", str(g), "--labeling", str(lab)]) == 0
    rows = parse_csv((out / "firecracker_3_2.weights.csv").read_text())
    assert len(rows) == 9
    assert main(["export", "fixture", "--fixture", "C"]) == 0
    assert main(["export", "errata"]) == 0
    assert json.loads((out / "errata.json").read_text())["format"] == 1
    assert main(["export", "dot"]) == 3


def test_parse_range():
    assert parse_range("2:4") == [2, 3, 4]
    assert parse_range("4:2") == []
    assert parse_range("1,5") == [1, 5]
