import json
from dataclasses import replace
from pathlib import Path

import pytest

from antimagic import construct_lat as clt
from antimagic import errata
from antimagic.verify import check

ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture(scope="module")
def ledger():
    return errata.build_ledger()


def test_ledger_file_is_current(ledger):
    assert (ROOT / "errata.json").read_text() == errata.ledger_text()


def test_ledger_rebuild_is_deterministic():
    assert errata.ledger_text() == errata.ledger_text()


def test_every_entry_complete_and_passing(ledger):
    assert ledger["format"] == 1
    assert errata.incomplete_entries(ledger) == []
    ids = [e["id"] for e in ledger["entries"]]
    assert len(ids) == len(set(ids))


def test_entries_carry_printed_probe(ledger):
    for e in ledger["entries"]:
        assert e["printed"] != e["corrected"], e["id"]
        assert "printed_probe" in e["witness"], e["id"]


def test_report_fields(ledger):
    for e in ledger["entries"]:
        rep = e["witness"]["report"]
        assert set(rep) == {"instances", "certified", "color_counts", "digest"}
        assert len(rep["digest"]) == 64


@pytest.mark.parametrize("n", range(5, 22, 2))
def test_corrected_odd_table_matches_construction(n):
    lab = errata.table_labeling(errata.fn1_odd_corrected(), n)
    assert lab == clt.total_label_fn1(n, verify=False)
    assert check(lab.graph, lab).certified


@pytest.mark.parametrize("n", range(8, 21, 2))
def test_corrected_even_table_matches_construction(n):
    lab = errata.table_labeling(errata.fn1_even_corrected(), n)
    assert lab == clt.total_label_fn1(n, verify=False)


def test_printed_even_table_leaves_keys_undefined():
    ranges = errata._fn1_ranges(8, errata.FN1_EVEN_PRINTED)
    _, undefined, _ = errata.evaluate_table(errata.FN1_EVEN_PRINTED, 8, ranges)
    assert undefined


def test_closed_forms_hold_or_are_corrected():
    for cf in errata.closed_forms():
        res = errata.check_closed_form(cf)
        if not res["holds"]:
            _, fixed = errata.CLOSED_FORM_FIXES[cf.ident]
            assert errata.check_closed_form(replace(cf, formula=fixed))["holds"], cf.ident


def test_ledger_json_is_sorted_and_stable(ledger):
    text = errata.ledger_text()
    assert json.loads(text) == ledger
