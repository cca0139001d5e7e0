from __future__ import annotations

import pytest

from enlarged_css import tables
from enlarged_css.tables import Anomaly, TableRow, check_row, load_anomalies, load_table, reproduce_table


@pytest.fixture(scope="module")
def report2():
    return reproduce_table(2)


def test_table_files_load():
    t1, t2 = load_table(1), load_table(2)
    assert {r.n for r in t1} == set(tables.TABLE_LENGTHS[1])
    assert {r.n for r in t2} == set(tables.TABLE_LENGTHS[2])
    assert TableRow(8, 4, 7, 4, 2, 3, 3) in t1
    assert TableRow(22, 12, 15, 6, 4, 5, 6) in t2


def test_dimension_column_is_consistent_except_one_row():
    bad = [r for r in load_table(1) + load_table(2) if not r.internally_consistent]
    assert [(r.n, r.k, r.k_prime) for r in bad] == [(106, 93, 104)]
    row = bad[0]
    assert row.K == row.k + (row.n - 1) - row.n


def test_anomaly_allowlist_is_explicit():
    anomalies = load_anomalies()
    assert {(a.table, a.n, a.k, a.k_prime) for a in anomalies} == {
        (2, 74, 55, 64), (2, 106, 93, 104), (2, 90, 45, 56), (2, 118, 69, 93),
    }
    assert all(a.reason for a in anomalies)


@pytest.mark.parametrize(
    "table, row, K, D",
    [
        (1, TableRow(32, 21, 26, 6, 4, 15, 6), 15, 6),
        (1, TableRow(128, 78, 99, 16, 10, 49, 15), 49, 15),
        (1, TableRow(8, 4, 7, 4, 2, 3, 3), 3, 3),
        (2, TableRow(22, 12, 15, 6, 4, 5, 6), 5, 6),
    ],
)
def test_individual_rows(table, row, K, D):
    check, record = check_row(table, row, cap_symplectic=1 << 12)
    assert (check.regenerated.K, check.regenerated.D) == (K, D)
    assert check.status == "ok"
    assert record is not None and record.code.K == K


def test_row_with_inner_code_not_containing_its_dual():
    row = TableRow(90, 45, 56, 12, 10, 11, 12)
    check, record = check_row(2, row, anomalies=load_anomalies())
    assert record is None
    assert not check.constructible
    assert check.regenerated == row
    assert not check.invariants["C_dual_containing_by_cosets"]
    assert not check.invariants["C_dual_containing_by_matrices"]
    assert check.status == "unconstructible"
    bare, _ = check_row(2, row)
    assert bare.status == "UNCONSTRUCTIBLE"


def test_flagged_rows(report2):
    by_key = {(r.expected.n, r.expected.k): r for r in report2.rows}
    d_row = by_key[74, 55]
    assert d_row.mismatches == ("D",) and d_row.regenerated.D == 6 and d_row.expected.D == 4
    k_row = by_key[106, 93]
    assert k_row.mismatches == ("k_prime",) and k_row.regenerated.k_prime == 105
    assert k_row.regenerated.K == k_row.expected.K == 92
    assert d_row.status == k_row.status == "flagged"


def test_strict_mode(report2):
    assert report2.ok()
    assert not report2.ok(strict=True)
    assert reproduce_table(1).ok(strict=True)


def test_rows_sorted_by_length_then_descending_dimension(report2):
    keys = [(r.expected.n, -r.expected.k) for r in report2.rows]
    assert keys == sorted(keys)


def test_small_rows_get_verified_distances(report2):
    row = next(r for r in report2.rows if (r.expected.n, r.expected.k) == (22, 12))
    assert row.verified_distance == 6 and row.pure
    big = next(r for r in report2.rows if r.expected.n == 118)
    assert big.verified_distance is None


def test_report_text_and_dict(report2):
    text = report2.to_text()
    assert "result: PASS" in text
    assert "accepted on dimension, dual containment, commutativity" in text
    doc = report2.to_dict()
    assert doc["ok"] and doc["flagged"] == 2 and doc["unconstructible"] == 2
    assert len(doc["rows"]) == len(load_table(2))


def test_unobserved_anomaly_fails_the_report(monkeypatch):
    extra = Anomaly(1, 8, 4, 7, ("D",), "bogus")
    monkeypatch.setattr(tables, "load_anomalies", lambda: [extra])
    report = reproduce_table(1, cap_symplectic=1)
    assert report.unused_anomalies == [extra]
    assert not report.ok()
    assert "result: FAIL" in report.to_text()
