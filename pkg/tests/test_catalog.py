import pandas as pd
import pytest

import config
from analytics.catalog import (TABLE1_PATTERNS, TABLE2_PATTERNS, catalog_entry, certify_distinct,
                               classify_two_generator, compare_with_golden, coset_blocks, cotwin_candidates,
                               cotwin_orders_frame, enumerate_twinfree_cotwin_circulants,
                               enumerate_with_twin_classes, fingerprint, match_pattern, pattern_mismatches,
                               run_job, scan_generators, twin_class_families_frame)
from core.circulant import build, parse_spec
from core.twins import TwinKind


def test_fingerprint_separates_cotwin_circulants():
    a = fingerprint(build(parse_spec(10, "±1,±2")))
    b = fingerprint(build(parse_spec(10, "±1,±3")))
    assert a != b
    assert a.summary()["triangles"] == 10
    assert b.summary()["bipartite"]


def test_certify_distinct_finds_isomorphic_pair():
    graphs = [build(parse_spec(5, "±1")), build(parse_spec(5, "±2")), build(parse_spec(5, "±1,±2"))]
    cert = certify_distinct(graphs, ["C_5(±1)", "C_5(±2)", "K_5"])
    assert cert.isomorphic == [("C_5(±1)", "C_5(±2)")]
    assert cert.by_fingerprint == 2
    assert not cert.all_distinct


@pytest.mark.parametrize("patterns, n, gens, label", [
    (TABLE1_PATTERNS, 8, (1, 3), "C_8(1,3)"),
    (TABLE1_PATTERNS, 12, (1, 5), "i+j=n/2"),
    (TABLE1_PATTERNS, 7, (1, 2), None),
    (TABLE2_PATTERNS, 6, (1, 2, 3), "K_6"),
    (TABLE2_PATTERNS, 12, (1, 3, 5), "C_12(1,3,5)"),
    (TABLE2_PATTERNS, 9, (1, 2, 4), "i+j=n/3 & 2i+j=k"),
    (TABLE2_PATTERNS, 8, (1, 2, 3), "i+k=2j=n/2"),
])
def test_pattern_precedence(patterns, n, gens, label):
    pattern = match_pattern(patterns, n, gens)
    assert (pattern.label if pattern else None) == label


def test_two_generator_scan_matches_patterns():
    records = scan_generators(40, 2)
    assert pattern_mismatches(records) == []
    rows = [r.row() for r in classify_two_generator(8)]
    assert rows[0] == {"n": 4, "i": 1, "j": 2, "kind": "adjacent", "w": 1, "pattern": "K_4"}
    with pytest.raises(ValueError):
        classify_two_generator(3)


def test_table1_golden():
    frame = run_job("table1", 60)
    result = compare_with_golden(frame, config.CATALOG_CONFIG["golden_files"]["table1"])
    assert result["match"], result


@pytest.mark.slow
def test_table2_golden():
    frame = run_job("table2", 60)
    result = compare_with_golden(frame, config.CATALOG_CONFIG["golden_files"]["table2"])
    assert result["match"], result


def test_golden_comparison_reports_differences(tmp_path):
    frame = pd.DataFrame([{"n": 4, "w": 1}, {"n": 5, "w": 1}])
    path = tmp_path / "golden.csv"
    pd.DataFrame([{"n": 4, "w": 1}, {"n": 6, "w": 3}]).to_csv(path, index=False)
    result = compare_with_golden(frame, path)
    assert not result["match"]
    assert result["extra"] == [{"n": "5", "w": "1"}]
    assert result["missing"] == [{"n": "6", "w": "3"}]


def test_coset_blocks():
    blocks = coset_blocks(30, 6)
    assert len(blocks) == 3
    assert blocks[2] == (3, 9, 15, 21, 27)
    assert blocks[0] == (1, 5, 7, 11, 13, 17, 19, 23, 25, 29)


def test_twin_class_family():
    family = enumerate_with_twin_classes(30, 6, certify=False)
    assert len(family.entries) == 7
    assert all(e.twins.kind is TwinKind.NONADJACENT for e in family.entries)
    assert enumerate_with_twin_classes(6, 1).entries == []


def test_cotwin_candidates():
    assert len(list(cotwin_candidates(10))) == 4
    assert list(cotwin_candidates(12)) == []
    assert len(list(cotwin_candidates(14))) == 8


def test_cotwin_enumeration():
    ten = enumerate_twinfree_cotwin_circulants(10)
    assert {spec.name for spec in ten.specs} == {"C_10(±1,±2)", "C_10(±1,±3)"}
    assert ten.certificate.all_distinct
    assert len(enumerate_twinfree_cotwin_circulants(14).entries) == 3
    assert enumerate_twinfree_cotwin_circulants(12).entries == []
    with pytest.raises(ValueError):
        enumerate_twinfree_cotwin_circulants(9)


def test_catalog_entry_dict():
    data = catalog_entry(parse_spec(10, "±1,±3"), with_symmetry=True).to_dict()
    assert data["graph_spec"] == "C_10(±1,±3)"
    assert data["twins"] == {"kind": "none", "w": None, "t": None}
    assert data["cotwins"] == "nonadjacent"
    assert data["symmetry"]["det"]["value"] == 4


def test_cotwin_orders_frame():
    frame = cotwin_orders_frame(14)
    assert list(frame["n"]) == [6, 8, 10, 12, 14]
    assert list(frame["count"]) == [1, 0, 2, 0, 3]


def test_twin_class_families_frame():
    frame = twin_class_families_frame(8)
    row = frame[(frame["n"] == 8) & (frame["w"] == 4)].iloc[0]
    assert row["blocks"] == 2
    assert row["graphs"] == 3


def test_unknown_job():
    with pytest.raises(ValueError):
        run_job("table3")
