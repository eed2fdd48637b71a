import warnings

import pytest
from hypothesis import given, strategies as st

from ramsey_bounds.bounds import (
    BoundEntry,
    BoundsTable,
    InconsistencyDetected,
    InconsistentSeed,
    MalformedRecord,
    MethodParams,
    MissingPremise,
    Provenance,
    RamseyPoint,
    SeedWarning,
    base_value,
    get_params,
    ingest_seeds,
    load_seeds,
    parse_seed_csv,
)


@pytest.mark.parametrize("m,n,expected", [(1, 7, 1), (7, 1, 1), (2, 5, 5), (5, 2, 5), (2, 2, 2), (3, 3, None)])
def test_base_value(m, n, expected):
    assert base_value(m, n) == expected


def test_base_value_rejects_zero():
    with pytest.raises(ValueError):
        base_value(0, 3)


def test_params_3_3_from_base_cases():
    assert get_params(BoundsTable(), 3, 3) == MethodParams(0, 0, 2, 2)


def test_params_4_4():
    table = ingest_seeds([(3, 4, 9, 9, "exact")])
    assert get_params(table, 4, 4) == MethodParams(3, 3, 8, 8)


def test_params_5_7_survey(survey_table):
    assert tuple(get_params(survey_table, 5, 7)) == (22, 47, 61 - 1, 86)


def test_params_missing_premise():
    with pytest.raises(MissingPremise):
        get_params(BoundsTable(), 4, 4)


def test_ingest_exact_record():
    table = ingest_seeds([(3, 5, 14, 14, "exact")])
    e = table.get(3, 5)
    assert (e.lower, e.upper, e.provenance) == (14, 14, Provenance.SEED)


def test_ingest_merges_symmetric_duplicates():
    table = ingest_seeds([(5, 6, 58, 87, "survey"), (6, 5, 1, 87, "survey")])
    assert list(table.entries) == [RamseyPoint(5, 6)]
    assert table.get(6, 5).upper == 87
    assert table.get(5, 6).lower == 58


def test_ingest_merge_takes_tightest():
    table = ingest_seeds([(7, 7, 205, 540, "survey"), (7, 7, 1, 539, "diag")])
    e = table.get(7, 7)
    assert (e.lower, e.upper, e.source) == (205, 539, "survey+diag")


def test_base_case_beats_seed():
    with pytest.warns(SeedWarning):
        table = ingest_seeds([(2, 9, 5, 5, "bogus")])
    assert table.get(2, 9).upper == 9
    assert table.get(9, 2).lower == 9


def test_inconsistent_merge():
    with pytest.raises(InconsistentSeed):
        ingest_seeds([(4, 6, 36, 41, "x"), (6, 4, 50, 60, "y")])


def test_malformed_records():
    with pytest.raises(MalformedRecord):
        ingest_seeds([(4, 6, 41, 36, "x")])
    with pytest.raises(MalformedRecord):
        parse_seed_csv("3,4,nine,9\n")
    with pytest.raises(MalformedRecord):
        parse_seed_csv("3,4\n")


def test_csv_parsing():
    text = "# revision: test-rev\n# comment\n\n3,4,9,9,exact\n4,6,?,41,survey\n5,5,43,48\n"
    records, rev = parse_seed_csv(text)
    assert rev == "test-rev"
    assert records[1].lower == 1
    assert records[2].source == ""
    assert len(records) == 3


def test_lower_above_upper_is_hard_error():
    with pytest.raises(InconsistencyDetected):
        BoundEntry(10, 9, Provenance.SEED)


def test_base_cells_are_read_only():
    with pytest.raises(ValueError):
        BoundsTable().set(2, 5, BoundEntry(5, 5, Provenance.SEED))


def test_packaged_survey_seeds(survey_table):
    assert survey_table.revision.startswith("Radziszowski DS1.15")
    assert survey_table.get(5, 6).upper == 87
    assert survey_table.get(10, 10).upper == 23327
    for pt, e in survey_table:
        assert e.lower <= e.upper


def test_load_json_roundtrip(tmp_path):
    path = tmp_path / "t.json"
    path.write_text('{"revision": "r", "cells": [{"m": 3, "n": 4, "lower": 9, "upper": 9}]}')
    assert load_seeds(path).get(4, 3).upper == 9
    path.write_text('{"cells": [{"m": 3}]}')
    with pytest.raises(MalformedRecord):
        load_seeds(path)


seed_records = st.lists(
    st.tuples(st.integers(1, 12), st.integers(1, 12), st.integers(1, 50), st.integers(0, 50)).map(
        lambda t: (t[0], t[1], t[2], t[2] + t[3], "")
    ),
    max_size=30,
)


@given(seed_records)
def test_ingest_invariants(records):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SeedWarning)
        try:
            table = ingest_seeds(records)
        except InconsistentSeed:
            return
    for pt, e in table:
        assert e.lower <= e.upper
        assert table.get(pt.n, pt.m) is table.get(pt.m, pt.n)
    for m in range(1, 13):
        assert table.upper(2, m) == m and table.upper(m, 2) == m
        assert table.upper(1, m) == 1
