import csv
import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lengthlab.corpus import parse_corpus
from lengthlab.errors import InputError
from lengthlab.report import CAPACITY, FIELD_NAMES, TheoremReport, emit_report, parse_json_report
from lengthlab.runner import SuiteOptions, run_suite, suite_passed

SMALL = """
group S5 = symmetric(5) expect lambda=1, hstar=2
group C5inv = cyclic(5) with automorphism perm("(1 4)(2 3)") expect depth=1
group AGL8 = agl1(GF(8)) with automorphism frobenius() expect h=2
"""


def test_single_passing_line():
    r = TheoremReport.compare("S5", "expect.lambda", 1, 1, relation="==")
    assert emit_report([r]).strip() == "S5             expect.lambda          1 == 1  PASS"
    r = TheoremReport.compare("G", "lambda-bound", 1, 3)
    line = emit_report([r])
    assert "1 <= 3" in line and "PASS" in line and r.slack == 2


def test_failing_and_skipped_lines():
    bad = TheoremReport.compare("G", "hstar-bound", 4, 3)
    assert not bad.passed and bad.failed and "FAIL" in emit_report([bad])
    cap = TheoremReport.skipped("G", "structure.fstar", CAPACITY, "too big")
    assert not cap.failed and "CAPACITY" in emit_report([cap])


def test_empty_reports():
    assert emit_report([], "json").strip() == "[]"
    assert emit_report([], "text") == ""
    assert run_suite([]) == []


def test_csv_header_matches_fields():
    out = emit_report([TheoremReport.compare("G", "c", 0, 0)], "csv")
    header = next(csv.reader(io.StringIO(out)))
    assert header == FIELD_NAMES
    assert FIELD_NAMES[:8] == ["entry", "checker", "hypothesis", "lhs", "rhs", "slack", "passed", "timing"]


def test_unknown_format():
    with pytest.raises(InputError):
        emit_report([], "yaml")


def test_ordering_is_corpus_then_checker():
    rs = [TheoremReport.compare("B", "z", 0, 0), TheoremReport.compare("A", "y", 0, 0),
          TheoremReport.compare("B", "a", 0, 0)]
    lines = emit_report(rs, order={"B": 0, "A": 1}).splitlines()
    assert [ln.split()[:2] for ln in lines] == [["B", "a"], ["B", "z"], ["A", "y"]]


reports = st.builds(
    TheoremReport.compare,
    st.text("abcXYZ_", min_size=1, max_size=6),
    st.sampled_from(["hstar-bound", "expect.order", "lambda-step"]),
    st.integers(0, 50),
    st.integers(0, 50),
    relation=st.sampled_from(["<=", "=="]),
    detail=st.text(max_size=10),
    timing=st.floats(0, 5, allow_nan=False),
)


@given(st.lists(reports, max_size=6))
def test_json_round_trip_is_byte_stable(rs):
    text = emit_report(rs, "json")
    back = parse_json_report(text)
    assert emit_report(back, "json") == text
    assert sorted(map(repr, back)) == sorted(map(repr, rs))


def test_suite_on_small_corpus_round_trips_and_is_deterministic():
    entries = parse_corpus(SMALL)
    a = run_suite(entries)
    b = run_suite(entries)
    assert suite_passed(a)
    assert emit_report(a) == emit_report(b)
    assert emit_report(a, "json", include_timing=False) == emit_report(b, "json", include_timing=False)
    j = emit_report(a, "json")
    assert emit_report(parse_json_report(j), "json") == j
    assert json.loads(j)[0]["entry"] == "S5"


def test_parallel_run_preserves_order():
    entries = parse_corpus(SMALL)
    serial = run_suite(entries)
    parallel = run_suite(entries, SuiteOptions(jobs=2))
    assert emit_report(serial) == emit_report(parallel)


def test_only_filter_and_capacity_status():
    entries = parse_corpus(SMALL)
    rs = run_suite(entries, SuiteOptions(only=("lambda-bound",)))
    assert {r.checker for r in rs} == {"lambda-bound"}
    rs = run_suite(parse_corpus("group S6 = symmetric(6) expect lambda=1"), SuiteOptions(enumeration_limit=100))
    assert {r.hypothesis for r in rs} == {CAPACITY}
    assert suite_passed(rs)


def test_failed_golden_fails_the_suite():
    rs = run_suite(parse_corpus("group S4 = symmetric(4) expect h=2"))
    assert not suite_passed(rs)
    [bad] = [r for r in rs if r.failed]
    assert (bad.checker, bad.lhs, bad.rhs) == ("expect.h", 3, 2)
