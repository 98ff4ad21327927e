from fractions import Fraction

import orjson
import pytest

from congruences.checks import verify_cor12
from congruences.report import (
    ReportParams,
    VerificationReport,
    compare_series,
    format_value,
    set_report_timings,
)
from constants import REPORT_FORMAT, Status
from persistence.json_io import dump_reports, dump_series, load_reports, series_to_dict, write_reports
from series.rings import ModResidue
from series.truncated import TruncatedSeries


@pytest.fixture
def no_timings():
    set_report_timings(False)
    yield
    set_report_timings(True)


def _failing() -> VerificationReport:
    lhs = TruncatedSeries.from_values([1, 2, 3])
    rhs = TruncatedSeries.from_values([1, 2, Fraction(7, 2)])
    return compare_series("demo", ReportParams(N=3), lhs, rhs)


def test_compare_series_reports_first_mismatch():
    report = _failing()
    assert report.status == Status.FAIL
    assert report.first_mismatch == 2
    assert (report.lhs, report.rhs) == ("3", "7/2")
    assert not report.passed


def test_fail_requires_witness():
    with pytest.raises(ValueError):
        VerificationReport("demo", ReportParams(), Status.FAIL)
    with pytest.raises(ValueError):
        VerificationReport("demo", ReportParams(), "maybe")


def test_format_value():
    assert format_value(Fraction(-1, 3)) == "-1/3"
    assert format_value(True) == "true"
    assert format_value(12) == "12"


def test_reports_round_trip(no_timings):
    reports = [verify_cor12(5, 20), _failing()]
    data = dump_reports(reports)
    doc = orjson.loads(data)
    assert doc["meta"] == {"format": REPORT_FORMAT, "version": 1}
    assert load_reports(data) == reports


def test_dump_is_reproducible(no_timings):
    first = dump_reports([verify_cor12(7, 30)])
    second = dump_reports([verify_cor12(7, 30)])
    assert first == second
    assert b'"elapsed_ms": 0.0' in first


def test_write_and_load_file(tmp_path, no_timings):
    path = tmp_path / "reports.json"
    write_reports(path, [verify_cor12(11, 10)])
    loaded = load_reports(path)
    assert loaded[0].check == "cor12"
    assert loaded[0].params.ell == 11


def test_load_rejects_foreign_document():
    with pytest.raises(ValueError):
        load_reports(b'{"meta": {"format": "other", "version": 1}, "reports": []}')
    with pytest.raises(ValueError):
        load_reports(b'{"meta": {"format": "partcong-report", "version": 99}, "reports": []}')


def test_series_document():
    rational = series_to_dict("E", TruncatedSeries.from_values([1, Fraction(1, 2)]), {"k": 2, "ell": None})
    assert rational["coefficients"] == ["1", "1/2"]
    assert rational["params"] == {"k": 2}
    residues = series_to_dict("P", TruncatedSeries.from_values([0, 11], ModResidue(13)), {})
    assert residues["coefficients"] == [0, 11]
    assert residues["ring"] == "F_13"
    doc = orjson.loads(dump_series([rational, residues]))
    assert doc["meta"]["format"] == "partcong-series"
    assert len(doc["series"]) == 2
