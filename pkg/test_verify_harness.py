import json

import pytest

from errors import ParameterRangeError, UnknownCheckError
from logs import performance_tracker
from verify_harness import CHECK_NAMES, CHECKS, CheckSpec, Report, VerificationSuite, run_suite


def test_registry_lists_every_required_check():
    for name in [
        "rs_roundtrip", "q_is_p_of_inverse", "cells_partition", "hook_vs_enumeration",
        "thm_1_1_forward", "thm_1_1_converse", "sigma_cell_agreement", "z_equals_wpqm",
        "m_via_shape", "rank_m_oracle", "neg_rho_closed_form", "cell_size_triangle",
        "cor_1_3_identity", "carrell_pattern_symmetry", "good_full_avoids",
        "certify_soundness", "certification_coverage",
    ]:
        assert name in CHECK_NAMES
    assert len(set(CHECK_NAMES)) == len(CHECKS)


def test_run_suite_small_passes():
    report = run_suite(4)
    assert report.passed
    assert all(c.failures == 0 and c.first_failure is None for c in report.checks)

    identity = [c for c in report.checks if c.name == "cor_1_3_identity" and c.n == 4]
    assert identity[0].cases == 1
    assert identity[0].detail == "(2,2) 6=6"


def test_census_of_s7():
    report = run_suite(7, checks=["rs_roundtrip"])
    last = report.checks[-1]
    assert (last.name, last.n, last.cases, last.failures) == ("rs_roundtrip", 7, 5040, 0)
    assert [c.n for c in report.checks] == [2, 3, 4, 5, 6, 7]


def test_coverage_is_partial_at_six():
    report = run_suite(6, checks=["certification_coverage", "certify_soundness"])
    assert report.passed
    coverage = [c for c in report.checks if c.name == "certification_coverage" and c.n == 6][0]
    assert coverage.detail.startswith("certified ")
    assert not coverage.detail.endswith("(100.0%)")


def test_fixed_range_checks_ignore_n_max():
    report = run_suite(2, checks=["cell_size_triangle"])
    assert [c.n for c in report.checks] == list(range(2, 11))


def test_registry_order_wins_over_argument_order():
    report = run_suite(3, checks=["good_full_avoids", "rs_roundtrip"])
    assert [c.name for c in report.checks] == ["rs_roundtrip"] * 2 + ["good_full_avoids"] * 2


@pytest.mark.parametrize("n_max", [1, 10])
def test_n_max_range(n_max):
    with pytest.raises(ParameterRangeError):
        run_suite(n_max)


def test_unknown_check():
    with pytest.raises(UnknownCheckError):
        run_suite(3, checks=["no_such_check"])


def test_failures_are_counted_and_reproducible():
    broken = CheckSpec(
        name="odd_first_letter",
        cases=lambda n: range(n * 1000),
        predicate=lambda k: k % 2 == 0,
        describe=lambda k: f"k={k}",
    )
    suite = VerificationSuite(max_workers=4, chunk_size=7)
    result = suite.run_check(broken, 3)
    assert result.cases == 3000
    assert result.failures == 1500
    assert result.first_failure == "k=1"
    assert not result.passed


def test_exceptions_count_as_failures():
    def explode(k):
        if k == 5:
            raise ZeroDivisionError("boom")
        return True

    spec = CheckSpec("explodes", lambda n: range(10), explode, lambda k: f"k={k}")
    result = VerificationSuite(max_workers=1).run_check(spec, 2)
    assert result.failures == 1
    assert result.first_failure == "k=5 [ZeroDivisionError: boom]"


def test_summary_errors_count_as_failures():
    def summarize(n, cases):
        raise KeyError("missing")

    spec = CheckSpec("summarized", lambda n: range(4), lambda k: True, lambda k: f"k={k}",
                     summarize=summarize)
    result = VerificationSuite(max_workers=1).run_check(spec, 2)
    assert result.failures == 1
    assert not result.passed
    assert result.first_failure == result.detail == "summary failed [KeyError: 'missing']"


def test_certification_checks_pass_at_five():
    report = run_suite(5, checks=["certification_coverage", "certify_soundness"])
    assert report.passed
    assert [c.n for c in report.checks if c.name == "certify_soundness"] == [2, 3, 4, 5]


def test_wpq_census_and_shape_checks():
    report = run_suite(7, checks=["wpq_census", "m_via_shape", "rank_m_oracle", "thm_1_1_forward"])
    assert report.passed
    census = [c for c in report.checks if c.name == "wpq_census"]
    assert [c.cases for c in census] == [n - 1 for n in range(2, 8)]


def test_report_json_and_table():
    performance_tracker.reset()
    report = run_suite(3, checks=["rs_roundtrip"])
    data = json.loads(report.dumps())
    assert data["passed"] is True
    assert data["n_max"] == 3
    assert [c["cases"] for c in data["checks"]] == [2, 6]
    assert json.dumps(data, separators=(",", ":")) == report.dumps()

    frame = report.to_frame()
    assert list(frame["cases"]) == [2, 6]
    assert "PASS" in report.to_text()
    assert performance_tracker.get_stats()["total_cases"] == 8


def test_failed_report_text():
    report = Report(3)
    report.checks.extend(run_suite(2, checks=["rs_roundtrip"]).checks)
    report.checks[0].failures = 1
    report.checks[0].first_failure = "w=2,1"
    assert not report.passed
    assert "FAIL" in report.to_text()
