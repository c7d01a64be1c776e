import json

import pytest

from partbij.series import TruncatedSeries, equal_in_box
from partbij.verify import (
    IDENTITY_IDS,
    THEOREM_IDS,
    DegenerateParams,
    SuiteReport,
    UnboundedBox,
    VerificationReport,
    VerifyError,
    default_box,
    f_recurrence,
    identity_defaults,
    lhs_series,
    rhs_series,
    run_suite,
    run_verifier,
    table_bessenrodt,
    verify_color_conjugate,
    verify_euler_refinement,
    verify_functional_equation,
    verify_furtherwork,
    verify_identity,
    verify_li_yee,
    verify_opposite_schmidt,
    verify_recurrence,
    verify_schmidt,
    verify_schmidt_refinement,
    verify_table,
)

SMALL = {
    "thm3.1": ({}, {"q": 6, "z": 12}),
    "thm3.2": ({}, {"q": 6, "z": 6}),
    "eq3": ({}, {"q": 4, "z": 8}),
    "thm4.1": ({}, {"q": 8, "z": 8}),
    "thm4.2": ({}, {"q": 8, "z": 8}),
    "thm5.1": ({}, {"q": 6, "z": 6}),
    "thm5.2": ({}, {"q": 6, "z": 6}),
    "thm8.1": ({"t": 3, "r": 2}, {"q": 6, "z": 6}),
    "thm8.2": ({"t": 2}, {"q": 5, "z1": 3, "z2": 3}),
    "thm9": ({"t": 2, "r": 2}, {"s": 8, "q": 8, "z": 8}),
    "cor10": ({"t": 3, "r": 2}, {"q": 6, "z": 6}),
    "eq14": ({"n": 3}, {"q": 8, "z": 8}),
}


@pytest.mark.parametrize("ident", IDENTITY_IDS)
def test_identity_passes_in_small_box(ident):
    params, box = SMALL[ident]
    report = verify_identity(ident, params=params, box=box)
    assert report.passed, report.first_mismatch
    assert report.status == "pass"
    assert report.coefficients_checked > 0
    assert report.first_mismatch is None


@pytest.mark.parametrize("ident", IDENTITY_IDS)
def test_fault_injection_is_caught(ident):
    params, box = SMALL[ident]
    report = verify_identity(ident, params=params, box=box,
                             perturb={"q": 1})
    assert not report.passed
    assert report.status == "fail"
    assert report.first_mismatch is not None
    mono = report.first_mismatch["monomial"]
    assert report.first_mismatch["lhs"] != report.first_mismatch["rhs"]
    # the report is json-clean
    json.dumps(report.to_json())
    assert all(isinstance(v, int) for v in mono.values())


def test_fault_injection_names_the_exact_monomial():
    report = verify_identity("thm5.1", box={"q": 6, "z": 6},
                             perturb={"q": 3, "z": 2})
    assert report.first_mismatch["monomial"] == {"q": 3, "z": 2}


def test_report_json_shape():
    report = verify_identity("thm3.1", box={"q": 4, "z": 8})
    data = report.to_json()
    assert data["id"] == "thm3.1"
    assert data["status"] == "pass"
    assert data["coefficients_checked"] == report.coefficients_checked
    assert "elapsed_ms" in data and "first_mismatch" not in data


def test_lhs_rejects_non_series_id():
    with pytest.raises(VerifyError):
        lhs_series("schmidt", {}, {"q": 4})
    with pytest.raises(VerifyError):
        rhs_series("table1", {}, {"q": 4})


def test_box_variable_set_is_checked():
    with pytest.raises(VerifyError):
        lhs_series("thm3.1", {}, {"q": 4})
    with pytest.raises(VerifyError):
        rhs_series("thm3.1", {}, {"q": 4, "z": 4, "s": 4})


def test_unbounded_and_degenerate_params():
    with pytest.raises(UnboundedBox):
        lhs_series("cor10", {"t": 1, "r": 1}, {"q": 4, "z": 4})
    with pytest.raises(DegenerateParams):
        rhs_series("cor10", {"t": 1, "r": 1}, {"q": 4, "z": 4})
    with pytest.raises(DegenerateParams):
        verify_opposite_schmidt(1, 2)
    with pytest.raises(DegenerateParams):
        verify_opposite_schmidt(2, 1)


def test_special_case_collapse():
    # cor10 at t=2, r=2 collapses to the first-part identity thm5.1
    box = {"q": 6, "z": 6}
    assert equal_in_box(rhs_series("cor10", {"t": 2, "r": 2}, box),
                        rhs_series("thm5.1", {}, box))
    assert equal_in_box(lhs_series("cor10", {"t": 2, "r": 2}, box),
                        lhs_series("thm5.1", {}, box))


def test_defaults_cover_every_identity():
    for ident in IDENTITY_IDS:
        params = identity_defaults(ident)
        box = default_box(ident, params)
        assert box
        report = verify_identity(ident)
        assert report.passed
        break  # full default boxes run in the suite; one here keeps this fast
    assert default_box("thm8.2", {"t": 3}) == \
        {"q": 8, "z1": 4, "z2": 4, "z3": 4}
    with pytest.raises(VerifyError):
        default_box("nope")


def test_counting_verifiers_pass_small():
    assert verify_schmidt(n_max=8).passed
    assert verify_schmidt_refinement(n_max=8).passed
    assert verify_euler_refinement(n_max=12).passed
    assert verify_li_yee(2, n_max=6).passed
    assert verify_color_conjugate(2, 2, size_max=10).passed
    assert verify_opposite_schmidt(2, 2, k_max=4, n_max=6).passed
    assert verify_recurrence(2, n_max=4).passed
    assert verify_functional_equation(2).passed
    assert verify_table(7).passed
    assert verify_furtherwork(m_max=3, size_max=12).passed


def test_functional_equation_fault_injection():
    report = verify_functional_equation(2, perturb={"q": 1, "s": 2})
    assert not report.passed
    assert report.first_mismatch["monomial"] == {"q": 1, "s": 2}


def test_recurrence_matches_enumeration_columns():
    box = {"q": 6, "s": 10}
    for n in range(4):
        f = f_recurrence(n, 2, box)
        assert isinstance(f, TruncatedSeries)
    report = verify_recurrence(2, n_max=3, box=box)
    assert report.passed


def test_table_rows_are_sorted_by_weight():
    rows = table_bessenrodt(7)
    weights = [w for w, _, _ in rows]
    assert weights == sorted(weights, reverse=True)
    assert len(rows) == 5


def test_run_verifier_dispatches_every_id():
    cheap = {
        "schmidt": dict(n=6),
        "prop1": dict(n=8),
        "cor2": dict(n=6),
        "thm6": dict(t=2, n=5),
        "thm7": dict(t=2, r=2, n=8),
        "cor11": dict(t=2, r=2, k=3, n=5),
        "eq20": dict(t=2, n=3),
        "eq24": dict(t=2),
        "table1": dict(n=7),
        "furtherwork": dict(m=3, n=10),
    }
    for ident in THEOREM_IDS:
        if ident in SMALL:
            params, box = SMALL[ident]
            report = run_verifier(ident, box=box, **params)
        else:
            report = run_verifier(ident, **cheap[ident])
        assert report.id == ident
        assert report.passed, (ident, report.first_mismatch)


def test_run_verifier_rejects_unknown_id():
    with pytest.raises(VerifyError):
        run_verifier("thm99")


def test_suite_quick_is_green():
    suite = run_suite(level="quick")
    assert suite.level == "quick"
    assert suite.passed
    assert suite.failures() == []
    assert len(suite.reports) == 69
    assert [r.id for r in suite.reports] == sorted(
        (r.id for r in suite.reports), key=THEOREM_IDS.index
    )
    data = suite.to_json()
    assert data["passed"] is True
    assert len(data["reports"]) == 69


def test_suite_threads_agree():
    one = run_suite(level="quick", threads=1)
    two = run_suite(level="quick", threads=4)
    strip = lambda s: [
        {k: v for k, v in r.to_json().items() if k != "elapsed_ms"}
        for r in s.reports
    ]
    assert strip(one) == strip(two)


def test_suite_report_failure_accounting():
    good = VerificationReport("thm3.1", {}, {"q": 2, "z": 4}, "pass", 5, 0.1)
    bad = VerificationReport("thm3.2", {}, {"q": 2, "z": 2}, "fail", 5, 0.1,
                             first_mismatch={"monomial": {"q": 1},
                                             "lhs": 0, "rhs": 1})
    suite = SuiteReport("quick", [good, bad])
    assert not suite.passed
    assert suite.failures() == [bad]
    assert suite.to_json()["passed"] is False
