import pytest

from congruences.identities import (
    has_closed_form,
    verify_binomial_sums,
    verify_classical_anchor,
    verify_context,
    verify_eisenstein_reduction,
    verify_recurrences,
    verify_rk_identity,
    verify_routes,
    verify_trace_membership,
    verify_trace_routes,
)
from congruences import identities
from constants import Status
from modforms.cusp import cusp_membership
from modforms.forms import ModularFormExpansion
from recurrences.r_series import BRANCH_EISENSTEIN, BRANCH_TRACE
from recurrences import traces
from recurrences.traces import TRACES, trace_value_or_compute
from series.truncated import TruncatedSeries


def test_closed_form_set():
    assert [k for k in range(16) if not has_closed_form(k)] == [12, 14, 15]


@pytest.mark.parametrize("k", [0, 1, 2, 6, 13])
def test_rk_identity(k):
    report = verify_rk_identity(k, 40)
    assert report.status == Status.PASS
    assert report.check == "rk"


def test_rk_zero_mentions_printed_constant():
    assert verify_rk_identity(0, 10).details["printed_constant"] == 1


def test_rk_zero_reports_printed_variant_as_failing():
    details = verify_rk_identity(0, 10).details
    assert details["printed_status"] == Status.FAIL
    assert details["printed_first_mismatch"] == 0


def test_trace_membership_rechecked_after_unverified_cache(monkeypatch):
    monkeypatch.setattr(traces, "MEMBERSHIP_CAP", 400)
    TRACES.clear()
    trace_value_or_compute(24, 60)
    assert not TRACES.is_verified(24)
    calls = []

    def counting(f, basis):
        calls.append(basis.dimension)
        return cusp_membership(f, basis)

    monkeypatch.setattr(identities, "cusp_membership", counting)
    report = verify_trace_membership(24, 100)
    assert report.passed
    assert calls == [2]
    assert report.details["checked_to"] == 100


def test_trace_membership_fails_outside_cusp_space(monkeypatch):
    bogus = ModularFormExpansion(24, TruncatedSeries.from_values([0, 1] + [0] * 38))
    monkeypatch.setattr(identities, "trace_series", lambda two_k, N, verify=True: bogus)
    report = verify_trace_membership(24, 40)
    assert report.status == Status.FAIL
    # báze je echelonizovaná, reziduum je nulové v q^1 … q^dim
    assert report.first_mismatch >= 3


def test_rk_without_closed_form_checks_trace():
    report = verify_rk_identity(12, 40)
    assert report.check == "trace"
    assert report.status == Status.PASS
    assert report.details["dimension"] == 2
    assert len(report.details["coordinates"]) == 2


def test_trace_membership_one_dimensional():
    report = verify_trace_membership(12, 30)
    assert report.passed
    assert report.details["coordinates"] == ["-33108590592/691"]


@pytest.mark.parametrize("k", [0, 3, 6, 12])
def test_routes(k):
    assert verify_routes(k, 25).status == Status.PASS


def test_trace_routes():
    assert verify_trace_routes(13, 10).status == Status.PASS


def test_classical_anchor():
    report = verify_classical_anchor(60)
    assert report.status == Status.PASS
    assert report.params.N == 60


@pytest.mark.parametrize("k", [0, 1, 2, 5, 6, 12])
def test_recurrences(k):
    report = verify_recurrences(k, 40)
    assert report.status == Status.PASS
    assert report.params.n_max == 40


def test_recurrence_trace_branch():
    report = verify_recurrences(8, 20, BRANCH_TRACE)
    assert report.status == Status.PASS
    assert report.details["branch"] == BRANCH_TRACE


@pytest.mark.parametrize("ell", [5, 13, 31, 97])
def test_context(ell):
    report = verify_context(ell)
    assert report.status == Status.PASS
    assert len(set(report.details["rho_routes"].values())) == 1


def test_context_invalid_prime_is_failure():
    report = verify_context(9)
    assert report.status == Status.FAIL
    assert report.first_mismatch == 0


def test_binomial_sums():
    assert verify_binomial_sums(64).status == Status.PASS


@pytest.mark.parametrize("ell", [5, 13, 31])
def test_eisenstein_reduction(ell):
    assert verify_eisenstein_reduction(ell, 60).status == Status.PASS


def test_recurrence_reports_effective_default_branch():
    assert verify_recurrences(3, 10).details["branch"] == BRANCH_EISENSTEIN
