from fractions import Fraction

import pytest
import sympy

from constants import BETA, DEFAULT_K_RANGE, EISENSTEIN_ONLY_K
from modforms.forms import delta, eisenstein
from recurrences.factorials import FactorialKit
from recurrences.kernel import eisenstein_binomial, g_coeff, g_kernel, prefactor
from recurrences.pentagonal import omega, p_euler, pentagonal_range
from recurrences.r_series import (
    BRANCH_DELTA,
    BRANCH_EISENSTEIN,
    BRANCH_EULER,
    BRANCH_TRACE,
    PRINTED,
    default_branch,
    expected_r_series,
    p_via_recurrence,
    r_coefficient,
    r_series_convolution,
    r_series_operator,
)
from recurrences.traces import TRACES, trace_series, trace_value, trace_value_or_compute
from series.rings import ModResidue
from tests.conftest import brute_partitions
from utils.errors import (
    DegenerateLeadingWeight,
    InsufficientPrecision,
    UnsupportedWeight,
)

CLOSED_FORM_K = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13)


# ---------- pentagonální čísla a p(n) ----------
def test_pentagonal_range_order():
    assert [(i.m, i.omega) for i in pentagonal_range(7)] == [(-1, 1), (1, 2), (-2, 5), (2, 7)]
    assert pentagonal_range(0) == []
    assert [i.sign for i in pentagonal_range(12)] == [1, 1, -1, -1, 1]


def test_pentagonal_range_is_complete():
    found = {i.omega for i in pentagonal_range(500)}
    expected = {omega(m) for m in range(-30, 31) if m and omega(m) <= 500}
    assert found == expected


def test_partition_values(partitions):
    assert p_euler(10) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert partitions(19) == 490
    assert partitions(-3) == 0
    assert all(partitions(n) == brute_partitions(n) for n in range(60))


def test_partition_values_against_sympy(partitions):
    for n in range(0, 1000, 37):
        assert partitions(n) == sympy.npartitions(n)


# ---------- faktoriály a jádro ----------
def test_factorials():
    assert FactorialKit.rising(3, 0) == 1
    assert FactorialKit.rising(3, 3) == 60
    assert FactorialKit.falling(5, 2) == 20
    assert FactorialKit.falling(7, 0) == 1
    assert FactorialKit.falling(-2, -1) == Fraction(-1, 2)


def test_prefactor():
    assert prefactor(0) == -1
    assert prefactor(1) == 1
    assert prefactor(2) == 3
    assert prefactor(6) == 9823275


def test_eisenstein_binomial():
    assert eisenstein_binomial(0) == 1
    assert eisenstein_binomial(1) == 0
    assert eisenstein_binomial(2) == 1
    assert eisenstein_binomial(6) == 210


def test_kernel_low_k():
    for n in range(0, 6):
        for m in range(-4, 5):
            assert g_coeff(0, n, m) == 1
            assert g_coeff(1, n, m) == -12 * n


def test_kernel_values():
    assert g_coeff(2, 1, 0) == 181
    assert g_coeff(2, 1, -1) == -59
    assert g_coeff(6, 0, 0) == 210


def test_kernel_residue():
    kernel = g_kernel(2)
    for n, m in ((1, 0), (3, 2), (7, -5)):
        assert kernel.mod(n, m, 13) == ModResidue(13).coerce(kernel.value(n, m))


# ---------- R_k ----------
def test_r_series_low_k():
    assert r_series_convolution(0, 20).series == -1
    assert r_series_convolution(1, 20).series.is_zero()
    assert r_coefficient(2, 1) == -240
    assert r_series_convolution(2, 50) == eisenstein(4, 50) * -1
    assert r_series_convolution(3, 5)[0] == -4


def test_r_six_matches_closed_form():
    r6 = r_series_convolution(6, 30)
    assert r6[0] == -210
    assert r6[1] == 47894112
    assert r6 == expected_r_series(6, 30)


@pytest.mark.parametrize("k", DEFAULT_K_RANGE)
def test_operator_matches_convolution(k):
    assert r_series_operator(k, 30) == r_series_convolution(k, 30)


@pytest.mark.slow
@pytest.mark.parametrize("k", DEFAULT_K_RANGE)
def test_operator_matches_convolution_long(k):
    assert r_series_operator(k, 100) == r_series_convolution(k, 100)


@pytest.mark.parametrize("k", CLOSED_FORM_K)
def test_closed_forms(k):
    assert r_series_convolution(k, 40) == expected_r_series(k, 40)


@pytest.mark.slow
@pytest.mark.parametrize("k", CLOSED_FORM_K)
def test_closed_forms_long(k):
    assert r_series_convolution(k, 200) == expected_r_series(k, 200)


def test_no_closed_form_for_twelve():
    with pytest.raises(UnsupportedWeight):
        expected_r_series(12, 10)


def test_printed_variant_constant():
    printed = r_series_operator(2, 5, variant=PRINTED)
    assert printed[0] == Fraction(1, 576)
    with pytest.raises(ValueError):
        r_series_operator(2, 5, variant="other")


# ---------- rekurence pro p(n) ----------
def test_default_branches():
    assert default_branch(0) == BRANCH_EULER
    assert default_branch(5) == BRANCH_EISENSTEIN
    assert default_branch(6) == BRANCH_DELTA
    assert default_branch(12) == BRANCH_TRACE


@pytest.mark.parametrize("k", range(0, 16))
def test_recurrences_reproduce_partitions(k, partitions):
    for n in range(1, 26):
        assert p_via_recurrence(n, k) == partitions(n)


@pytest.mark.parametrize("k", sorted(BETA))
def test_trace_branch_on_table_k(k, partitions):
    for n in range(1, 16):
        assert p_via_recurrence(n, k, BRANCH_TRACE) == partitions(n)


def test_recurrence_examples():
    assert p_via_recurrence(1, 2) == 1
    assert p_via_recurrence(2, 6) == 2


def test_branch_guards():
    with pytest.raises(UnsupportedWeight):
        p_via_recurrence(5, 6, BRANCH_EISENSTEIN)
    with pytest.raises(UnsupportedWeight):
        p_via_recurrence(5, 4, BRANCH_EULER)
    with pytest.raises(UnsupportedWeight):
        p_via_recurrence(5, 12, BRANCH_DELTA)
    with pytest.raises(ValueError):
        p_via_recurrence(0, 2)


def test_degenerate_weight_is_division_error():
    assert issubclass(DegenerateLeadingWeight, ZeroDivisionError)


# ---------- stopové řady ----------
def test_trace_twelve_is_beta_delta():
    assert trace_series(12, 30) == delta(30) * BETA[6]
    assert trace_value(12, 1) == BETA[6]
    assert trace_value(12, 2) == BETA[6] * -24


def test_trace_empty_space():
    assert trace_value(4, 7) == 0
    assert trace_value(14, 7) == 0
    with pytest.raises(UnsupportedWeight):
        trace_series(10, 20)


def test_trace_weight_24_lies_in_cusp_space():
    trace = trace_series(24, 100)
    assert trace[0] == 0
    assert trace.weight == 24


@pytest.mark.parametrize("two_k", range(12, 32, 2))
def test_traces_are_cuspidal(two_k):
    assert trace_series(two_k, 60)[0] == 0


def test_trace_value_needs_cache():
    trace_series(26, 20)
    assert trace_value(26, 5) == trace_series(26, 20)[5]
    with pytest.raises(InsufficientPrecision):
        trace_value(26, 10 ** 6)
    assert trace_value_or_compute(26, 25) == trace_series(26, 60)[25]


def test_eisenstein_only_k_have_no_trace():
    for k in EISENSTEIN_ONLY_K:
        assert r_series_convolution(k, 30) == eisenstein(2 * k, 30) * -eisenstein_binomial(k)


def test_trace_cache_verifies_entry_filled_without_check():
    TRACES.clear()
    trace_value_or_compute(26, 20)
    assert not TRACES.is_verified(26)
    trace_series(26, 30)
    assert TRACES.is_verified(26)
