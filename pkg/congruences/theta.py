"""Řada θ_ℓ přes jedinou třídu pentagonálních indexů."""
from __future__ import annotations
from typing import Iterator, Tuple

from congruences.context import prime_context
from congruences.report import ReportParams, VerificationReport, compare_series, stopwatch
from series.products import euler_product
from series.rings import QQ
from series.truncated import TruncatedSeries


def theta_terms(ell: int, N: int) -> Iterator[Tuple[int, int]]:
    """
    Dvojice (w_ℓ(s), (−1)^{y_ℓ(s)}) pro všechna s s w_ℓ(s) < N.

    w_ℓ(s) = (3ℓs² + ℓ·m_ℓ·s)/2 a y_ℓ(s) = s + α_ℓ + 1.
    """
    ctx = prime_context(ell)

    def w(s: int) -> int:
        return (3 * ell * s * s + ell * ctx.m_ell * s) // 2

    def sign(s: int) -> int:
        return -1 if (s + ctx.alpha + 1) % 2 else 1

    yield w(0), sign(0)
    s = 1
    while True:
        hit = False
        for t in (s, -s):
            if w(t) < N:
                hit = True
                yield w(t), sign(t)
        if not hit:
            break
        s += 1


def theta_series(ell: int, N: int) -> TruncatedSeries:
    """θ_ℓ(q) do přesnosti N s celočíselnými koeficienty (nad QQ)."""
    coeffs = [0] * N
    for exponent, sign in theta_terms(ell, N):
        if exponent < N:
            coeffs[exponent] += sign
    return TruncatedSeries.from_values(coeffs, QQ)


def verify_theta(ell: int, N: int) -> VerificationReport:
    """
    θ_ℓ = (−1)^{α_ℓ+1}·(q^ℓ; q^ℓ)_∞ člen po členu.

    V details je i výsledek porovnání s tištěným znaménkem −(−1/ℓ).
    """
    ctx = prime_context(ell)
    with stopwatch() as watch:
        theta = theta_series(ell, N)
        product = euler_product(ell, N)
        derived = product.scale(ctx.theta_sign)
        printed_ok = theta == product.scale(ctx.printed_sign)
    return compare_series(
        "theta", ReportParams(ell=ell, N=N), theta, derived, watch.elapsed_ms,
        details={"theta_sign": ctx.theta_sign, "printed_sign": ctx.printed_sign,
                 "printed_sign_matches": printed_ok},
    )
