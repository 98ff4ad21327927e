"""Eulerovy součiny (q^t; q^t)_∞ a Dedekindova η s posunem q^{±1/24}."""
from __future__ import annotations
from fractions import Fraction
from typing import Iterator, Tuple

from series.rings import QQ, CoefficientRing, ExactRational
from series.truncated import QShiftedSeries, TruncatedSeries
from utils.log import get_logger

log = get_logger(__name__)


def pentagonal_terms(limit: int) -> Iterator[Tuple[int, int]]:
    """
    Dvojice (exponent, znaménko) pentagonální věty ∏(1−q^n) = Σ (−1)^m q^{m(3m−1)/2}
    pro všechna m ∈ ℤ s exponentem < limit, v pořadí m = 0, 1, −1, 2, −2, …
    """
    if limit <= 0:
        return
    yield 0, 1
    m = 1
    while True:
        sign = -1 if m % 2 else 1
        low = m * (3 * m - 1) // 2
        high = m * (3 * m + 1) // 2
        if low >= limit:
            break
        yield low, sign
        if high < limit:
            yield high, sign
        m += 1


def euler_product(t: int, N: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
    """
    (q^t; q^t)_∞ do přesnosti N přes pentagonální větu (bez násobení činitelů).

    Args:
        t: Krok součinu, t ≥ 1
        N: Přesnost
        ring: Okruh koeficientů

    Returns:
        Řada s koeficienty ±1 na exponentech t·ω
    """
    if t < 1:
        raise ValueError(f"Krok Eulerova součinu musí být kladný, zadáno t={t}.")
    coeffs = [ring.zero] * N
    for exponent, sign in pentagonal_terms((N - 1) // t + 1):
        coeffs[exponent * t] = ring.coerce(sign)
    return TruncatedSeries(ring, tuple(coeffs))


def euler_power(t: int, a: int, N: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
    """
    (q^t; q^t)_∞^a, mocnina počítaná nad QQ Millerovou rekurencí a pak dosazená q → q^t.

    Args:
        t: Krok součinu
        a: Celý (i záporný) exponent
        N: Přesnost výsledku
        ring: Cílový okruh; mod ℓ se výsledek redukuje
    """
    inner = (N - 1) // t + 1
    body = euler_product(1, inner).power(a).substitute(t, N)
    if isinstance(ring, ExactRational):
        return body
    return body.reduce_mod(ring.ell)


def eta_shifted(N: int) -> QShiftedSeries:
    """η = q^{1/24} (q;q)_∞."""
    return QShiftedSeries(Fraction(1, 24), euler_product(1, N))


def eta_inverse_shifted(N: int) -> QShiftedSeries:
    """1/η = q^{−1/24} Σ p(n) q^n."""
    log.debug(f"[eta_inverse_shifted] inverting (q;q) at N={N}")
    return QShiftedSeries(Fraction(-1, 24), euler_product(1, N).invert())
