"""Generující funkce 𝒫_ℓ(q) = Σ p(ℓn − δ_ℓ) q^n a 𝒯_ℓ(q) = Σ Tr_{ℓ−1}(ℓn) q^n."""
from __future__ import annotations

from congruences.context import prime_context
from modforms.cusp import cusp_dimension
from modforms.hecke import u_operator
from recurrences.kernel import g_kernel
from recurrences.pentagonal import PARTITIONS, pentagonal_range
from recurrences.traces import trace_series
from series.rings import QQ, ModResidue
from series.truncated import TruncatedSeries
from utils.log import get_logger

log = get_logger(__name__)

RATIONAL = "rational"
FAST = "fast"


def P_ell_series(ell: int, N: int, raw: bool = False) -> TruncatedSeries:
    """
    𝒫_ℓ do přesnosti N; p záporného argumentu je 0.

    Args:
        ell: Prvočíslo ℓ ≥ 5
        N: Přesnost
        raw: True vrací celá čísla před redukcí (nad QQ)
    """
    ctx = prime_context(ell)
    PARTITIONS.ensure(ell * (N - 1) + 1)
    values = [PARTITIONS(ell * n - ctx.delta) for n in range(N)]
    if raw:
        return TruncatedSeries.from_values(values, QQ)
    return TruncatedSeries.from_values(values, ModResidue(ell))


def _trace_rational(ell: int, N: int) -> TruncatedSeries:
    trace = trace_series(ell - 1, ell * N)
    return u_operator(trace.series.reduce_mod(ell), ell, N)


def _trace_fast(ell: int, N: int) -> TruncatedSeries:
    """
    Tr_{ℓ−1}(ℓn) ≡ −R_{(ℓ−1)/2}(ℓn) (mod ℓ), protože E_{ℓ−1} ≡ 1 (mod ℓ).

    Celý výpočet běží ve zbytcích mod ℓ.
    """
    k = (ell - 1) // 2
    kernel = g_kernel(k)
    inv_den = pow(kernel.denominator, -1, ell)
    PARTITIONS.ensure(ell * (N - 1) + 1)
    coeffs = [0] * N
    for n in range(1, N):
        arg = ell * n
        total = -(kernel.numerator(arg, 0) % ell) * (PARTITIONS(arg) % ell)
        for idx in pentagonal_range(arg):
            term = (kernel.numerator(arg, idx.m) % ell) * (PARTITIONS(arg - idx.omega) % ell)
            total += term if idx.sign > 0 else -term
        coeffs[n] = -total * inv_den % ell
    return TruncatedSeries(ModResidue(ell), tuple(coeffs))


def T_ell_series(ell: int, N: int, route: str = RATIONAL) -> TruncatedSeries:
    """
    𝒯_ℓ mod ℓ do přesnosti N.

    Args:
        ell: Prvočíslo ℓ ≥ 5
        N: Přesnost
        route: "rational" (stopová řada nad QQ v přesnosti ℓN, redukce, U_ℓ)
               nebo "fast" (přímo mod ℓ)

    Raises:
        NotEllIntegral: stopová řada má koeficient se jmenovatelem dělitelným ℓ
    """
    prime_context(ell)
    if cusp_dimension(ell - 1) == 0:
        return TruncatedSeries.zero(N, ModResidue(ell))
    log.debug(f"[T_ell_series] ell={ell} N={N} route={route}")
    if route == RATIONAL:
        return _trace_rational(ell, N)
    if route == FAST:
        return _trace_fast(ell, N)
    raise ValueError(f"Neznámá cesta výpočtu stop: {route}")
