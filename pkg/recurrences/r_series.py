"""R_k dvěma nezávislými cestami a rekurence pro p(n) z identit pro R_k."""
from __future__ import annotations
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List, Optional

from constants import BETA, EISENSTEIN_ONLY_K
from modforms.arith import bernoulli, sigma
from modforms.forms import DELTA_2K_TABLE, ModularFormExpansion, delta_2k, eisenstein
from recurrences.kernel import eisenstein_binomial, g_kernel, prefactor
from recurrences.pentagonal import PARTITIONS, pentagonal_range
from series.products import eta_inverse_shifted, eta_shifted
from series.rings import QQ
from series.truncated import QShiftedSeries, TruncatedSeries
from utils.errors import DegenerateLeadingWeight, IdentityViolation, UnsupportedWeight
from utils.log import get_logger

log = get_logger(__name__)

NORMALIZED = "normalized"
PRINTED = "printed"


def _derivatives(f: QShiftedSeries, count: int) -> List[QShiftedSeries]:
    out = [f]
    for _ in range(count):
        out.append(out[-1].derive())
    return out


def r_series_operator(k: int, N: int, variant: str = NORMALIZED) -> ModularFormExpansion:
    """
    R_k z derivací η a 1/η.

    Normalizovaná varianta:
        R_k = −24^k P_k Σ_{r+s=k} (−1)^r (2r−1)/((2r)!(2s)!) · D^r(1/η) · D^s(η)
    a shoduje se člen po členu s konvolucí přes g_k. Varianta "printed" používá
    váhy (2s−1) bez faktoru −24^k; jde jen o porovnávací výstup, modulární není.

    Args:
        k: Index k ≥ 0
        N: Přesnost
        variant: "normalized" nebo "printed"

    Returns:
        Rozvoj váhy 2k s celými exponenty
    """
    if variant not in (NORMALIZED, PRINTED):
        raise ValueError(f"Neznámá varianta operátoru R_k: {variant}")
    inv_eta = _derivatives(eta_inverse_shifted(N), k)
    eta = _derivatives(eta_shifted(N), k)
    total: Optional[QShiftedSeries] = None
    for r in range(k + 1):
        s = k - r
        weight_index = 2 * r - 1 if variant == NORMALIZED else 2 * s - 1
        weight = Fraction((-1) ** r * weight_index, factorial(2 * r) * factorial(2 * s))
        term = (inv_eta[r] * eta[s]) * weight
        total = term if total is None else total + term
    scale = prefactor(k)
    if variant == NORMALIZED:
        scale = -(24 ** k) * scale
    series = (total * scale).to_integral()
    log.debug(f"[r_series_operator] R_{k} ({variant}) at N={N}")
    return ModularFormExpansion(2 * k, series)


def pentagonal_sum_numerator(k: int, n: int, include_zero: bool = True) -> int:
    """L·Σ_m (−1)^{m+1} g_k(n, m) p(n − ω(m)) jako celé číslo (L je jmenovatel jádra)."""
    kernel = g_kernel(k)
    total = -kernel.numerator(n, 0) * PARTITIONS(n) if include_zero else 0
    for idx in pentagonal_range(n):
        term = kernel.numerator(n, idx.m) * PARTITIONS(n - idx.omega)
        total += term if idx.sign > 0 else -term
    return total


def r_coefficient(k: int, n: int) -> Fraction:
    """Koeficient u q^n v R_k (konvoluční cesta včetně m = 0)."""
    return Fraction(pentagonal_sum_numerator(k, n), g_kernel(k).denominator)


def r_series_convolution(k: int, N: int) -> ModularFormExpansion:
    """
    R_k = Σ_n Σ_{m∈ℤ} (−1)^{m+1} g_k(n, m) p(n − ω(m)) q^n.

    Člen m = 0 je zahrnut, takže R_0 = −1 a R_1 = 0.
    """
    PARTITIONS.ensure(N)
    coeffs = tuple(r_coefficient(k, n) for n in range(N))
    log.debug(f"[r_series_convolution] R_{k} at N={N}")
    return ModularFormExpansion(2 * k, TruncatedSeries(QQ, coeffs))


def expected_r_series(k: int, N: int) -> ModularFormExpansion:
    """
    Uzavřený tvar R_k pro k ∈ {0, …, 11, 13} mimo k = 12:
    −C(2k−2, k−2)E_{2k} a pro tabulková k navíc −β_k Δ_{2k}.
    """
    if k == 1:
        return ModularFormExpansion(2, TruncatedSeries.zero(N))
    if k != 0 and k not in EISENSTEIN_ONLY_K and k not in DELTA_2K_TABLE:
        raise UnsupportedWeight(f"Pro k={k} není uzavřený tvar R_k znám.")
    form = eisenstein(2 * k, N) * (-eisenstein_binomial(k))
    if k in DELTA_2K_TABLE:
        form = form - delta_2k(k, N) * BETA[k]
    return form


@lru_cache(maxsize=None)
def _delta_2k_block(k: int, size: int) -> TruncatedSeries:
    return delta_2k(k, size).series


def _tau_2k(k: int, n: int) -> Fraction:
    """Koeficient u q^n v Δ_{2k}; rozvoje se drží v blocích mocnin dvou."""
    size = 64
    while size <= n:
        size *= 2
    return _delta_2k_block(k, size)[n]


BRANCH_EULER = 1
BRANCH_EISENSTEIN = 2
BRANCH_DELTA = 3
BRANCH_TRACE = 4


def default_branch(k: int) -> int:
    if k in (0, 1):
        return BRANCH_EULER
    if k in EISENSTEIN_ONLY_K:
        return BRANCH_EISENSTEIN
    if k in DELTA_2K_TABLE:
        return BRANCH_DELTA
    return BRANCH_TRACE


def p_via_recurrence(n: int, k: int, branch: Optional[int] = None) -> int:
    """
    p(n) z identity pro R_k:
        g_k(n,0)·p(n) = Σ_{m≠0} (−1)^{m+1} g_k(n,m) p(n−ω(m)) − C(2k−2,k−2)(4k/B_{2k}) σ_{2k−1}(n) + Tr_{2k}(n)

    Větve: 1 (k ∈ {0, 1}, Eulerova rekurence), 2 (k ∈ {2,3,4,5,7}, bez stopy),
    3 (tabulková k, Tr = β_k τ_{2k}(n)), 4 (obecné k ≥ 2, Tr ze stopové řady).

    Args:
        n: Kladné n
        k: Index rekurence
        branch: Vynucená větev; None zvolí podle k

    Returns:
        p(n) jako celé číslo

    Raises:
        DegenerateLeadingWeight: g_k(n, 0) = 0
        IdentityViolation: výsledek není celé číslo
    """
    from recurrences.traces import trace_value_or_compute

    if n < 1:
        raise ValueError(f"Rekurence je definována pro n ≥ 1, zadáno n={n}.")
    branch = default_branch(k) if branch is None else branch
    if branch == BRANCH_EULER and k not in (0, 1):
        raise UnsupportedWeight(f"Větev 1 platí jen pro k ∈ {{0, 1}}, zadáno k={k}.")
    if branch == BRANCH_EISENSTEIN and k not in EISENSTEIN_ONLY_K:
        raise UnsupportedWeight(f"Větev 2 platí jen pro k ∈ {sorted(EISENSTEIN_ONLY_K)}, zadáno k={k}.")
    if branch == BRANCH_DELTA and k not in DELTA_2K_TABLE:
        raise UnsupportedWeight(f"Větev 3 platí jen pro k ∈ {sorted(DELTA_2K_TABLE)}, zadáno k={k}.")
    if branch == BRANCH_TRACE and k < 2:
        raise UnsupportedWeight(f"Větev 4 vyžaduje k ≥ 2, zadáno k={k}.")

    kernel = g_kernel(k)
    lead = kernel.numerator(n, 0)
    if lead == 0:
        raise DegenerateLeadingWeight(k, n)

    rhs = Fraction(pentagonal_sum_numerator(k, n, include_zero=False), kernel.denominator)
    if k >= 2:
        rhs -= eisenstein_binomial(k) * Fraction(4 * k) / bernoulli(2 * k) * sigma(2 * k - 1, n)
    if branch == BRANCH_DELTA:
        rhs += BETA[k] * _tau_2k(k, n)
    elif branch == BRANCH_TRACE:
        rhs += trace_value_or_compute(2 * k, n)

    value = rhs * kernel.denominator / lead
    if value.denominator != 1:
        raise IdentityViolation(f"p({n}) z rekurence k={k} (větev {branch}) vyšlo neceločíselně: {value}.")
    return int(value)
