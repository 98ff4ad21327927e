"""Stopové řady T_{2k} = −C(2k−2,k−2)E_{2k} − R_k a jejich cache."""
from __future__ import annotations
import threading
from fractions import Fraction
from typing import Dict

from modforms.cusp import cusp_basis, cusp_dimension, cusp_membership
from modforms.forms import ModularFormExpansion, eisenstein
from recurrences.kernel import eisenstein_binomial
from recurrences.r_series import r_series_convolution
from utils.errors import IdentityViolation, InsufficientPrecision, UnsupportedWeight
from utils.log import get_logger

log = get_logger(__name__)

# Nejvyšší přesnost, na které se stopová řada ověřuje proti bázi S_{2k}
MEMBERSHIP_CAP = 400


def set_membership_cap(cap: int) -> None:
    global MEMBERSHIP_CAP
    MEMBERSHIP_CAP = max(int(cap), 1)


def _compute_trace(two_k: int, N: int) -> ModularFormExpansion:
    k = two_k // 2
    r = r_series_convolution(k, N)
    trace = -r - eisenstein(two_k, N) * eisenstein_binomial(k)
    if trace[0] != 0:
        raise IdentityViolation(f"T_{two_k} má nenulový absolutní člen {trace[0]}.")
    return trace


def _verify_membership(two_k: int, trace: ModularFormExpansion) -> None:
    check_at = min(trace.precision, MEMBERSHIP_CAP)
    membership = cusp_membership(trace.truncate(check_at), cusp_basis(two_k, check_at))
    if not membership.is_member:
        index = next(i for i, c in enumerate(membership.residual.coeffs) if c != 0)
        raise IdentityViolation(f"T_{two_k} neleží v S_{two_k}: nenulové reziduum u q^{index}.")
    log.debug(f"[TraceCache] T_{two_k} coordinates {[str(c) for c in membership.coordinates]}")


class TraceCache:
    """
    Jedna stopová řada na váhu, vždy ta s největší dosud spočtenou přesností.

    U každé položky se pamatuje, zda už prošla ověřením proti bázi S_{2k};
    neověřená položka se při get(..., verify=True) ověří dodatečně.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._data: Dict[int, ModularFormExpansion] = {}
        self._verified: Dict[int, bool] = {}

    def peek(self, two_k: int):
        return self._data.get(two_k)

    def is_verified(self, two_k: int) -> bool:
        return self._verified.get(two_k, False)

    def get(self, two_k: int, N: int, verify: bool = True) -> ModularFormExpansion:
        cached = self._data.get(two_k)
        if cached is not None and cached.precision >= N and (self.is_verified(two_k) or not verify):
            return cached.truncate(N)
        with self._lock:
            cached = self._data.get(two_k)
            if cached is None or cached.precision < N:
                log.info(f"[TraceCache.get] computing T_{two_k} at N={N}")
                cached = _compute_trace(two_k, N)
                self._data[two_k] = cached
                self._verified[two_k] = False
            if verify and not self._verified[two_k]:
                _verify_membership(two_k, cached)
                self._verified[two_k] = True
            return cached.truncate(N)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self._verified.clear()


TRACES = TraceCache()


def _check_weight(two_k: int) -> None:
    if two_k % 2 or two_k < 12:
        raise UnsupportedWeight(f"Stopová řada je definována pro sudou váhu 2k ≥ 12, zadáno {two_k}.")


def trace_series(two_k: int, N: int, verify: bool = True) -> ModularFormExpansion:
    """
    T_{2k} do přesnosti N, memoizovaně.

    Args:
        two_k: Sudá váha ≥ 12
        N: Přesnost
        verify: Ověřit příslušnost k S_{2k} (do přesnosti MEMBERSHIP_CAP)

    Raises:
        UnsupportedWeight: 2k < 12 nebo liché
        IdentityViolation: nenulový absolutní člen nebo reziduum
    """
    _check_weight(two_k)
    return TRACES.get(two_k, N, verify)


def trace_value(two_k: int, n: int) -> Fraction:
    """
    Tr_{2k}(n) z cache; pro prázdné S_{2k} vrací 0.

    Raises:
        InsufficientPrecision: řada v cache není spočtena do q^n
    """
    if cusp_dimension(two_k) == 0 or n < 1:
        return Fraction(0)
    _check_weight(two_k)
    cached = TRACES.peek(two_k)
    if cached is None or cached.precision <= n:
        known = 0 if cached is None else cached.precision
        raise InsufficientPrecision(f"Tr_{two_k}({n}) není v cache (spočteno do přesnosti {known}).")
    return cached[n]


def trace_value_or_compute(two_k: int, n: int) -> Fraction:
    """Jako trace_value, chybějící řadu ale dopočítá (bez opakovaného ověření báze)."""
    try:
        return trace_value(two_k, n)
    except InsufficientPrecision:
        return trace_series(two_k, max(n + 1, 2 * n), verify=False)[n]
