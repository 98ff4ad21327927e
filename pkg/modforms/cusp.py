"""Schodovitá báze prostoru cusp forem S_w úrovně 1 a test příslušnosti."""
from __future__ import annotations
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from modforms.forms import ModularFormExpansion, delta, eisenstein
from series.rings import QQ
from series.truncated import TruncatedSeries
from utils.errors import IdentityViolation, InsufficientPrecision, NotCuspidal, WeightMismatch
from utils.log import get_logger

log = get_logger(__name__)


def modular_dimension(w: int) -> int:
    """dim M_w pro plnou modulární grupu."""
    if w < 0 or w % 2 or w == 2:
        return 0
    return w // 12 + (0 if w % 12 == 2 else 1)


def cusp_dimension(w: int) -> int:
    """dim S_w = dim M_w − 1 pro w ≥ 4, jinak 0."""
    if w < 4:
        return 0
    return max(modular_dimension(w) - 1, 0)


@dataclass(frozen=True)
class CuspBasis:
    """
    Báze b_1 … b_d prostoru S_w ve schodovitém tvaru b_i = q^i + O(q^{d+1}).

    Attributes:
        weight: Váha w
        dimension: d = dim S_w
        basis: Rozvoje b_i
        precision: Společná přesnost N
    """
    weight: int
    dimension: int
    basis: Tuple[TruncatedSeries, ...]
    precision: int


@dataclass(frozen=True)
class CuspMembership:
    """Výsledek rozkladu formy do báze: souřadnice, reziduum a verdikt."""
    coordinates: Tuple[Fraction, ...]
    residual: TruncatedSeries
    is_member: bool


def _monomials(w: int, N: int) -> List[Tuple[Tuple[int, int, int], TruncatedSeries]]:
    """Všechny Δ^a E_4^b E_6^c (a ≥ 1) váhy w."""
    e4 = eisenstein(4, N).series
    e6 = eisenstein(6, N).series
    dl = delta(N).series
    out = []
    for a in range(1, w // 12 + 1):
        rest = w - 12 * a
        for c in range(rest // 6 + 1):
            if (rest - 6 * c) % 4:
                continue
            b = (rest - 6 * c) // 4
            mono = dl.power(a)
            if b:
                mono = mono * e4.power(b)
            if c:
                mono = mono * e6.power(c)
            out.append(((a, b, c), mono))
    return out


def _echelonize(rows: List[List[Fraction]], d: int) -> List[List[Fraction]]:
    """Gaussova eliminace nad QQ (RREF), pivoty musí vyjít ve sloupcích 1 … d."""
    rows = [list(r) for r in rows]
    width = len(rows[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for col in range(1, width):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if pivots != list(range(1, d + 1)):
        raise IdentityViolation(f"Pivoty eliminace {pivots} neodpovídají schodovité bázi dimenze {d}.")
    return rows[:d]


class _BasisCache:
    """Báze podle váhy; větší přesnost obsluhuje i menší požadavky (zkrácením)."""

    def __init__(self):
        self._lock = threading.Lock()
        self._data: Dict[int, CuspBasis] = {}

    def get(self, w: int, N: int) -> CuspBasis:
        with self._lock:
            cached = self._data.get(w)
            if cached is not None and cached.precision >= N:
                return _truncate_basis(cached, N)
            log.debug(f"[CuspBasis.get] building S_{w} basis at N={N}")
            basis = _build_basis(w, N)
            self._data[w] = basis
            return basis


def _truncate_basis(basis: CuspBasis, N: int) -> CuspBasis:
    if basis.precision == N:
        return basis
    return CuspBasis(basis.weight, basis.dimension, tuple(b.truncate(N) for b in basis.basis), N)


def _build_basis(w: int, N: int) -> CuspBasis:
    d = cusp_dimension(w)
    if d == 0:
        return CuspBasis(w, 0, (), N)
    monos = _monomials(w, N)
    rows = _echelonize([list(m.coeffs) for _, m in monos], d)
    basis = tuple(TruncatedSeries(QQ, tuple(row)) for row in rows)
    return CuspBasis(w, d, basis, N)


_CACHE = _BasisCache()


def cusp_basis(w: int, N: int) -> CuspBasis:
    """
    Millerova schodovitá báze S_w do přesnosti N.

    Args:
        w: Sudá váha
        N: Přesnost, musí být větší než dim S_w

    Returns:
        CuspBasis

    Raises:
        InsufficientPrecision: N ≤ dim S_w
    """
    d = cusp_dimension(w)
    if N <= d:
        raise InsufficientPrecision(f"Báze S_{w} dimenze {d} potřebuje přesnost > {d}, zadáno {N}.")
    return _CACHE.get(w, N)


def cusp_membership(f: Union[ModularFormExpansion, TruncatedSeries], basis: CuspBasis) -> CuspMembership:
    """
    Rozklad f = Σ c_i b_i + reziduum; souřadnice se čtou ze schodových pozic.

    Raises:
        NotCuspidal: f má nenulový absolutní člen
        WeightMismatch: váha formy neodpovídá bázi
    """
    if isinstance(f, ModularFormExpansion):
        if f.weight != basis.weight:
            raise WeightMismatch(f.weight, basis.weight)
        series = f.series
    else:
        series = f
    if series[0] != 0:
        raise NotCuspidal(f"Absolutní člen {QQ.to_text(series[0])} je nenulový, forma není cusp forma.")
    n = min(series.precision, basis.precision)
    series = series.truncate(n)
    coordinates = tuple(series[i] if i < n else Fraction(0) for i in range(1, basis.dimension + 1))
    residual = series
    for c, b in zip(coordinates, basis.basis):
        if c:
            residual = residual - b.truncate(n).scale(c)
    return CuspMembership(coordinates, residual, residual.is_zero())
