"""Rozvoje modulárních forem úrovně 1: Eisensteinovy řady, Δ a tabulka Δ_{2k}."""
from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple, Union

from modforms.arith import bernoulli, sigma_table
from series.products import euler_product
from series.rings import QQ
from series.truncated import TruncatedSeries
from utils.errors import UnsupportedWeight, WeightMismatch

# k → (exponent E_4, exponent E_6) v Δ_{2k} = Δ · E_4^a · E_6^b
DELTA_2K_TABLE: Dict[int, Tuple[int, int]] = {
    6: (0, 0),
    8: (1, 0),
    9: (0, 1),
    10: (2, 0),
    11: (1, 1),
    13: (2, 1),
}


@dataclass(frozen=True, eq=False)
class ModularFormExpansion:
    """
    q-rozvoj nad QQ označený vahou.

    Váha je jen metadata; sčítání kontroluje shodu vah, násobení váhy sčítá.
    """
    weight: int
    series: TruncatedSeries

    @property
    def precision(self) -> int:
        return self.series.precision

    @property
    def is_cuspidal(self) -> bool:
        return self.series[0] == 0

    def __getitem__(self, index):
        return self.series[index]

    def _same_weight(self, other: "ModularFormExpansion") -> None:
        if self.weight != other.weight:
            raise WeightMismatch(self.weight, other.weight)

    def __add__(self, other):
        if isinstance(other, ModularFormExpansion):
            self._same_weight(other)
            return ModularFormExpansion(self.weight, self.series + other.series)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, ModularFormExpansion):
            self._same_weight(other)
            return ModularFormExpansion(self.weight, self.series - other.series)
        return NotImplemented

    def __neg__(self) -> "ModularFormExpansion":
        return ModularFormExpansion(self.weight, -self.series)

    def __mul__(self, other):
        if isinstance(other, ModularFormExpansion):
            return ModularFormExpansion(self.weight + other.weight, self.series * other.series)
        if isinstance(other, (int, Fraction)):
            return ModularFormExpansion(self.weight, self.series.scale(other))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ModularFormExpansion":
        return ModularFormExpansion(self.weight * exponent, self.series.power(exponent))

    def __eq__(self, other):
        if isinstance(other, ModularFormExpansion):
            return self.weight == other.weight and self.series == other.series
        if isinstance(other, TruncatedSeries):
            return self.series == other
        return NotImplemented

    __hash__ = None

    def truncate(self, precision: int) -> "ModularFormExpansion":
        return ModularFormExpansion(self.weight, self.series.truncate(precision))

    def first_mismatch(self, other: Union["ModularFormExpansion", TruncatedSeries]):
        other_series = other.series if isinstance(other, ModularFormExpansion) else other
        return self.series.first_mismatch(other_series)

    def __repr__(self) -> str:
        return f"ModularFormExpansion(weight={self.weight}, {self.series!r})"


def eisenstein(two_k: int, N: int) -> ModularFormExpansion:
    """
    E_{2k} = 1 − (4k/B_{2k}) Σ σ_{2k−1}(n) q^n.

    Args:
        two_k: Sudá váha ≥ 4 (pro 0 vrací konstantu 1)
        N: Přesnost

    Returns:
        Rozvoj s absolutním členem 1
    """
    if two_k == 0:
        return ModularFormExpansion(0, TruncatedSeries.constant(1, N))
    if two_k < 4 or two_k % 2:
        raise UnsupportedWeight(f"Eisensteinova řada váhy {two_k} není podporována (sudá váha ≥ 4).")
    factor = Fraction(-2 * two_k) / bernoulli(two_k)
    sig = sigma_table(two_k - 1, N)
    coeffs = [Fraction(1)] + [factor * s for s in sig[1:]]
    return ModularFormExpansion(two_k, TruncatedSeries(QQ, tuple(coeffs[:N])))


def delta(N: int) -> ModularFormExpansion:
    """Δ = q · ∏(1 − q^n)^24 s celočíselnými exponenty."""
    if N == 1:
        return ModularFormExpansion(12, TruncatedSeries.zero(1))
    body = euler_product(1, N - 1).power(24)
    return ModularFormExpansion(12, body.shift(1))


def delta_2k(k: int, N: int) -> ModularFormExpansion:
    """
    Δ_{2k} z tabulky: Δ, ΔE_4, ΔE_6, ΔE_4², ΔE_4E_6, ΔE_4²E_6.

    Raises:
        UnsupportedWeight: k mimo {6, 8, 9, 10, 11, 13}
    """
    if k not in DELTA_2K_TABLE:
        raise UnsupportedWeight(f"Δ_{{2k}} není pro k={k} definováno (podporováno {sorted(DELTA_2K_TABLE)}).")
    a, b = DELTA_2K_TABLE[k]
    form = delta(N)
    if a:
        form = form * eisenstein(4, N) ** a
    if b:
        form = form * eisenstein(6, N) ** b
    return form
