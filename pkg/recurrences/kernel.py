"""Váhy g_k(n, m) zobecněných pentagonálních rekurencí."""
from __future__ import annotations
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, lcm
from typing import Tuple

from recurrences.factorials import FactorialKit
from utils.errors import NotEllIntegral


def prefactor(k: int) -> Fraction:
    """
    P_k = (2k−1)·(2k−2)_{k−1}² / 2^{2k−2}.

    Pro k ∈ {0, 1} se použije konvence záporného klesajícího faktoriálu,
    např. P_0 = (−1)·(−2)_{−1}²·4 = −1.
    """
    return (2 * k - 1) * FactorialKit.falling(2 * k - 2, k - 1) ** 2 / Fraction(2) ** (2 * k - 2)


def eisenstein_binomial(k: int) -> int:
    """
    C(2k−2, k−2) s rozšířením C(−2, −2) = 1 a C(0, −1) = 0.

    Je to násobek E_{2k} v R_k = −C(2k−2, k−2)·E_{2k} − T_{2k}.
    """
    if k == 0:
        return 1
    if k == 1:
        return 0
    return comb(2 * k - 2, k - 2)


class GKernel:
    """
    g_k(n, m) = P_k Σ_r (−1)^{k+r} (2k−2r−1)/((2r)!(2k−2r)!) · Y^r · X^{k−r},
    kde Y = (6m+1)² a X = 24n − Y.

    Koeficienty jsou uložené jako celá čísla se společným jmenovatelem L,
    takže součty přes m se dají sčítat v celých číslech a dělit jen jednou.
    """

    def __init__(self, k: int):
        if k < 0:
            raise ValueError(f"Index k musí být nezáporný, zadáno {k}.")
        self.k = k
        pk = prefactor(k)
        exact = [
            pk * (-1) ** (k + r) * Fraction(2 * k - 2 * r - 1, factorial(2 * r) * factorial(2 * k - 2 * r))
            for r in range(k + 1)
        ]
        self.denominator = lcm(*(c.denominator for c in exact))
        self.scaled: Tuple[int, ...] = tuple(int(c * self.denominator) for c in exact)

    def numerator(self, n: int, m: int) -> int:
        """L·g_k(n, m) jako celé číslo (Hornerovo schéma v X)."""
        y = (6 * m + 1) ** 2
        x = 24 * n - y
        acc = 0
        y_power = 1
        # Σ_r c_r Y^r X^{k−r}: Horner podle X od r = 0
        for c in self.scaled:
            acc = acc * x + c * y_power
            y_power *= y
        return acc

    def value(self, n: int, m: int) -> Fraction:
        return Fraction(self.numerator(n, m), self.denominator)

    def mod(self, n: int, m: int, ell: int) -> int:
        """g_k(n, m) mod ℓ."""
        if self.denominator % ell == 0:
            raise NotEllIntegral(ell, f"1/{self.denominator}")
        return self.numerator(n, m) * pow(self.denominator, -1, ell) % ell


@lru_cache(maxsize=None)
def g_kernel(k: int) -> GKernel:
    return GKernel(k)


def g_coeff(k: int, n: int, m: int) -> Fraction:
    """Přesná hodnota g_k(n, m)."""
    return g_kernel(k).value(n, m)
