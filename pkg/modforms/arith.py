"""Bernoulliho čísla a součty mocnin dělitelů."""
from __future__ import annotations
import threading
from fractions import Fraction
from math import comb
from typing import Dict, List

_BERNOULLI: Dict[int, Fraction] = {0: Fraction(1), 1: Fraction(-1, 2)}
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(r: int) -> Fraction:
    """
    Bernoulliho číslo B_r (konvence B_1 = −1/2), memoizované bez omezení.

    Počítá se binomickou rekurencí Σ_{j≤m} C(m+1, j) B_j = 0; liché indexy ≥ 3
    jsou nulové a přeskakují se.

    Args:
        r: Index r ≥ 0

    Returns:
        Přesná hodnota B_r
    """
    if r < 0:
        raise ValueError(f"Index Bernoulliho čísla musí být nezáporný, zadáno {r}.")
    if r > 1 and r % 2:
        return Fraction(0)
    cached = _BERNOULLI.get(r)
    if cached is not None:
        return cached
    with _BERNOULLI_LOCK:
        start = max(k for k in _BERNOULLI if k % 2 == 0)
        for m in range(start + 2, r + 1, 2):
            s = Fraction(0)
            for j in range(0, m, 2):
                s += comb(m + 1, j) * _BERNOULLI[j]
            s += (m + 1) * _BERNOULLI[1]
            _BERNOULLI[m] = -s / (m + 1)
        return _BERNOULLI[r]


def bernoulli_akiyama_tanigawa(n: int) -> List[Fraction]:
    """
    B_0 … B_n druhou nezávislou cestou (Akiyamův–Tanigawův trojúhelník).

    Trojúhelník dává konvenci B_1 = +1/2; sudé hodnoty se s bernoulli() shodují.
    """
    if n < 0:
        raise ValueError("n musí být nezáporné")
    row = [Fraction(0)] * (n + 1)
    out: List[Fraction] = []
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    return out


def sigma(r: int, n: int) -> int:
    """σ_r(n) = Σ_{d|n} d^r pro n ≥ 1."""
    if n < 1:
        raise ValueError(f"σ_r(n) je definováno pro n ≥ 1, zadáno n={n}.")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d ** r
            e = n // d
            if e != d:
                total += e ** r
        d += 1
    return total


def sigma_table(r: int, N: int) -> List[int]:
    """
    Tabulka [0, σ_r(1), …, σ_r(N−1)] sítem přes násobky.

    Index 0 drží nulu, aby tabulka šla přímo použít jako koeficienty řady.
    """
    table = [0] * N
    for d in range(1, N):
        power = d ** r
        for multiple in range(d, N, d):
            table[multiple] += power
    return table
