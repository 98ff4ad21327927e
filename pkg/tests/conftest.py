"""Sdílené fixtures a pomocné orákulum pro testy."""
from __future__ import annotations
import random
from fractions import Fraction
from functools import lru_cache
from typing import List

import pytest

from recurrences.pentagonal import PARTITIONS
from series.rings import QQ, ModResidue
from series.truncated import TruncatedSeries

SMALL_N = 40
PRIMES_TO_31 = (5, 7, 11, 13, 17, 19, 23, 29, 31)


@lru_cache(maxsize=None)
def _count(n: int, largest: int) -> int:
    """Počet rozkladů n na části ≤ largest (přímé vyčíslení)."""
    if n == 0:
        return 1
    return sum(_count(n - part, part) for part in range(1, min(n, largest) + 1))


def brute_partitions(n: int) -> int:
    return _count(n, n)


def naive_euler_product(N: int) -> TruncatedSeries:
    """∏_{n<N} (1 − q^n) roznásobené činitel po činiteli."""
    coeffs: List[int] = [1] + [0] * (N - 1)
    for n in range(1, N):
        for i in range(N - 1, n - 1, -1):
            coeffs[i] -= coeffs[i - n]
    return TruncatedSeries.from_values(coeffs, QQ)


def random_series(rng: random.Random, N: int, ring=QQ, unit: bool = False) -> TruncatedSeries:
    values = []
    for i in range(N):
        if isinstance(ring, ModResidue):
            values.append(rng.randrange(ring.ell))
        else:
            values.append(Fraction(rng.randint(-9, 9), rng.randint(1, 4)))
    if unit:
        values[0] = 1
    return TruncatedSeries.from_values(values, ring)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture(scope="session")
def partitions():
    PARTITIONS.ensure(2000)
    return PARTITIONS
