"""Zobecněná pentagonální čísla a sdílená tabulka hodnot p(n)."""
from __future__ import annotations
import threading
from dataclasses import dataclass
from typing import List

from utils.log import get_logger

log = get_logger(__name__)


def omega(m: int) -> int:
    """ω(m) = (3m² + m)/2."""
    return (3 * m * m + m) // 2


@dataclass(frozen=True)
class PentagonalIndex:
    """Index m ≠ 0 s hodnotou ω(m) a znaménkem (−1)^{m+1}."""
    m: int
    omega: int
    sign: int

    @classmethod
    def of(cls, m: int) -> "PentagonalIndex":
        return cls(m, omega(m), 1 if m % 2 else -1)


def pentagonal_range(n: int) -> List[PentagonalIndex]:
    """
    Všechna m ≠ 0 s ω(m) ≤ n, seřazená podle rostoucího ω.

    Pořadí je m = −1, 1, −2, 2, … (ω = 1, 2, 5, 7, …), hodnoty ω se neopakují.
    """
    out: List[PentagonalIndex] = []
    j = 1
    while True:
        neg = PentagonalIndex.of(-j)
        if neg.omega > n:
            break
        out.append(neg)
        pos = PentagonalIndex.of(j)
        if pos.omega > n:
            break
        out.append(pos)
        j += 1
    return out


class PartitionTable:
    """
    Rostoucí tabulka p(0), p(1), … počítaná Eulerovou rekurencí.

    Zápis je chráněn zámkem; jednou spočtené hodnoty se nemění, takže čtení
    už rozšířené tabulky je bezpečné i bez zámku.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._values: List[int] = [1]

    def __len__(self) -> int:
        return len(self._values)

    def ensure(self, size: int) -> None:
        """Rozšíří tabulku tak, aby obsahovala p(0 … size−1)."""
        if size <= len(self._values):
            return
        with self._lock:
            values = self._values
            start = len(values)
            if size <= start:
                return
            log.debug(f"[PartitionTable.ensure] extending p-table {start} -> {size}")
            steps = pentagonal_range(size - 1)
            for n in range(start, size):
                total = 0
                for idx in steps:
                    if idx.omega > n:
                        break
                    if idx.sign > 0:
                        total += values[n - idx.omega]
                    else:
                        total -= values[n - idx.omega]
                values.append(total)

    def __call__(self, n: int) -> int:
        """p(n); záporný argument dává 0."""
        if n < 0:
            return 0
        self.ensure(n + 1)
        return self._values[n]

    def values(self, count: int) -> List[int]:
        """Kopie p(0 … count−1)."""
        self.ensure(count)
        return self._values[:count]


PARTITIONS = PartitionTable()


def p_euler(N: int) -> List[int]:
    """Seznam p(0 … N−1) ze sdílené tabulky."""
    return PARTITIONS.values(N)
