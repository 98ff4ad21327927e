"""Rostoucí a klesající faktoriály nad QQ."""
from __future__ import annotations
from fractions import Fraction
from typing import Union

Number = Union[int, Fraction]


class FactorialKit:
    """
    (x)^{[j]} = x(x+1)…(x+j−1) a (x)_m = x(x−1)…(x−m+1).

    Pro m ≤ −1 platí (x)_m = 1/(x)_{−m}.
    """

    @staticmethod
    def rising(x: Number, j: int) -> Fraction:
        if j < 0:
            raise ValueError(f"Rostoucí faktoriál vyžaduje j ≥ 0, zadáno {j}.")
        out = Fraction(1)
        for i in range(j):
            out *= x + i
        return out

    @staticmethod
    def falling(x: Number, m: int) -> Fraction:
        if m < 0:
            return 1 / FactorialKit.falling(x, -m)
        out = Fraction(1)
        for i in range(m):
            out *= x - i
        return out
