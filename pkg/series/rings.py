"""Okruhy koeficientů: přesná racionální čísla a zbytky modulo prvočíslo ℓ.

Okruh je bezstavový popis aritmetiky; prvky jsou obyčejné hodnoty Pythonu
(Fraction, resp. int v rozsahu [0, ℓ)). Dva okruhy jsou shodné, pokud jsou
stejného typu a (u ModResidue) mají stejný modul.
"""
from __future__ import annotations
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Sequence

import numpy as np
from sympy import isprime

from series import convolution
from utils.errors import InvalidPrime, NonUnit, NotEllIntegral

# Součet ℓ² · délka musí zůstat pod hranicí int64 i se znaménkovou rezervou
_INT64_SAFE = 2 ** 62

# Práh Karatsubova násobení pro racionální řady; přepisuje ho nastavení CLI
KARATSUBA_THRESHOLD = 64


def set_karatsuba_threshold(threshold: int) -> None:
    """Nastaví globální práh dělení na poloviny (0 = vždy školní násobení)."""
    global KARATSUBA_THRESHOLD
    KARATSUBA_THRESHOLD = max(int(threshold), 0)


class CoefficientRing(ABC):
    """Společné rozhraní okruhů koeficientů."""

    name: str = "?"

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def coerce(self, value: Any) -> Any:
        """Převede int/Fraction na kanonický prvek okruhu."""

    @abstractmethod
    def add(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def neg(self, a: Any) -> Any: ...

    @abstractmethod
    def mul(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def inv(self, a: Any) -> Any:
        """Multiplikativní inverze jednotky, jinak NonUnit."""

    @abstractmethod
    def convolve(self, a: Sequence[Any], b: Sequence[Any], n: int) -> List[Any]:
        """Prvních n koeficientů součinu dvou řad."""

    def sub(self, a: Any, b: Any) -> Any:
        return self.add(a, self.neg(b))

    def is_zero(self, a: Any) -> bool:
        return a == self.zero

    def is_unit(self, a: Any) -> bool:
        return not self.is_zero(a)

    def eq(self, a: Any, b: Any) -> bool:
        return a == b

    def to_text(self, a: Any) -> str:
        """Textová podoba prvku pro výpisy a JSON."""
        return str(a)


@dataclass(frozen=True)
class ExactRational(CoefficientRing):
    """Racionální čísla s libovolnou přesností (vždy v základním tvaru)."""

    name = "QQ"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value: Any) -> Fraction:
        return value if isinstance(value, Fraction) else Fraction(value)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise NonUnit(a, self.name)
        return 1 / a

    def convolve(self, a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> List[Fraction]:
        return convolution.multiply(a, b, n, Fraction(0), KARATSUBA_THRESHOLD)

    def to_text(self, a: Fraction) -> str:
        return format_rational(a)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class ModResidue(CoefficientRing):
    """Zbytky modulo prvočíslo ℓ, kanonický reprezentant v [0, ℓ)."""

    ell: int

    def __post_init__(self):
        if not isprime(self.ell):
            raise InvalidPrime(self.ell)

    @property
    def name(self) -> str:
        return f"F_{self.ell}"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def coerce(self, value: Any) -> int:
        if isinstance(value, Fraction):
            if value.denominator % self.ell == 0:
                raise NotEllIntegral(self.ell, value)
            return value.numerator * pow(value.denominator, self.ell - 2, self.ell) % self.ell
        return int(value) % self.ell

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.ell

    def neg(self, a: int) -> int:
        return (-a) % self.ell

    def mul(self, a: int, b: int) -> int:
        return a * b % self.ell

    def inv(self, a: int) -> int:
        a %= self.ell
        if a == 0:
            raise NonUnit(a, self.name)
        # Fermat: a^(ℓ−2) je inverze pro a ≢ 0
        return pow(a, self.ell - 2, self.ell)

    def convolve(self, a: Sequence[int], b: Sequence[int], n: int) -> List[int]:
        a = list(a[:n])
        b = list(b[:n])
        if not a or not b:
            return [0] * n
        if min(len(a), len(b)) * (self.ell - 1) ** 2 < _INT64_SAFE:
            product = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
            out = [int(x) % self.ell for x in product[:n]]
        else:
            out = [x % self.ell for x in convolution.schoolbook(a, b, n, 0)]
        return out + [0] * (n - len(out))

    def __str__(self) -> str:
        return self.name


QQ = ExactRational()


def format_rational(value: Fraction) -> str:
    """Zápis "p/q" bez mezer, celá čísla jen "p"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverze k format_rational."""
    return Fraction(text)
