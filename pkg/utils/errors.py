"""Hierarchie výjimek výpočetního jádra.

Každá chyba, kterou může vyvolat veřejná operace, dědí z EngineError.
Aritmetické chyby navíc dědí z ArithmeticError, chyby vstupu z ValueError,
takže je lze zachytit i obecnými handlery.
"""
from __future__ import annotations
from typing import Any, Optional


class EngineError(Exception):
    """Společný předek všech chyb výpočetního jádra."""


class NonUnit(EngineError, ArithmeticError):
    """Pokus o inverzi prvku, který v daném okruhu není jednotkou."""

    def __init__(self, value: Any, ring: str):
        super().__init__(f"Prvek {value} není v okruhu {ring} invertibilní.")
        self.value = value
        self.ring = ring


class NonUnitLeadingCoefficient(NonUnit):
    """Řadu nelze invertovat, protože absolutní člen není jednotka."""

    def __init__(self, value: Any, ring: str):
        super().__init__(value, ring)
        self.args = (f"Absolutní člen {value} řady není v okruhu {ring} invertibilní.",)


class RingMismatch(EngineError, TypeError):
    """Operandy patří do různých okruhů koeficientů."""

    def __init__(self, left: str, right: str):
        super().__init__(f"Nelze kombinovat řady nad okruhy {left} a {right}.")


class WeightMismatch(EngineError, ValueError):
    """Sčítání modulárních forem různých vah."""

    def __init__(self, left: int, right: int):
        super().__init__(f"Váhy {left} a {right} se neshodují.")


class NotEllIntegral(EngineError, ArithmeticError):
    """Koeficient má ve jmenovateli prvočíslo ℓ, redukci mod ℓ nelze provést."""

    def __init__(self, ell: int, value: Any, index: Optional[int] = None):
        where = f" (koeficient q^{index})" if index is not None else ""
        super().__init__(f"Hodnota {value}{where} není ℓ-celá pro ℓ={ell}.")
        self.ell = ell
        self.value = value
        self.index = index


class UnsupportedWeight(EngineError, ValueError):
    """Váha nebo index k mimo podporovaný rozsah operace."""


class UnsupportedPrime(EngineError, ValueError):
    """Prvočíslo, pro které operace nemá definovanou identitu."""


class InvalidPrime(EngineError, ValueError):
    """Hodnota není přípustné prvočíslo."""

    def __init__(self, value: Any):
        super().__init__(f"{value} není přípustné prvočíslo (požadováno prvočíslo ℓ ≥ 5).")
        self.value = value


class InsufficientPrecision(EngineError, ValueError):
    """Požadovaný koeficient leží za známou přesností řady."""


class NotCuspidal(EngineError, ValueError):
    """Forma má nenulový absolutní člen, nemůže ležet v prostoru cusp forem."""


class IdentityViolation(EngineError):
    """Interní identita neplatí, jde o chybu implementace."""


class DegenerateLeadingWeight(EngineError, ZeroDivisionError):
    """Váha g_k(n, 0) je nulová, rekurenci pro dané n nelze použít."""

    def __init__(self, k: int, n: int):
        super().__init__(f"g_{k}({n}, 0) = 0, rekurence pro n={n} je degenerovaná.")
        self.k = k
        self.n = n


class UsageError(EngineError, ValueError):
    """Neplatná konfigurace příkazové řádky."""


class NonIntegralOffset(EngineError, ValueError):
    """Posun q-exponentu není nezáporné celé číslo, řadu nelze převést na celé exponenty."""

    def __init__(self, offset: Any):
        super().__init__(f"Posun q^{offset} nelze převést na řadu s celými exponenty.")
        self.offset = offset
