"""Useknuté mocninné řady a řady s racionálním posunem exponentu.

TruncatedSeries zná koeficienty a_0 … a_{N−1}; N je přesnost. Výsledek každé
binární operace má přesnost rovnou menší z přesností operandů, koeficienty za
přesností se nikdy nečtou ani nedoplňují nulami.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Any, Iterable, List, Optional, Tuple, Union

from series.rings import QQ, CoefficientRing, ExactRational, ModResidue
from utils.errors import (
    InsufficientPrecision,
    NonIntegralOffset,
    NonUnitLeadingCoefficient,
    NotEllIntegral,
    RingMismatch,
)
from utils.log import get_logger

log = get_logger(__name__)

Scalar = Union[int, Fraction]


def _is_scalar(value: Any) -> bool:
    return isinstance(value, (int, Rational)) and not isinstance(value, bool)


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """
    Formální mocninná řada známá do řádu O(q^N) nad okruhem `ring`.

    Instance jsou neměnné; rovnost platí až do menší z obou přesností.
    """
    ring: CoefficientRing
    coeffs: Tuple[Any, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise InsufficientPrecision("Řada musí mít přesnost alespoň 1.")

    # ---------- konstrukce ----------
    @classmethod
    def from_values(cls, values: Iterable[Any], ring: CoefficientRing = QQ,
                    precision: Optional[int] = None) -> "TruncatedSeries":
        """
        Vytvoří řadu z hodnot převedených do okruhu.

        Args:
            values: Koeficienty a_0, a_1, …
            ring: Okruh koeficientů
            precision: Přesnost; chybějící koeficienty do ní jsou nulové
                       (jen pokud jsou zadané hodnoty opravdu úplné)

        Returns:
            Nová řada
        """
        items = [ring.coerce(v) for v in values]
        if precision is not None:
            items = items[:precision] + [ring.zero] * (precision - len(items))
        return cls(ring, tuple(items))

    @classmethod
    def zero(cls, precision: int, ring: CoefficientRing = QQ) -> "TruncatedSeries":
        return cls(ring, (ring.zero,) * precision)

    @classmethod
    def constant(cls, value: Any, precision: int, ring: CoefficientRing = QQ) -> "TruncatedSeries":
        return cls(ring, (ring.coerce(value),) + (ring.zero,) * (precision - 1))

    # ---------- základní vlastnosti ----------
    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, index):
        if isinstance(index, slice):
            start, stop, step = index.indices(len(self.coeffs))
            if index.stop is not None and index.stop > len(self.coeffs):
                raise InsufficientPrecision(
                    f"Koeficienty do q^{index.stop - 1} nejsou známé (přesnost {self.precision})."
                )
            return list(self.coeffs[start:stop:step])
        if index < 0:
            raise IndexError(f"Záporný exponent {index} v mocninné řadě neexistuje.")
        if index >= len(self.coeffs):
            raise InsufficientPrecision(
                f"Koeficient u q^{index} není znám (přesnost {self.precision})."
            )
        return self.coeffs[index]

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coeffs)

    def nonzero_terms(self) -> List[Tuple[int, Any]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if not self.ring.is_zero(c)]

    def to_text(self) -> List[str]:
        return [self.ring.to_text(c) for c in self.coeffs]

    def __repr__(self) -> str:
        head = ", ".join(self.to_text()[:8])
        more = ", …" if self.precision > 8 else ""
        return f"TruncatedSeries({self.ring}, N={self.precision}, [{head}{more}])"

    # ---------- porovnání ----------
    def _check_ring(self, other: "TruncatedSeries") -> None:
        if self.ring != other.ring:
            raise RingMismatch(str(self.ring), str(other.ring))

    def first_mismatch(self, other: Union["TruncatedSeries", Scalar]) -> Optional[int]:
        """
        Nejmenší exponent, ve kterém se řady liší (do společné přesnosti).

        Returns:
            Index nebo None, pokud se řady do min(N, N') shodují
        """
        if _is_scalar(other):
            other = TruncatedSeries.constant(other, self.precision, self.ring)
        self._check_ring(other)
        for i in range(min(self.precision, other.precision)):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            if self.ring != other.ring:
                return False
            return self.first_mismatch(other) is None
        if _is_scalar(other):
            return self.first_mismatch(other) is None
        return NotImplemented

    __hash__ = None

    # ---------- aritmetika ----------
    def _binary(self, other: "TruncatedSeries", op) -> "TruncatedSeries":
        self._check_ring(other)
        n = min(self.precision, other.precision)
        return TruncatedSeries(self.ring, tuple(op(self.coeffs[i], other.coeffs[i]) for i in range(n)))

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return self._binary(other, self.ring.add)
        if _is_scalar(other):
            head = self.ring.add(self.coeffs[0], self.ring.coerce(other))
            return TruncatedSeries(self.ring, (head,) + self.coeffs[1:])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.ring, tuple(self.ring.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return self._binary(other, self.ring.sub)
        if _is_scalar(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if _is_scalar(other):
            return (-self) + other
        return NotImplemented

    def scale(self, scalar: Any) -> "TruncatedSeries":
        """Vynásobí všechny koeficienty skalárem z okruhu."""
        s = self.ring.coerce(scalar)
        return TruncatedSeries(self.ring, tuple(self.ring.mul(s, c) for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_ring(other)
            n = min(self.precision, other.precision)
            return TruncatedSeries(self.ring, tuple(self.ring.convolve(self.coeffs, other.coeffs, n)))
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent):
        return self.power(exponent)

    def power(self, exponent: Scalar) -> "TruncatedSeries":
        """
        Mocnina řady.

        Nad QQ s absolutním členem 1 se použije Millerova rekurence
        n·g_n = Σ_{k≥1} ((a+1)k − n) f_k g_{n−k}, která dovoluje i racionální
        exponent. Jinak binární umocňování, záporný exponent přes inverzi.

        Args:
            exponent: Celé číslo, nebo zlomek (jen pro řady 1 + O(q) nad QQ)

        Returns:
            Řada stejné přesnosti
        """
        a = Fraction(exponent)
        if isinstance(self.ring, ExactRational) and self.coeffs[0] == 1:
            return self._miller_power(a)
        if a.denominator != 1:
            raise ValueError(f"Racionální mocninu {a} lze počítat jen pro řady 1 + O(q) nad QQ.")
        e = int(a)
        if e < 0:
            return self.invert().power(-e)
        result = TruncatedSeries.constant(1, self.precision, self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def _miller_power(self, a: Fraction) -> "TruncatedSeries":
        n_max = self.precision
        terms = [(k, c) for k, c in enumerate(self.coeffs) if k and c]
        integral = a.denominator == 1 and all(c.denominator == 1 for _, c in terms)
        if integral:
            # celočíselná větev: výsledek je celočíselný, dělení n je přesné
            ai = int(a)
            iterms = [(k, int(c)) for k, c in terms]
            g: List[int] = [1] + [0] * (n_max - 1)
            for n in range(1, n_max):
                acc = 0
                for k, c in iterms:
                    if k > n:
                        break
                    acc += ((ai + 1) * k - n) * c * g[n - k]
                g[n] = acc // n
            return TruncatedSeries(self.ring, tuple(Fraction(v) for v in g))
        gf: List[Fraction] = [Fraction(1)] + [Fraction(0)] * (n_max - 1)
        for n in range(1, n_max):
            acc = Fraction(0)
            for k, c in terms:
                if k > n:
                    break
                acc += ((a + 1) * k - n) * c * gf[n - k]
            gf[n] = acc / n
        return TruncatedSeries(self.ring, tuple(gf))

    def invert(self) -> "TruncatedSeries":
        """
        Multiplikativní inverze 1/f do stejné přesnosti.

        Returns:
            Řada g s f·g = 1 + O(q^N)

        Raises:
            NonUnitLeadingCoefficient: absolutní člen není jednotka
        """
        ring = self.ring
        a0 = self.coeffs[0]
        if not ring.is_unit(a0):
            raise NonUnitLeadingCoefficient(ring.to_text(a0), str(ring))
        n_max = self.precision
        terms = [(k, c) for k, c in enumerate(self.coeffs) if k and not ring.is_zero(c)]

        if isinstance(ring, ExactRational) and a0 in (1, -1) and all(c.denominator == 1 for _, c in terms):
            s = int(a0)
            iterms = [(k, int(c)) for k, c in terms]
            b: List[int] = [s] + [0] * (n_max - 1)
            for n in range(1, n_max):
                acc = 0
                for k, c in iterms:
                    if k > n:
                        break
                    acc += c * b[n - k]
                b[n] = -s * acc
            return TruncatedSeries(ring, tuple(Fraction(v) for v in b))

        inv0 = ring.inv(a0)
        out: List[Any] = [inv0] + [ring.zero] * (n_max - 1)
        for n in range(1, n_max):
            acc = ring.zero
            for k, c in terms:
                if k > n:
                    break
                acc = ring.add(acc, ring.mul(c, out[n - k]))
            out[n] = ring.neg(ring.mul(inv0, acc))
        return TruncatedSeries(ring, tuple(out))

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.invert()
        if _is_scalar(other):
            return self.scale(self.ring.inv(self.ring.coerce(other)))
        return NotImplemented

    # ---------- operátory na exponentech ----------
    def derive(self) -> "TruncatedSeries":
        """D = q d/dq: koeficient a_n přejde na n·a_n."""
        ring = self.ring
        return TruncatedSeries(ring, tuple(ring.mul(ring.coerce(n), c) for n, c in enumerate(self.coeffs)))

    def truncate(self, precision: int) -> "TruncatedSeries":
        """Sníží přesnost; zvýšit ji nelze."""
        if precision > self.precision:
            raise InsufficientPrecision(
                f"Nelze zvýšit přesnost z {self.precision} na {precision}."
            )
        return TruncatedSeries(self.ring, self.coeffs[:precision])

    def shift(self, k: int) -> "TruncatedSeries":
        """Násobení q^k (k ≥ 0); přesnost vzroste o k."""
        if k < 0:
            raise ValueError("Posun musí být nezáporný.")
        return TruncatedSeries(self.ring, (self.ring.zero,) * k + self.coeffs)

    def substitute(self, t: int, precision: Optional[int] = None) -> "TruncatedSeries":
        """
        Dosazení q → q^t.

        Args:
            t: Kladný násobek exponentů
            precision: Požadovaná přesnost výsledku, nejvýše t·N

        Returns:
            Řada f(q^t)
        """
        known = t * self.precision
        if precision is None:
            precision = known
        if precision > known:
            raise InsufficientPrecision(
                f"f(q^{t}) je známá jen do přesnosti {known}, požadováno {precision}."
            )
        out = [self.ring.zero] * precision
        for n, c in enumerate(self.coeffs):
            if n * t >= precision:
                break
            out[n * t] = c
        return TruncatedSeries(self.ring, tuple(out))

    def reduce_mod(self, ell: int) -> "TruncatedSeries":
        """
        Obraz řady nad QQ v okruhu F_ℓ.

        Raises:
            NotEllIntegral: některý jmenovatel je dělitelný ℓ (s indexem koeficientu)
        """
        target = ModResidue(ell)
        if isinstance(self.ring, ModResidue):
            if self.ring.ell != ell:
                raise RingMismatch(str(self.ring), str(target))
            return self
        out = []
        for i, c in enumerate(self.coeffs):
            if c.denominator % ell == 0:
                raise NotEllIntegral(ell, QQ.to_text(c), i)
            out.append(target.coerce(c))
        return TruncatedSeries(target, tuple(out))


@dataclass(frozen=True, eq=False)
class QShiftedSeries:
    """Řada q^c · body s racionálním posunem c (domov pro q^{±1/24} u η)."""
    offset: Fraction
    body: TruncatedSeries = field(repr=False)

    @property
    def precision(self) -> int:
        return self.body.precision

    @property
    def ring(self) -> CoefficientRing:
        return self.body.ring

    def __mul__(self, other):
        if isinstance(other, QShiftedSeries):
            return QShiftedSeries(self.offset + other.offset, self.body * other.body)
        if isinstance(other, TruncatedSeries):
            return QShiftedSeries(self.offset, self.body * other)
        if _is_scalar(other):
            return QShiftedSeries(self.offset, self.body.scale(other))
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other) or isinstance(other, TruncatedSeries):
            return self.__mul__(other)
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, QShiftedSeries):
            return NotImplemented
        diff = other.offset - self.offset
        if diff.denominator != 1:
            raise NonIntegralOffset(diff)
        # menší posun zůstává, druhé tělo se posune o celočíselný rozdíl
        if diff >= 0:
            return QShiftedSeries(self.offset, self.body + other.body.shift(int(diff)))
        return QShiftedSeries(other.offset, self.body.shift(int(-diff)) + other.body)

    def __neg__(self) -> "QShiftedSeries":
        return QShiftedSeries(self.offset, -self.body)

    def __sub__(self, other):
        if not isinstance(other, QShiftedSeries):
            return NotImplemented
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, QShiftedSeries):
            return NotImplemented
        return self.offset == other.offset and self.body == other.body

    __hash__ = None

    def derive(self) -> "QShiftedSeries":
        """D(q^c f) = q^c (c·f + D f)."""
        return QShiftedSeries(self.offset, self.body.scale(self.offset) + self.body.derive())

    def power(self, exponent: int) -> "QShiftedSeries":
        return QShiftedSeries(self.offset * exponent, self.body.power(exponent))

    def __pow__(self, exponent):
        return self.power(exponent)

    def to_integral(self) -> TruncatedSeries:
        """Převod na řadu s celými exponenty (posun musí být nezáporné celé číslo)."""
        if self.offset.denominator != 1 or self.offset < 0:
            raise NonIntegralOffset(self.offset)
        return self.body.shift(int(self.offset))

    def __repr__(self) -> str:
        return f"QShiftedSeries(offset={self.offset}, body={self.body!r})"


def derive_q(f: Union[TruncatedSeries, QShiftedSeries]) -> Union[TruncatedSeries, QShiftedSeries]:
    """Operátor D = q d/dq pro oba druhy řad."""
    return f.derive()


def reduce_mod(f: TruncatedSeries, ell: int) -> TruncatedSeries:
    """Redukce koeficientů mod ℓ (viz TruncatedSeries.reduce_mod)."""
    return f.reduce_mod(ell)


def coefficients_equal(f: TruncatedSeries, g: TruncatedSeries) -> bool:
    """Rovnost do společné přesnosti (nula libovolné přesnosti je nula)."""
    return f.first_mismatch(g) is None
