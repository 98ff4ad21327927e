"""Skaláry závislé na prvočísle ℓ: δ_ℓ, m_ℓ, α_ℓ, ϱ_ℓ, c_ℓ a znaménka θ_ℓ."""
from __future__ import annotations
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Tuple

from sympy import isprime, jacobi_symbol

from recurrences.factorials import FactorialKit
from utils.errors import IdentityViolation, InvalidPrime


@dataclass(frozen=True)
class PrimeContext:
    """
    Všechny skaláry pro dané ℓ, spočtené a vzájemně ověřené při konstrukci.

    Attributes:
        ell: Prvočíslo ℓ ≥ 5
        delta: δ_ℓ = (ℓ² − 1)/24
        m_ell: +1 pro ℓ ≡ 1 (mod 6), jinak −1
        alpha: α_ℓ = (ℓ·m_ℓ − 1)/6
        rho: ϱ_ℓ ∈ [0, ℓ)
        c: Konstanta c_ℓ odvozená ze znaménka θ_ℓ (c·ϱ ≡ theta_sign)
        c_printed: 2·3̄·(−1/ℓ)·((ℓ+1)/2)!^{ℓ−3} mod ℓ
        theta_sign: (−1)^{α_ℓ+1}, absolutní člen θ_ℓ
        printed_sign: σ_ℓ = −(−1/ℓ)
        kronecker: (−1/ℓ)
        routes: Hodnoty ϱ_ℓ jednotlivými cestami (pro hlášení)
    """
    ell: int
    delta: int
    m_ell: int
    alpha: int
    rho: int
    c: int
    c_printed: int
    theta_sign: int
    printed_sign: int
    kronecker: int
    routes: Tuple[Tuple[str, int], ...] = ()

    @property
    def half_factorial(self) -> int:
        """((ℓ+1)/2)! mod ℓ."""
        return factorial((self.ell + 1) // 2) % self.ell

    def route_values(self) -> Dict[str, int]:
        return dict(self.routes)


def binomial_even_sums(M: int) -> Tuple[int, int]:
    """
    (Σ_r C(2M, 2r)·r, Σ_r C(2M, 2r)) přímým sečtením.

    Uzavřené tvary jsou 2^{2M−2}·M a 2^{2M−1}.
    """
    if M < 1:
        raise ValueError(f"M musí být ≥ 1, zadáno {M}.")
    weighted = sum(comb(2 * M, 2 * r) * r for r in range(M + 1))
    plain = sum(comb(2 * M, 2 * r) for r in range(M + 1))
    return weighted, plain


def falling_half(ell: int) -> int:
    """(ℓ−3)_{(ℓ−3)/2} mod ℓ."""
    value = FactorialKit.falling(ell - 3, (ell - 3) // 2)
    return int(value) % ell


def rho_from_binomial_sum(ell: int) -> int:
    """ϱ_ℓ = 32/2^ℓ · (ℓ−3)²_{(ℓ−3)/2} · Σ_r C(ℓ−1, 2r)(r+1)/(ℓ−1)! mod ℓ."""
    x = falling_half(ell)
    total = sum(comb(ell - 1, 2 * r) * (r + 1) for r in range((ell - 1) // 2 + 1))
    inv_pow2 = pow(pow(2, ell, ell), -1, ell)
    inv_fact = pow(factorial(ell - 1) % ell, -1, ell)
    return 32 * inv_pow2 * x * x * total * inv_fact % ell


def rho_intermediate(ell: int) -> int:
    """ϱ_ℓ = 2·(ℓ−3)²_{(ℓ−3)/2}·(ℓ+3)/(ℓ−1)! mod ℓ."""
    x = falling_half(ell)
    return 2 * x * x * (ell + 3) * pow(factorial(ell - 1) % ell, -1, ell) % ell


def rho_wilson(ell: int) -> int:
    """ϱ_ℓ = −6·(ℓ−3)²_{(ℓ−3)/2} mod ℓ (po Wilsonově větě)."""
    x = falling_half(ell)
    return -6 * x * x % ell


def rho_closed(ell: int) -> int:
    """ϱ_ℓ = −3·2̄·((ℓ+1)/2)!² mod ℓ."""
    f = factorial((ell + 1) // 2) % ell
    return -3 * pow(2, -1, ell) * f * f % ell


def sigma_sign(ell: int) -> int:
    """σ_ℓ podle zbytku ℓ mod 6: (−1)^{(ℓ+5)/6} resp. (−1)^{(ℓ+1)/6}."""
    exponent = (ell + 5) // 6 if ell % 6 == 1 else (ell + 1) // 6
    return -1 if exponent % 2 else 1


@lru_cache(maxsize=None)
def prime_context(ell: int) -> PrimeContext:
    """
    Sestaví PrimeContext a ověří shodu všech dostupných cest.

    Raises:
        InvalidPrime: ℓ není prvočíslo ≥ 5
        IdentityViolation: cesty pro ϱ_ℓ, c_ℓ nebo znaménka se neshodují
    """
    if not isinstance(ell, int) or ell < 5 or not isprime(ell):
        raise InvalidPrime(ell)

    m_ell = 1 if ell % 6 == 1 else -1
    alpha = (ell * m_ell - 1) // 6
    delta = (ell * ell - 1) // 24

    routes = (
        ("binomial_sum", rho_from_binomial_sum(ell)),
        ("intermediate", rho_intermediate(ell)),
        ("wilson", rho_wilson(ell)),
        ("closed", rho_closed(ell)),
    )
    values = {v for _, v in routes}
    if len(values) != 1:
        raise IdentityViolation(f"ϱ_{ell} se podle cest liší: {dict(routes)}.")
    rho = routes[0][1]

    kronecker = int(jacobi_symbol(-1, ell))
    printed_sign = -kronecker
    if printed_sign != sigma_sign(ell):
        raise IdentityViolation(f"σ_{ell}: −(−1/ℓ) = {printed_sign}, tvar podle ℓ mod 6 = {sigma_sign(ell)}.")

    theta_sign = -1 if (alpha + 1) % 2 else 1
    f = factorial((ell + 1) // 2) % ell
    inv3 = pow(3, -1, ell)
    c = theta_sign * pow(rho, -1, ell) % ell
    c_closed = 2 * inv3 * (-theta_sign) * pow(f, ell - 3, ell) % ell
    if c != c_closed:
        raise IdentityViolation(f"c_{ell}: ϱ⁻¹ dává {c}, uzavřený tvar {c_closed}.")
    c_printed = 2 * inv3 * kronecker * pow(f, ell - 3, ell) % ell

    x = falling_half(ell)
    expected_x = (-1) ** ((ell - 3) // 2) * f * pow(2, -1, ell) % ell
    if x != expected_x:
        raise IdentityViolation(f"(ℓ−3)_(ℓ−3)/2 ≡ {x}, očekáváno {expected_x} (mod {ell}).")

    return PrimeContext(
        ell=ell, delta=delta, m_ell=m_ell, alpha=alpha, rho=rho, c=c,
        c_printed=c_printed, theta_sign=theta_sign, printed_sign=printed_sign,
        kronecker=kronecker, routes=routes,
    )
