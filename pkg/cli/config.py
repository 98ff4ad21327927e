"""Validovaná konfigurace jednoho běhu příkazové řádky."""
from __future__ import annotations
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator
from sympy import isprime

VERIFY_SUITES = ("theorem1", "prop31", "cor12", "cor13", "rk", "ramanujan-exact", "theta", "routes", "context", "all")
SERIES_KINDS = ("Pell", "Tell", "theta", "rk", "eisenstein", "delta2k", "trace")


class RunConfig(BaseModel):
    """
    Parametry příkazu; neplatná hodnota znamená chybu použití (návratový kód 2).

    Attributes:
        command: "verify", "series" nebo "p"
        target: Sada kontrol nebo druh řady
        ells: Seznam prvočísel ℓ
        ks: Seznam indexů k
        precision: Přesnost N (None = výchozí pro danou kontrolu)
        n_max: Horní mez n (None = výchozí)
        n: Jediný argument pro příkaz p
        format: "human" nebo "json"
        out: Cesta pro JSON dokument
        jobs: Počet paralelních procesů
        raw: Celočíselný pohled před redukcí mod ℓ
    """
    command: Literal["verify", "series", "p"]
    target: Optional[str] = None
    ells: List[int] = Field(default_factory=list)
    ks: List[int] = Field(default_factory=list)
    precision: Optional[int] = None
    n_max: Optional[int] = None
    n: Optional[int] = None
    format: Literal["human", "json"] = "human"
    out: Optional[str] = None
    jobs: int = 1
    raw: bool = False

    @field_validator("ells")
    @classmethod
    def _primes(cls, value: List[int]) -> List[int]:
        for ell in value:
            if ell < 5 or not isprime(ell):
                raise ValueError(f"{ell} není prvočíslo ℓ ≥ 5")
        return value

    @field_validator("ks")
    @classmethod
    def _ks(cls, value: List[int]) -> List[int]:
        for k in value:
            if k < 0:
                raise ValueError(f"k musí být nezáporné, zadáno {k}")
        return value

    @field_validator("precision")
    @classmethod
    def _precision(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 1:
            raise ValueError("přesnost N musí být ≥ 1")
        return value

    @field_validator("n_max", "n")
    @classmethod
    def _non_negative(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 0:
            raise ValueError("hodnota musí být nezáporná")
        return value

    @field_validator("jobs")
    @classmethod
    def _jobs(cls, value: int) -> int:
        if value < 1:
            raise ValueError("počet procesů musí být ≥ 1")
        return value

    @field_validator("target")
    @classmethod
    def _target(cls, value: Optional[str], info) -> Optional[str]:
        command = info.data.get("command")
        if command == "verify" and value not in VERIFY_SUITES:
            raise ValueError(f"neznámá sada kontrol {value!r}, povoleno: {', '.join(VERIFY_SUITES)}")
        if command == "series" and value not in SERIES_KINDS:
            raise ValueError(f"neznámý druh řady {value!r}, povoleno: {', '.join(SERIES_KINDS)}")
        return value
