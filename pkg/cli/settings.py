"""Nastavení výpočtů z prostředí (prefix PARTCONG_) a volitelného souboru .env."""
from __future__ import annotations
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from constants import DEFAULT_CONGRUENCE_PRECISION, DEFAULT_EXACT_PRECISION


class EngineSettings(BaseSettings):
    """
    Výchozí hodnoty běhů; každé pole lze přepsat proměnnou PARTCONG_<POLE>.

    Attributes:
        congruence_precision: N pro kongruence mod ℓ
        exact_precision: N pro přesné identity nad QQ
        karatsuba_threshold: Práh násobení dělením na poloviny (0 = vypnuto)
        membership_cap: Nejvyšší přesnost ověření stop proti bázi S_{2k}
        fast_path: Počítat 𝒯_ℓ přímo mod ℓ
        jobs: Počet paralelních procesů
        log_level: Úroveň logování
        report_timings: False zapisuje elapsed_ms = 0
    """
    model_config = SettingsConfigDict(env_prefix="PARTCONG_", env_file=".env", extra="ignore")

    congruence_precision: int = Field(DEFAULT_CONGRUENCE_PRECISION, ge=1)
    exact_precision: int = Field(DEFAULT_EXACT_PRECISION, ge=1)
    karatsuba_threshold: int = Field(64, ge=0)
    membership_cap: int = Field(400, ge=1)
    fast_path: bool = True
    jobs: int = Field(1, ge=1)
    log_level: str = "WARNING"
    report_timings: bool = True


@lru_cache(maxsize=1)
def get_settings() -> EngineSettings:
    return EngineSettings()


def apply_settings(settings: EngineSettings) -> None:
    """Promítne nastavení do modulových přepínačů výpočetního jádra."""
    from congruences.report import set_report_timings
    from recurrences.traces import set_membership_cap
    from series.rings import set_karatsuba_threshold

    set_karatsuba_threshold(settings.karatsuba_threshold)
    set_membership_cap(settings.membership_cap)
    set_report_timings(settings.report_timings)
