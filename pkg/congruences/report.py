"""Strukturovaný výsledek kontroly identity."""
from __future__ import annotations
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional

from dataclasses_json import DataClassJsonMixin

from constants import Status
from series.rings import format_rational
from series.truncated import TruncatedSeries

# Když je False, elapsed_ms se zapisuje jako 0 a JSON je bajtově reprodukovatelný
REPORT_TIMINGS = True


def set_report_timings(enabled: bool) -> None:
    global REPORT_TIMINGS
    REPORT_TIMINGS = bool(enabled)


@dataclass
class ReportParams(DataClassJsonMixin):
    """Parametry kontroly (nepoužité jsou None)."""
    ell: Optional[int] = None
    k: Optional[int] = None
    N: Optional[int] = None
    n_max: Optional[int] = None


@dataclass
class VerificationReport(DataClassJsonMixin):
    """
    Výsledek jedné kontroly.

    Attributes:
        check: Název kontroly ("theorem1", "prop31", ...)
        params: Parametry běhu
        status: "pass", "fail" nebo "skipped"
        first_mismatch: Nejmenší index, kde se strany liší (jen při fail)
        lhs: Hodnota levé strany v tomto indexu (text)
        rhs: Hodnota pravé strany v tomto indexu (text)
        elapsed_ms: Doba běhu v milisekundách
        details: Doplňující údaje (sekundární cesty, varianty konstant)
        skipped: Indexy vynechané kvůli degeneraci
    """
    check: str
    params: ReportParams
    status: str
    first_mismatch: Optional[int] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    elapsed_ms: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)
    skipped: List[int] = field(default_factory=list)

    def __post_init__(self):
        if self.status not in (Status.PASS, Status.FAIL, Status.SKIPPED):
            raise ValueError(f"Neznámý stav kontroly: {self.status}")
        if self.status == Status.FAIL and (self.first_mismatch is None or self.lhs is None or self.rhs is None):
            raise ValueError("Neúspěšná kontrola musí nést index neshody a obě strany.")

    @property
    def passed(self) -> bool:
        return self.status != Status.FAIL


def format_value(value: Any) -> str:
    """Kanonický text hodnoty: zlomky "p/q", zbytky a celá čísla dekadicky."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


class Stopwatch:
    """Měří dobu běhu v ms; při vypnutém měření vrací 0."""

    def __init__(self):
        self._start = time.perf_counter()
        self.elapsed_ms = 0.0

    def stop(self) -> float:
        if REPORT_TIMINGS:
            self.elapsed_ms = round((time.perf_counter() - self._start) * 1000.0, 3)
        return self.elapsed_ms


@contextmanager
def stopwatch() -> Iterator[Stopwatch]:
    watch = Stopwatch()
    try:
        yield watch
    finally:
        watch.stop()


def mismatch_report(check: str, params: ReportParams, index: int, lhs: Any, rhs: Any,
                    **kwargs) -> VerificationReport:
    return VerificationReport(check, params, Status.FAIL, index, format_value(lhs), format_value(rhs), **kwargs)


def compare_series(check: str, params: ReportParams, lhs: TruncatedSeries, rhs: TruncatedSeries,
                   elapsed_ms: float = 0.0, details: Optional[Dict[str, Any]] = None) -> VerificationReport:
    """
    Porovná dvě řady do společné přesnosti.

    Returns:
        pass, nebo fail s nejmenším neshodným exponentem a svědky
    """
    index = lhs.first_mismatch(rhs)
    details = dict(details or {})
    if index is None:
        return VerificationReport(check, params, Status.PASS, elapsed_ms=elapsed_ms, details=details)
    return mismatch_report(check, params, index, lhs[index], rhs[index], elapsed_ms=elapsed_ms, details=details)
