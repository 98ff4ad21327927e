"""Modul pro export/import výsledků kontrol do/z JSON formátu (persistence).

Dokument má tvar {"meta": {...}, "reports": [...]} a zapisuje se se seřazenými
klíči, takže stejná konfigurace dává bajtově stejný výstup.
"""
from __future__ import annotations
import os
from typing import Any, Dict, Iterable, List, Union

import orjson

from congruences.report import VerificationReport
from constants import REPORT_FORMAT, REPORT_VERSION
from series.truncated import TruncatedSeries
from utils.log import get_logger

log = get_logger(__name__)

_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2


def reports_to_dict(reports: Iterable[VerificationReport]) -> Dict[str, Any]:
    """
    Převede seznam hlášení na slovník (pro JSON export).

    Args:
        reports: Hlášení v pořadí deklarace

    Returns:
        Slovník s klíči "meta" a "reports"
    """
    return {
        "meta": {"format": REPORT_FORMAT, "version": REPORT_VERSION},
        "reports": [r.to_dict() for r in reports],
    }


def dump_reports(reports: Iterable[VerificationReport]) -> bytes:
    """Serializuje hlášení na JSON bajty (seřazené klíče, odsazení 2)."""
    return orjson.dumps(reports_to_dict(reports), option=_OPTIONS) + b"\n"


def write_reports(path: Union[str, os.PathLike], reports: Iterable[VerificationReport]) -> None:
    """Zapíše dokument s hlášeními do souboru."""
    data = dump_reports(reports)
    with open(path, "wb") as f:
        f.write(data)
    log.info(f"[write_reports] wrote {len(data)} bytes to {path}")


def load_reports(source: Union[bytes, str, os.PathLike]) -> List[VerificationReport]:
    """
    Načte hlášení z JSON bajtů nebo ze souboru.

    Raises:
        ValueError: dokument nemá očekávaný formát
    """
    if isinstance(source, bytes):
        raw = source
    else:
        with open(source, "rb") as f:
            raw = f.read()
    data = orjson.loads(raw)
    meta = data.get("meta", {}) if isinstance(data, dict) else {}
    if meta.get("format") != REPORT_FORMAT:
        raise ValueError(f"Neznámý formát dokumentu: {meta.get('format')!r}")
    if meta.get("version") != REPORT_VERSION:
        raise ValueError(f"Nepodporovaná verze dokumentu: {meta.get('version')!r}")
    return [VerificationReport.from_dict(item) for item in data.get("reports", [])]


def series_to_dict(name: str, series: TruncatedSeries, params: Dict[str, Any]) -> Dict[str, Any]:
    """
    Výpis koeficientů řady pro JSON: zlomky jako "p/q", zbytky jako celá čísla.
    """
    if series.ring.name == "QQ":
        coefficients: List[Any] = series.to_text()
    else:
        coefficients = [int(c) for c in series.coeffs]
    return {
        "series": name,
        "params": {k: v for k, v in params.items() if v is not None},
        "ring": series.ring.name,
        "precision": series.precision,
        "coefficients": coefficients,
    }


def dump_series(entries: Iterable[Dict[str, Any]]) -> bytes:
    doc = {"meta": {"format": "partcong-series", "version": REPORT_VERSION}, "series": list(entries)}
    return orjson.dumps(doc, option=_OPTIONS) + b"\n"
