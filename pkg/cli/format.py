"""Lidsky čitelný výstup: tabulka hlášení a výpis koeficientů."""
from __future__ import annotations
import io
from typing import Iterable, List, Optional

from rich.console import Console
from rich.table import Table

from congruences.report import VerificationReport
from constants import Status
from series.truncated import TruncatedSeries

_WIDTH = 160


def _cell(value: Optional[object]) -> str:
    return "-" if value is None else str(value)


def _render(renderable) -> str:
    stream = io.StringIO()
    console = Console(file=stream, width=_WIDTH, color_system=None, highlight=False, soft_wrap=True)
    console.print(renderable)
    return stream.getvalue()


def reports_table(reports: Iterable[VerificationReport]) -> str:
    """Tabulka s pevnými sloupci check, ℓ, k, N, n_max, status, mismatch, lhs, rhs, ms."""
    reports = list(reports)
    table = Table(show_lines=False, box=None, pad_edge=False)
    for column in ("check", "ell", "k", "N", "n_max", "status", "first_mismatch", "lhs", "rhs", "elapsed_ms"):
        table.add_column(column, no_wrap=True)
    for r in reports:
        p = r.params
        table.add_row(r.check, _cell(p.ell), _cell(p.k), _cell(p.N), _cell(p.n_max), r.status,
                      _cell(r.first_mismatch), _cell(r.lhs), _cell(r.rhs), f"{r.elapsed_ms:.1f}")
    return _render(table) + summary_line(reports) + "\n"


def summary_line(reports: List[VerificationReport]) -> str:
    counts = {s: sum(1 for r in reports if r.status == s) for s in (Status.PASS, Status.FAIL, Status.SKIPPED)}
    return f"{len(reports)} checks: {counts[Status.PASS]} pass, {counts[Status.FAIL]} fail, {counts[Status.SKIPPED]} skipped"


def series_listing(name: str, series: TruncatedSeries) -> str:
    """Řádky "n: hodnota"; zlomky jako p/q, zbytky jako kanonická celá čísla."""
    lines = [f"# {name} ({series.ring.name}, N={series.precision})"]
    lines += [f"{n}: {text}" for n, text in enumerate(series.to_text())]
    return "\n".join(lines) + "\n"
