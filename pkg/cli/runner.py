"""Sestavení a spuštění seznamu kontrol, volitelně v poolu procesů."""
from __future__ import annotations
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from tqdm import tqdm

from cli.settings import EngineSettings, apply_settings
from congruences import checks, identities
from congruences.theta import verify_theta
from congruences.report import VerificationReport
from utils.log import get_logger

log = get_logger(__name__)

CHECKS: Dict[str, Callable[..., VerificationReport]] = {
    "theorem1": checks.verify_theorem1,
    "prop31": checks.verify_prop31,
    "g_reduction": checks.verify_g_reduction,
    "cor12": checks.verify_cor12,
    "cor13": checks.verify_cor13,
    "ramanujan-exact": checks.ramanujan_exact_identity,
    "theta": verify_theta,
    "rk": identities.verify_rk_identity,
    "trace": identities.verify_trace_membership,
    "recurrence": identities.verify_recurrences,
    "classical_anchor": identities.verify_classical_anchor,
    "routes": identities.verify_routes,
    "trace_routes": identities.verify_trace_routes,
    "context": identities.verify_context,
    "binomial_sums": identities.verify_binomial_sums,
    "eisenstein_mod": identities.verify_eisenstein_reduction,
}


@dataclass(frozen=True)
class CheckTask:
    """Jedna naplánovaná kontrola: název z CHECKS a její argumenty."""
    check: str
    kwargs: Dict[str, Any] = field(default_factory=dict)

    def describe(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.kwargs.items() if not isinstance(v, (list, tuple)))
        return f"{self.check}({args})"


def run_task(task: CheckTask) -> VerificationReport:
    log.debug(f"[run_task] {task.describe()}")
    return CHECKS[task.check](**task.kwargs)


def _init_worker(settings_data: Dict[str, Any]) -> None:
    apply_settings(EngineSettings(**settings_data))


def run_tasks(tasks: List[CheckTask], jobs: int = 1, settings: Optional[EngineSettings] = None,
              progress: Optional[bool] = None) -> List[VerificationReport]:
    """
    Spustí kontroly a vrátí hlášení v pořadí deklarace (ne dokončení).

    Args:
        tasks: Naplánované kontroly
        jobs: Počet procesů; 1 běží v hlavním procesu
        settings: Nastavení předaná i pracovním procesům
        progress: Zobrazit tqdm na stderr (None = jen na terminálu)
    """
    if progress is None:
        progress = sys.stderr.isatty()
    bar = tqdm(total=len(tasks), disable=not progress, file=sys.stderr, desc="checks", leave=False)
    reports: List[VerificationReport] = []
    try:
        if jobs <= 1 or len(tasks) <= 1:
            for task in tasks:
                reports.append(run_task(task))
                bar.update(1)
        else:
            data = (settings or EngineSettings()).model_dump()
            with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker, initargs=(data,)) as pool:
                for report in pool.map(run_task, tasks):
                    reports.append(report)
                    bar.update(1)
    finally:
        bar.close()
    return reports
