"""Rozpis sad kontrol příkazu verify na jednotlivé úlohy."""
from __future__ import annotations
from typing import Callable, Dict, List, Sequence

from sympy import primerange

from cli.config import RunConfig
from cli.settings import EngineSettings
from cli.runner import CheckTask
from congruences.identities import has_closed_form
from constants import (
    COR12_OFFSETS,
    COR12_PRIMES,
    COR13_PRIMES,
    DEFAULT_K_RANGE,
    DEFAULT_PRIMES,
    RAMANUJAN_PRIMES,
    TRACE_K_RANGE,
)
from recurrences.r_series import BRANCH_TRACE, default_branch
from utils.errors import UsageError

CONTEXT_PRIMES = tuple(primerange(5, 98))


def _pick(values: Sequence[int], default: Sequence[int]) -> List[int]:
    return list(values) if values else list(default)


def _restricted(config: RunConfig, allowed: Sequence[int], default: Sequence[int], suite: str) -> List[int]:
    ells = _pick(config.ells, default)
    bad = [ell for ell in ells if ell not in allowed]
    if bad:
        raise UsageError(f"Sada {suite} podporuje jen ℓ ∈ {sorted(allowed)}, zadáno {bad}.")
    return ells


def _route(settings: EngineSettings) -> str:
    return "fast" if settings.fast_path else "rational"


def plan_theorem1(config: RunConfig, settings: EngineSettings) -> List[CheckTask]:
    N = config.precision or settings.congruence_precision
    return [CheckTask("theorem1", {"ell": ell, "N": N, "route": _route(settings)})
            for ell in _pick(config.ells, DEFAULT_PRIMES)]


def plan_prop31(config: RunConfig, settings: EngineSettings) -> List[CheckTask]:
    n_max = config.n_max if config.n_max is not None else 50
    ells = _pick(config.ells, DEFAULT_PRIMES)
    tasks = [CheckTask("prop31", {"ell": ell, "n_max": n_max, "route": _route(settings)}) for ell in ells]
    tasks.append(CheckTask("g_reduction", {"primes": ells, "samples": 200}))
    return tasks


def plan_cor12(config: RunConfig, settings: EngineSettings) -> List[CheckTask]:
    n_max = config.n_max if config.n_max is not None else 500
    return [CheckTask("cor12", {"ell": ell, "n_max": n_max})
            for ell in _restricted(config, tuple(COR12_OFFSETS), COR12_PRIMES, "cor12")]


def plan_cor13(config: RunConfig, settings: EngineSettings) -> List[CheckTask]:
    N = config.precision or 20
    return [CheckTask("cor13", {"ell": ell, "N": N, "route": _route(settings)})
            for ell in _pick(config.ells, COR13_PRIMES)]


def plan_rk(config: RunConfig, settings: EngineSettings) -> List[CheckTask]:
    """Identity pro R_k, stopy v S_{2k}, rekurence pro p(n) a kotva E_4³ − E_6² = 1728Δ."""
    N = config.precision or settings.exact_precision
    n_max = config.n_max if config.n_max is not None else 300
    ks = _pick(config.ks, DEFAULT_K_RANGE)
    tasks = [CheckTask("rk", {"k": k, "N": N}) for k in ks]
    trace_N = config.precision or 100
    # k bez uzavřeného tvaru už stopu ověřuje samotná kontrola "rk"
    trace_ks = [k for k in _pick(config.ks, TRACE_K_RANGE)
                if k >= 6 and not (k in ks and not has_closed_form(k))]
    tasks += [CheckTask("trace", {"two_k": 2 * k, "N": trace_N}) for k in trace_ks]
    for k in ks:
        tasks.append(CheckTask("recurrence", {"k": k, "n_max": n_max}))
        # větev se stopou platí pro každé k ≥ 2
        if k >= 2 and default_branch(k) != BRANCH_TRACE:
            tasks.append(CheckTask("recurrence", {"k": k, "n_max": n_max, "branch": BRANCH_TRACE}))
    tasks.append(CheckTask("classical_anchor", {"N": N}))
    return tasks


def plan_ramanujan(config: RunConfig, settings: EngineSettings) -> List[CheckTask]:
    N = config.precision or settings.exact_precision
    return [CheckTask("ramanujan-exact", {"ell": ell, "N": N})
            for ell in _restricted(config, RAMANUJAN_PRIMES, RAMANUJAN_PRIMES, "ramanujan-exact")]


def plan_theta(config: RunConfig, settings: EngineSettings) -> List[CheckTask]:
    N = config.precision or 400
    return [CheckTask("theta", {"ell": ell, "N": N}) for ell in _pick(config.ells, DEFAULT_PRIMES)]


def plan_context(config: RunConfig, settings: EngineSettings) -> List[CheckTask]:
    tasks = [CheckTask("context", {"ell": ell}) for ell in _pick(config.ells, CONTEXT_PRIMES)]
    tasks.append(CheckTask("binomial_sums", {"M_max": config.n_max if config.n_max is not None else 64}))
    N = config.precision or settings.exact_precision
    tasks += [CheckTask("eisenstein_mod", {"ell": ell, "N": N}) for ell in _pick(config.ells, DEFAULT_PRIMES)]
    return tasks


def plan_routes(config: RunConfig, settings: EngineSettings) -> List[CheckTask]:
    N = config.precision or 100
    tasks = [CheckTask("routes", {"k": k, "N": N}) for k in _pick(config.ks, DEFAULT_K_RANGE)]
    trace_N = config.precision or settings.congruence_precision
    tasks += [CheckTask("trace_routes", {"ell": ell, "N": trace_N}) for ell in _pick(config.ells, DEFAULT_PRIMES)]
    return tasks


PLANNERS: Dict[str, Callable[[RunConfig, EngineSettings], List[CheckTask]]] = {
    "theorem1": plan_theorem1,
    "prop31": plan_prop31,
    "cor12": plan_cor12,
    "cor13": plan_cor13,
    "rk": plan_rk,
    "ramanujan-exact": plan_ramanujan,
    "theta": plan_theta,
    "context": plan_context,
    "routes": plan_routes,
}


def plan_verify(config: RunConfig, settings: EngineSettings) -> List[CheckTask]:
    """
    Úlohy pro zvolenou sadu; "all" spojí všechny sady s výchozími parametry.

    Raises:
        UsageError: ℓ mimo rozsah omezené sady
    """
    if config.target == "all":
        tasks: List[CheckTask] = []
        for name, planner in PLANNERS.items():
            restricted = name in ("cor12", "ramanujan-exact")
            sub = config.model_copy(update={"ells": []}) if restricted else config
            tasks += planner(sub, settings)
        return tasks
    return PLANNERS[config.target](config, settings)
