"""Příkazová řádka: verify, series, p."""
from __future__ import annotations
import sys
from typing import List, Optional

import click
import orjson
import typer
from pydantic import ValidationError

from cli.config import RunConfig
from cli.format import reports_table, series_listing
from cli.runner import run_tasks
from cli.settings import EngineSettings, apply_settings, get_settings
from cli.suites import plan_verify
from constants import EXIT_FAIL, EXIT_OK, EXIT_USAGE, DEFAULT_PRIMES
from persistence.json_io import dump_reports, dump_series, series_to_dict, write_reports
from utils.errors import EngineError, UsageError
from utils.log import configure_logging, get_logger

log = get_logger(__name__)

app = typer.Typer(add_completion=False, no_args_is_help=True,
                  help="Ověřování kongruencí funkce p(n) v přesné aritmetice.")

EllOption = typer.Option(None, "--ell", help="Prvočíslo ℓ (opakovatelné).")
KOption = typer.Option(None, "--k", help="Index k (opakovatelné).")
PrecisionOption = typer.Option(None, "--precision", "-N", help="Přesnost N.")
NMaxOption = typer.Option(None, "--n-max", help="Horní mez n.")
FormatOption = typer.Option("human", "--format", help="human nebo json.")
OutOption = typer.Option(None, "--out", help="Soubor pro JSON dokument.")
JobsOption = typer.Option(None, "--jobs", help="Počet paralelních procesů.")
VerboseOption = typer.Option(False, "--verbose", "-v", help="Podrobné logování.")


def _emit(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


def _emit_bytes(data: bytes) -> None:
    sys.stdout.buffer.write(data)
    sys.stdout.flush()


def _prepare(verbose: bool) -> EngineSettings:
    settings = get_settings()
    configure_logging("DEBUG" if verbose else settings.log_level)
    apply_settings(settings)
    return settings


def _config(**fields) -> RunConfig:
    try:
        return RunConfig(**fields)
    except ValidationError as exc:
        messages = "; ".join(err["msg"] for err in exc.errors())
        raise UsageError(messages) from exc


def _usage_exit(exc: Exception) -> None:
    typer.echo(f"Chyba použití: {exc}", err=True)
    raise typer.Exit(EXIT_USAGE)


@app.command("verify")
def cmd_verify(
    suite: str = typer.Argument(..., help="theorem1|prop31|cor12|cor13|rk|ramanujan-exact|theta|routes|context|all"),
    ell: Optional[List[int]] = EllOption,
    k: Optional[List[int]] = KOption,
    precision: Optional[int] = PrecisionOption,
    n_max: Optional[int] = NMaxOption,
    output_format: str = FormatOption,
    out: Optional[str] = OutOption,
    jobs: Optional[int] = JobsOption,
    verbose: bool = VerboseOption,
) -> None:
    """Spustí sadu kontrol; návratový kód 0 jen pokud žádná neselže."""
    settings = _prepare(verbose)
    try:
        config = _config(command="verify", target=suite, ells=ell or [], ks=k or [], precision=precision,
                         n_max=n_max, format=output_format, out=out, jobs=jobs or settings.jobs)
        tasks = plan_verify(config, settings)
    except UsageError as exc:
        _usage_exit(exc)
    log.info(f"[cmd_verify] suite={suite} tasks={len(tasks)} jobs={config.jobs}")
    reports = run_tasks(tasks, config.jobs, settings, progress=None if config.format == "human" else False)
    if config.out:
        write_reports(config.out, reports)
    if config.format == "json":
        _emit_bytes(dump_reports(reports))
    else:
        _emit(reports_table(reports))
    raise typer.Exit(EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL)


def build_series(config: RunConfig, settings: EngineSettings):
    """Spočte řadu pro příkaz series; vrací (název, řada)."""
    from congruences.pell import P_ell_series, T_ell_series
    from congruences.theta import theta_series
    from modforms.forms import delta_2k, eisenstein
    from recurrences.r_series import r_series_convolution
    from recurrences.traces import trace_series

    kind = config.target
    ell = config.ells[0] if config.ells else DEFAULT_PRIMES[3]
    k = config.ks[0] if config.ks else 6
    if kind == "Pell":
        N = config.precision or settings.congruence_precision
        return f"P_{ell}", P_ell_series(ell, N, raw=config.raw)
    if kind == "Tell":
        N = config.precision or settings.congruence_precision
        return f"T_{ell}", T_ell_series(ell, N, "fast" if settings.fast_path else "rational")
    if kind == "theta":
        N = config.precision or settings.congruence_precision
        return f"theta_{ell}", theta_series(ell, N)
    N = config.precision or settings.exact_precision
    if kind == "rk":
        return f"R_{k}", r_series_convolution(k, N).series
    if kind == "eisenstein":
        return f"E_{2 * k}", eisenstein(2 * k, N).series
    if kind == "delta2k":
        return f"Delta_{2 * k}", delta_2k(k, N).series
    return f"T_{2 * k}", trace_series(2 * k, N).series


@app.command("series")
def cmd_series(
    kind: str = typer.Argument(..., help="Pell|Tell|theta|rk|eisenstein|delta2k|trace"),
    ell: Optional[List[int]] = EllOption,
    k: Optional[List[int]] = KOption,
    precision: Optional[int] = PrecisionOption,
    output_format: str = FormatOption,
    out: Optional[str] = OutOption,
    raw: bool = typer.Option(False, "--raw", help="Celá čísla před redukcí mod ℓ."),
    verbose: bool = VerboseOption,
) -> None:
    """Vypíše koeficienty řady (zlomky jako p/q, zbytky jako celá čísla)."""
    settings = _prepare(verbose)
    try:
        config = _config(command="series", target=kind, ells=ell or [], ks=k or [], precision=precision,
                         format=output_format, out=out, raw=raw)
        name, series = build_series(config, settings)
    except (UsageError, EngineError) as exc:
        _usage_exit(exc)
    params = {"ell": config.ells[0] if config.ells else None, "k": config.ks[0] if config.ks else None,
              "N": series.precision, "raw": config.raw or None}
    document = dump_series([series_to_dict(name, series, params)])
    if config.out:
        with open(config.out, "wb") as f:
            f.write(document)
    if config.format == "json":
        _emit_bytes(document)
    else:
        _emit(series_listing(name, series))
    raise typer.Exit(EXIT_OK)


@app.command("p")
def cmd_partition(
    n: Optional[int] = typer.Option(None, "--n", help="Jediný argument n."),
    n_max: Optional[int] = NMaxOption,
    output_format: str = FormatOption,
    verbose: bool = VerboseOption,
) -> None:
    """Přesné p(n), nebo celá tabulka p(0 … n_max)."""
    from recurrences.pentagonal import PARTITIONS

    _prepare(verbose)
    try:
        config = _config(command="p", n=n, n_max=n_max, format=output_format)
    except UsageError as exc:
        _usage_exit(exc)
    if config.n is not None:
        values = {config.n: PARTITIONS(config.n)}
    else:
        upto = config.n_max if config.n_max is not None else 20
        values = dict(enumerate(PARTITIONS.values(upto + 1)))
    if config.format == "json":
        _emit_bytes(orjson.dumps({str(i): str(v) for i, v in values.items()}, option=orjson.OPT_SORT_KEYS) + b"\n")
    elif config.n is not None:
        _emit(f"{values[config.n]}\n")
    else:
        _emit("".join(f"{i}: {v}\n" for i, v in values.items()))
    raise typer.Exit(EXIT_OK)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Spustí CLI a vrátí návratový kód (0 vše prošlo, 1 selhání, 2 chyba použití).

    Args:
        argv: Argumenty bez názvu programu; None bere sys.argv[1:]
    """
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        result = app(args=args, prog_name="partcong", standalone_mode=False)
    except click.exceptions.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Exit as exc:
        return exc.exit_code
    if isinstance(result, int):
        return result
    return EXIT_OK
