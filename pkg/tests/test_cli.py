import orjson
import pytest

from cli import runner
from cli.config import RunConfig
from cli.main import main
from cli.settings import EngineSettings
from cli.suites import plan_verify
from congruences.report import ReportParams, VerificationReport, set_report_timings
from constants import EXIT_FAIL, EXIT_OK, EXIT_USAGE, Status
from persistence.json_io import load_reports
from utils.errors import UsageError


@pytest.fixture(autouse=True)
def restore_timings():
    yield
    set_report_timings(True)


def test_partition_single(capsys):
    assert main(["p", "--n", "4"]) == EXIT_OK
    assert capsys.readouterr().out == "5\n"
    assert main(["p", "--n", "19"]) == EXIT_OK
    assert capsys.readouterr().out == "490\n"


def test_partition_table_json(capsys):
    assert main(["p", "--n-max", "5", "--format", "json"]) == EXIT_OK
    doc = orjson.loads(capsys.readouterr().out)
    assert doc == {"0": "1", "1": "1", "2": "2", "3": "3", "4": "5", "5": "7"}


def test_invalid_prime_is_usage_error(capsys):
    assert main(["verify", "theorem1", "--ell", "9"]) == EXIT_USAGE
    assert main(["verify", "theorem1", "--ell", "3"]) == EXIT_USAGE


def test_unknown_suite(capsys):
    assert main(["verify", "bogus"]) == EXIT_USAGE


def test_cor12_outside_supported_primes(capsys):
    assert main(["verify", "cor12", "--ell", "13"]) == EXIT_USAGE


def test_unknown_option(capsys):
    assert main(["verify", "theorem1", "--nope"]) == EXIT_USAGE


def test_verify_theorem1_human(capsys):
    assert main(["verify", "theorem1", "--ell", "13", "--precision", "20"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "theorem1" in out
    assert "1 checks: 1 pass, 0 fail, 0 skipped" in out


def test_verify_json_and_out_file(capsys, tmp_path):
    target = tmp_path / "cor12.json"
    code = main(["verify", "cor12", "--ell", "5", "--ell", "7", "--n-max", "50",
                 "--format", "json", "--out", str(target)])
    assert code == EXIT_OK
    doc = orjson.loads(capsys.readouterr().out)
    assert [r["params"]["ell"] for r in doc["reports"]] == [5, 7]
    assert all(r["status"] == Status.PASS for r in doc["reports"])
    assert len(load_reports(target)) == 2


def test_failure_exit_code(capsys, monkeypatch):
    def broken(ell, n_max):
        return VerificationReport("cor12", ReportParams(ell=ell, n_max=n_max), Status.FAIL,
                                  first_mismatch=3, lhs="1", rhs="0")

    monkeypatch.setitem(runner.CHECKS, "cor12", broken)
    assert main(["verify", "cor12", "--ell", "5"]) == EXIT_FAIL
    assert "fail" in capsys.readouterr().out


def test_series_pell_raw(capsys):
    assert main(["series", "Pell", "--ell", "13", "-N", "6", "--raw"]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("# P_13")
    assert out[1:] == ["0: 0", "1: 11", "2: 490", "3: 8349", "4: 89134", "5: 715220"]


def test_series_eisenstein_json(capsys):
    assert main(["series", "eisenstein", "--k", "2", "-N", "3", "--format", "json"]) == EXIT_OK
    doc = orjson.loads(capsys.readouterr().out)
    entry = doc["series"][0]
    assert entry["series"] == "E_4"
    assert entry["coefficients"] == ["1", "240", "2160"]


def test_series_unknown_kind(capsys):
    assert main(["series", "zeta"]) == EXIT_USAGE


def test_plan_all_ignores_restricted_ells():
    config = RunConfig(command="verify", target="all", ells=[13], precision=10, n_max=10)
    tasks = plan_verify(config, EngineSettings())
    cor12 = [t for t in tasks if t.check == "cor12"]
    assert [t.kwargs["ell"] for t in cor12] == [5, 7, 11]
    assert all(t.kwargs["ell"] == 13 for t in tasks if t.check == "theorem1")


def test_plan_rk_avoids_duplicate_trace_checks():
    config = RunConfig(command="verify", target="rk", ks=[12], precision=20, n_max=10)
    checks = [t.check for t in plan_verify(config, EngineSettings())]
    assert checks.count("trace") == 0
    assert checks[0] == "rk"


def test_plan_restricted_suite_rejects_prime():
    config = RunConfig(command="verify", target="ramanujan-exact", ells=[11])
    with pytest.raises(UsageError):
        plan_verify(config, EngineSettings())


def test_run_tasks_keeps_declaration_order():
    tasks = [runner.CheckTask("cor12", {"ell": ell, "n_max": 10}) for ell in (11, 5, 7)]
    reports = runner.run_tasks(tasks, jobs=1, progress=False)
    assert [r.params.ell for r in reports] == [11, 5, 7]


def test_run_tasks_worker_pool_keeps_declaration_order():
    tasks = [runner.CheckTask("cor12", {"ell": ell, "n_max": 20}) for ell in (11, 5, 7)]
    settings = EngineSettings(report_timings=False)
    reports = runner.run_tasks(tasks, jobs=2, settings=settings, progress=False)
    assert [r.params.ell for r in reports] == [11, 5, 7]
    assert all(r.status == Status.PASS for r in reports)
    # pracovní procesy převzaly nastavení z hlavního procesu
    assert all(r.elapsed_ms == 0 for r in reports)


def test_verify_with_worker_pool(capsys):
    code = main(["verify", "cor12", "--n-max", "60", "--jobs", "2", "--format", "json"])
    assert code == EXIT_OK
    doc = orjson.loads(capsys.readouterr().out)
    assert [r["params"]["ell"] for r in doc["reports"]] == [5, 7, 11]


def test_plan_rk_trace_branch_for_every_k_from_two():
    config = RunConfig(command="verify", target="rk", ks=list(range(0, 8)), precision=20, n_max=10)
    tasks = plan_verify(config, EngineSettings())
    trace_branch = [t.kwargs["k"] for t in tasks if t.check == "recurrence" and t.kwargs.get("branch") == 4]
    assert trace_branch == [2, 3, 4, 5, 6, 7]


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("PARTCONG_MEMBERSHIP_CAP", "50")
    monkeypatch.setenv("PARTCONG_FAST_PATH", "false")
    settings = EngineSettings()
    assert settings.membership_cap == 50
    assert settings.fast_path is False
