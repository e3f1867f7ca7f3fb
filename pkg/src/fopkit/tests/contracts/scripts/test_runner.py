"""
Contract tests for the subcommand runner.

Tests cover:
- Subcommand discovery and loading
- Exit codes for success, invalid options and failed computations
"""

import pytest

from fopkit.exceptions import ConfigError
from fopkit.scripts.base import BaseScript
from fopkit.scripts.norms import NormsScript
from fopkit.scripts.radicals import RadicalsScript
from fopkit.scripts.runner import EXIT_CONFIG, EXIT_FAILURE, EXIT_OK, ScriptRunner

SUBCOMMANDS = [
    "cubic",
    "discriminants",
    "gap",
    "mclaughlin",
    "nonrational",
    "norms",
    "prational",
    "quintic-list",
    "radicals",
    "regulator-scan",
    "units",
    "verify-powers",
]


@pytest.fixture
def runner() -> ScriptRunner:
    return ScriptRunner()


@pytest.mark.contract
class TestScriptDiscovery:
    """Tests for available_scripts() and load_script()."""

    def test_available_scripts(self, runner: ScriptRunner):
        assert runner.available_scripts() == SUBCOMMANDS

    @pytest.mark.parametrize("name", SUBCOMMANDS)
    def test_every_subcommand_loads(self, runner: ScriptRunner, name: str):
        script_class = runner.load_script(name)

        assert issubclass(script_class, BaseScript)
        assert script_class is not BaseScript

    def test_loads_own_class_not_imported_one(self, runner: ScriptRunner):
        """discriminants imports RadicalsScript but defines its own subclass."""
        script_class = runner.load_script("discriminants")

        assert script_class is not RadicalsScript
        assert issubclass(script_class, RadicalsScript)
        assert runner.load_script("norms") is NormsScript

    def test_unknown_script(self, runner: ScriptRunner):
        with pytest.raises(ConfigError):
            runner.load_script("factor-everything")

    def test_radicals_help_explains_degenerate_rows(self):
        """The leading 0,1 row of t^2 - 1 is documented in --help."""
        text = " ".join(RadicalsScript.build_parser("radicals").format_help().split())

        assert "Degenerate radicals (M = 0 from t^2 - 1 at t = 1) are listed first" in text
        assert "(they still count in N)" in text


@pytest.mark.contract
class TestExitCodes:
    """Tests for run_script() exit codes."""

    def test_success(self, runner: ScriptRunner, capsys: pytest.CaptureFixture[str]):
        assert runner.run_script("radicals", ["--bound", "3"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[-1].startswith("# N=")

    def test_unknown_script(self, runner: ScriptRunner):
        assert runner.run_script("factor-everything", ["--bound", "3"]) == EXIT_CONFIG

    @pytest.mark.parametrize(
        "name,args,reason",
        [
            ("radicals", ["--bound", "0"], "bound below 1"),
            ("radicals", ["--bound", "10", "--columns", "M,radical"], "unknown column"),
            ("gap", ["--s", "1", "--bound", "10", "--columns", "M"], "column of another row model"),
            ("norms", ["--s", "1", "--nu", "0", "--bound", "10"], "nu below 1"),
            ("prational", ["--p", "9", "--bound", "10"], "p not prime"),
            ("nonrational", ["--p", "3", "--q", "11", "--bound", "10"], "q not 1 mod p"),
            ("mclaughlin", ["--k", "2", "--m", "2", "--u", "1", "--v", "1", "--bound", "3"], "base of norm -1"),
            ("units", ["--s", "1", "--bound", "100000000"], "long run without --allow-long"),
        ],
    )
    def test_invalid_options(self, runner: ScriptRunner, name: str, args: list[str], reason: str):
        assert runner.run_script(name, args) == EXIT_CONFIG, f"Failed for: {reason}"

    def test_argparse_errors_exit_2(self, runner: ScriptRunner):
        with pytest.raises(SystemExit) as excinfo:
            runner.run_script("radicals", ["--bound", "3", "--poly", "t3"])

        assert excinfo.value.code == 2

    def test_computation_failure(self, runner: ScriptRunner, monkeypatch: pytest.MonkeyPatch):
        def broken(self):
            raise RuntimeError("sieve exploded")

        monkeypatch.setattr(RadicalsScript, "run", broken)

        assert runner.run_script("radicals", ["--bound", "3"]) == EXIT_FAILURE

    def test_main_parses_log_level(self, runner: ScriptRunner, capsys: pytest.CaptureFixture[str]):
        assert runner.main(["--log-level", "warning", "units", "--s", "-1", "--bound", "3"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[:3] == ["2", "5", "13"]
