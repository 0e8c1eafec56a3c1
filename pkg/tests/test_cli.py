import csv
import dataclasses
import io
import json
import os
import shutil
import subprocess
import sys

import pytest

from malmsten._identities import EVALUATORS
from malmsten.cli import (EXIT_FAIL, EXIT_PASS, EXIT_USAGE, RunConfig, UsageError, main,
                          parse_args, run)
from malmsten.quad import exact
from malmsten.registry import CSV_HEADER, list_identities


def _run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_single_identity_passes(capsys):
    code, out, _ = _run(["--id", "eq08"], capsys)
    assert code == EXIT_PASS
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].split()[0] == "eq08" and "PASS" in lines[0]
    assert lines[-1] == "passed 1 / failed 0 / errored 0"


def test_unknown_identity_is_usage_error(capsys):
    code, out, err = _run(["--id", "nonexistent"], capsys)
    assert code == EXIT_USAGE and out == "" and "nonexistent" in err


@pytest.mark.parametrize("argv", [
    [],
    ["--id", "eq08", "--all"],
    ["--all", "--rtol", "1e-15"],
    ["--all", "--atol", "0"],
    ["--all", "--format", "xml"],
    ["--all", "--param", "x=1"],
    ["--id", "eq07", "--param", "x"],
    ["--id", "eq07", "--param", "m=2", "--param", "n=4"],
    ["--id", "eq07", "--param", "q=1"],
    ["--id", "eq08", "--filter", "eq0"],
    ["--filter", "zzz"],
    ["--bogus"],
])
def test_usage_errors(argv, capsys):
    code, _, err = _run(argv, capsys)
    assert code == EXIT_USAGE and err.startswith("verify: error:")


def test_invalid_thread_setting_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("MALMSTEN_THREADS", "zero")
    code, _, _ = _run(["--id", "eq08"], capsys)
    assert code == EXIT_USAGE


def test_text_lines_are_aligned(capsys):
    code, out, _ = _run(["--filter", "eq12"], capsys)
    assert code == EXIT_PASS
    rows = out.splitlines()[:-1]
    assert len(rows) == 2 and len({row.index("PASS") for row in rows}) == 1
    residual = rows[0].split()[-1]
    mantissa, exponent = residual.split("e")
    assert len(mantissa.replace(".", "")) == 3 and exponent[0] in "+-"


def test_param_override(capsys):
    code, out, _ = _run(["--id", "eq07", "--param", "m=2", "--param", "n=5", "--param", "x=0.75"], capsys)
    assert code == EXIT_PASS
    assert "m=2,n=5,x=0.75" in out


def test_partial_override_keeps_other_defaults(capsys):
    code, out, _ = _run(["--id", "eq63", "--param", "a=2pi/3", "--format", "json"], capsys)
    assert code == EXIT_PASS
    assert json.loads(out)[0]["binding"] == {"a": "2pi/3"}


def test_full_catalog_json(capsys):
    code, out, _ = _run(["--all", "--format", "json", "--rtol", "1e-9"], capsys)
    assert code == EXIT_PASS
    data = json.loads(out)
    assert len(data) == sum(len(r.default_grid) for r in list_identities())
    assert all(item["pass"] for item in data)


def test_csv_format(capsys):
    code, out, _ = _run(["--filter", "eq55_ex", "--format", "csv"], capsys)
    assert code == EXIT_PASS
    rows = list(csv.reader(io.StringIO(out)))
    assert ",".join(rows[0]) == CSV_HEADER
    assert all(row[-1] == "true" for row in rows[1:])


@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_output_is_deterministic(fmt, capsys, monkeypatch):
    argv = ["--filter", "eq1", "--format", fmt]
    first = _run(argv, capsys)
    monkeypatch.setenv("MALMSTEN_THREADS", "1")
    second = _run(argv, capsys)
    assert first == second


def test_list(capsys):
    code, out, _ = _run(["--list", "--filter", "eq12"], capsys)
    assert code == EXIT_PASS
    assert [line.split()[0] for line in out.splitlines()] == ["eq12a", "eq12b"]
    code, out, _ = _run(["--list", "--format", "json"], capsys)
    assert len(json.loads(out)) == len(list_identities())


def _broken(identity_id):
    ev = EVALUATORS[identity_id]
    return dataclasses.replace(ev, rhs=lambda b, t: exact(ev.rhs(b, t).value + 1e-3))


def test_injected_failure_sets_exit_status():
    out = io.StringIO()
    code = run(parse_args(["--filter", "eq0"]), evaluators={"eq08": _broken("eq08")}, stdout=out)
    assert code == EXIT_FAIL
    text = out.getvalue()
    assert "FAIL" in text and "failed 1 / errored 0" in text


def test_fail_fast_stops_at_first_failure():
    out = io.StringIO()
    code = run(parse_args(["--filter", "eq0", "--fail-fast"]), evaluators={"eq08": _broken("eq08")},
               stdout=out)
    assert code == EXIT_FAIL
    rows = out.getvalue().splitlines()[:-1]
    assert rows[-1].startswith("eq08") and "FAIL" in rows[-1]
    assert all("PASS" in row for row in rows[:-1])


def test_errored_entry_is_counted():
    def boom(b, t):
        raise ArithmeticError("overflow")

    out = io.StringIO()
    ev = dataclasses.replace(EVALUATORS["eq08"], lhs=boom)
    code = run(parse_args(["--id", "eq08"]), evaluators={"eq08": ev}, stdout=out)
    assert code == EXIT_FAIL
    assert out.getvalue().splitlines()[-1] == "passed 0 / failed 0 / errored 1"


def test_run_config_invariants():
    with pytest.raises(UsageError):
        RunConfig(mode="single")
    with pytest.raises(UsageError):
        RunConfig(mode="everything")
    with pytest.raises(UsageError):
        RunConfig(mode="all", output_format="xml")


@pytest.mark.parametrize("script", ["verify", "malmsten-verify"])
def test_console_scripts(script):
    exe = os.path.join(os.path.dirname(sys.executable), script)
    if not os.path.exists(exe):
        exe = shutil.which(script)
    if exe is None:
        pytest.skip(f"{script} is not installed")
    proc = subprocess.run([exe, "--id", "eq08"], capture_output=True, text=True)
    assert proc.returncode == 0 and "PASS" in proc.stdout


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "malmsten", "--id", "nonexistent"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
