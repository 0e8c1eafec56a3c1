"""Acceptance criteria 1 to 8, one printed pass/fail line each.

Run directly for a summary, or under pytest where each criterion is a test.

    python tests/test_acceptance.py
"""
from __future__ import annotations

import io
import math
import os
import subprocess
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from golden import GOLDEN  # noqa: E402
from malmsten.cli import main as cli_main  # noqa: E402
from malmsten.malmsten import RationalAngle, l_closed, l_integral  # noqa: E402
from malmsten.quad import LOGLOG_SINGULAR, EndpointHint, integrate_halfline, integrate_unit  # noqa: E402
from malmsten.registry import evaluate_identity, list_identities  # noqa: E402
from malmsten.sfcore import EULER_GAMMA, log_gamma  # noqa: E402
from malmsten.sumacc import FAMILIES, feq_sides, sin_log_series  # noqa: E402

PI = math.pi
HERE = os.path.dirname(os.path.abspath(__file__))


def vardi_integral():
    closed = PI / 2 * (0.5 * math.log(2 * PI) + log_gamma(0.75) - log_gamma(0.25))
    t0 = time.perf_counter()
    r = integrate_unit(lambda y: math.log(math.log(1 / y)) / (1 + y * y),
                       EndpointHint(at_one_or_infinity=LOGLOG_SINGULAR))
    elapsed = time.perf_counter() - t0
    residual = abs(r.value - closed)
    oracle_gap = abs(closed - GOLDEN["vardi"])
    ok = residual <= 1e-10 and elapsed <= 0.1 and oracle_gap <= 1e-14
    return ok, f"residual {residual:.2e}, {elapsed * 1e3:.1f} ms, closed form vs oracle {oracle_gap:.1e}"


def sech_log_integral():
    r = integrate_halfline(lambda u: math.log(1 + u * u) / (math.exp(PI * u / 2) + math.exp(-PI * u / 2)),
                           EndpointHint.exp_decay(PI / 2))
    residual = abs(r.value - math.log(4 / PI))
    return residual <= 1e-10, f"residual {residual:.2e}"


def transcendent_closed_forms():
    t0 = time.perf_counter()
    worst = 0.0
    count = 0
    for n in range(2, 7):
        for m in range(1, n):
            if math.gcd(m, n) != 1:
                continue
            a = RationalAngle(m, n).value
            for x in (0.0, 0.25, 0.5, 1.0, 1.5, 3.0):
                worst = max(worst, abs(l_closed((m, n), x) - l_integral(a, x).value))
                count += 1
    elapsed = time.perf_counter() - t0
    return worst <= 1e-8 and elapsed <= 10, f"max residual {worst:.2e} over {count} points, {elapsed:.2f} s"


def functional_equations():
    t0 = time.perf_counter()
    worst = 0.0
    for family in FAMILIES:
        for k in range(1, 10):
            lhs, rhs = feq_sides(family, k / 10)
            if not (lhs.converged and rhs.converged):
                return False, f"{family} at s={k / 10} did not converge"
            worst = max(worst, abs(lhs.value - rhs.value))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-9 and elapsed <= 20 and len(FAMILIES) == 12
    return ok, f"max residual {worst:.2e} over {len(FAMILIES)} families x 9 points, {elapsed:.2f} s"


def sine_log_series():
    worst = 0.0
    for a in (PI / 4, PI / 3, PI / 2, 2 * PI / 3):
        closed = (PI / 2 * (log_gamma(0.5 - a / (2 * PI)) - log_gamma(0.5 + a / (2 * PI)))
                  - a / 2 * (EULER_GAMMA + math.log(2 * PI)))
        worst = max(worst, abs(sin_log_series(a).value - closed))
    return worst <= 1e-9, f"max residual {worst:.2e} at 4 angles"


WORKED_EXAMPLE_PREFIXES = ("eq55_ex", "eq64_ex", "eq65_ex", "eq66_ex", "eq101_ex")


def worked_examples():
    records = [r for p in WORKED_EXAMPLE_PREFIXES for r in list_identities(p)]
    worst = 0.0
    failed = []
    for rec in records:
        for b in rec.default_grid:
            rep = evaluate_identity(rec.id, b)
            worst = max(worst, rep.abs_residual)
            if not rep.pass_ or rep.abs_residual > 1e-9:
                failed.append(rec.id)
    ok = not failed and len(records) >= 9
    return ok, f"{len(records)} records, max residual {worst:.2e}" + (f", failing {failed}" if failed else "")


def full_catalog():
    outputs = []
    t0 = time.perf_counter()
    for _ in range(2):
        buf = io.StringIO()
        saved, sys.stdout = sys.stdout, buf
        try:
            code = cli_main(["--all", "--rtol", "1e-9", "--atol", "1e-12"])
        finally:
            sys.stdout = saved
        outputs.append((code, buf.getvalue()))
    elapsed = (time.perf_counter() - t0) / 2
    code, text = outputs[0]
    summary = text.splitlines()[-1]
    corrected = [r for r in list_identities() if r.corrected_from_paper]
    noted = all(r.correction_note.strip() for r in corrected)
    ok = code == 0 and outputs[0] == outputs[1] and elapsed <= 60 and noted
    return ok, (f"exit {code}, {summary}, {elapsed:.1f} s per run, identical output {outputs[0] == outputs[1]}, "
                f"{len(corrected)} corrected records with notes {noted}")


PROPERTY_SELECTION = [
    "test_sfcore.py::test_gamma_reflection", "test_sfcore.py::test_gamma_recurrence",
    "test_sfcore.py::test_gauss_multiplication", "test_sfcore.py::test_digamma_matches_log_gamma_difference",
    "test_quad.py::test_error_estimate_is_honest", "test_quad.py::test_linearity",
    "test_quad.py::test_exponential_substitution_consistency",
    "test_sumacc.py::test_series_agree_with_averaged_brute_force",
    "test_sumacc.py::test_series_agree_with_long_partial_sums",
    "test_sumacc.py::test_twisted_series_matches_averaged_brute_force",
    "test_registry.py::test_independence_audit",
]


def property_suites():
    args = [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider"]
    args += [os.path.join(HERE, item) for item in PROPERTY_SELECTION]
    proc = subprocess.run(args, capture_output=True, text=True, cwd=os.path.dirname(HERE))
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr.strip()[-200:]
    return proc.returncode == 0, tail


CRITERIA = [
    (1, "Vardi log-log integral", vardi_integral),
    (2, "sech-weighted log integral equals log(4/pi)", sech_log_integral),
    (3, "transcendent closed forms vs quadrature", transcendent_closed_forms),
    (4, "functional-equation grid", functional_equations),
    (5, "alternating sine-log series", sine_log_series),
    (6, "worked log-series examples", worked_examples),
    (7, "full catalog via the CLI", full_catalog),
    (8, "property suites", property_suites),
]


def _line(number, title, ok, detail):
    return f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(number, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for number, title, check in CRITERIA:
        ok, detail = check()
        results.append(ok)
        print(_line(number, title, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
