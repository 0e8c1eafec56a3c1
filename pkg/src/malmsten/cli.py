"""Command-line runner: verify catalog identities and emit reports.

Exit status is 0 when every evaluated entry passes, 1 when any entry fails
or errors, and 2 on a usage or configuration error.
"""
from __future__ import annotations

import argparse
import dataclasses
import re
import sys
from dataclasses import dataclass, field
from typing import Sequence, TextIO

from .errors import MalmstenError, UnknownIdentityError
from .registry import (IdentityRecord, ToleranceConfig, VerificationReport, get_identity,
                       list_identities, reports_to_csv, reports_to_json, thread_count,
                       verify_all)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

MODES = ("single", "all", "list")
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    """Bad flags or configuration; reported with exit status 2."""


@dataclass(frozen=True)
class RunConfig:
    mode: str
    identity_id: str | None = None
    filter: str | None = None
    param_overrides: dict = field(default_factory=dict)
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    output_format: str = "text"
    fail_fast: bool = False

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise UsageError(f"unknown mode {self.mode!r}")
        if self.mode == "single" and not self.identity_id:
            raise UsageError("single mode needs an identity id")
        if self.output_format not in FORMATS:
            raise UsageError(f"unknown format {self.output_format!r}")
        if self.param_overrides and self.mode != "single":
            raise UsageError("--param only applies together with --id")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="verify", description="Verify catalogued identities by computing both sides independently.")
    sel = p.add_mutually_exclusive_group()
    sel.add_argument("--id", dest="identity_id", help="verify one identity over its default grid")
    sel.add_argument("--all", action="store_true", help="verify the whole catalog")
    sel.add_argument("--list", action="store_true", help="list catalog records")
    p.add_argument("--filter", help="restrict --all or --list to ids (or labels) containing this text")
    p.add_argument("--rtol", type=float, default=1e-9)
    p.add_argument("--atol", type=float, default=1e-12)
    p.add_argument("--format", dest="output_format", choices=FORMATS, default="text")
    p.add_argument("--fail-fast", action="store_true", help="stop at the first failing entry")
    p.add_argument("--param", action="append", default=[], metavar="K=V",
                   help="override one parameter of the --id binding (repeatable)")
    return p


def _param_value(text: str):
    if re.fullmatch(r"[+-]?\d+", text):
        return int(text)
    try:
        return float(text)
    except ValueError:
        return text


def parse_overrides(items: Sequence[str]) -> dict:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise UsageError(f"--param expects k=v, got {item!r}")
        if key in out:
            raise UsageError(f"--param {key} given twice")
        out[key] = _param_value(value)
    return out


def parse_args(argv: Sequence[str] | None = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    if ns.identity_id:
        mode = "single"
    elif ns.list:
        mode = "list"
    elif ns.all or ns.filter:
        mode = "all"
    else:
        raise UsageError("one of --id, --all, --list or --filter is required")
    if mode == "single" and ns.filter:
        raise UsageError("--filter does not combine with --id")
    try:
        tol = ToleranceConfig(rtol=ns.rtol, atol=ns.atol)
    except MalmstenError as exc:
        raise UsageError(str(exc)) from None
    return RunConfig(mode=mode, identity_id=ns.identity_id, filter=ns.filter,
                     param_overrides=parse_overrides(ns.param), tolerances=tol,
                     output_format=ns.output_format, fail_fast=ns.fail_fast)


def _single_record(config: RunConfig) -> IdentityRecord:
    try:
        record = get_identity(config.identity_id)
    except UnknownIdentityError as exc:
        raise UsageError(exc.args[0]) from None
    if not config.param_overrides:
        return record
    base = dict(record.default_grid[0]) if record.default_grid else {}
    base.update(config.param_overrides)
    try:
        record.resolve(base)
    except MalmstenError as exc:
        raise UsageError(str(exc)) from None
    return dataclasses.replace(record, default_grid=(base,))


def _binding_label(binding: dict) -> str:
    return ",".join(f"{k}={binding[k]}" for k in sorted(binding)) or "-"


def format_text(reports: Sequence[VerificationReport]) -> str:
    rows = []
    for r in reports:
        status = "ERROR" if r.errored else ("PASS" if r.pass_ else "FAIL")
        residual = "nan" if r.errored else f"{r.abs_residual:.2e}"
        rows.append((r.identity_id, _binding_label(r.binding), status, residual, r.error or ""))
    w_id = max((len(x[0]) for x in rows), default=0)
    w_b = max((len(x[1]) for x in rows), default=0)
    lines = [f"{a:<{w_id}}  {b:<{w_b}}  {c:<5}  {d:>9}" + (f"  {e}" if e else "")
             for a, b, c, d, e in rows]
    passed = sum(r.pass_ for r in reports)
    errored = sum(r.errored for r in reports)
    failed = len(reports) - passed - errored
    lines.append(f"passed {passed} / failed {failed} / errored {errored}")
    return "\n".join(lines) + "\n"


def format_listing(records: Sequence[IdentityRecord], output_format: str) -> str:
    if output_format == "json":
        import json
        return json.dumps([r.to_dict() for r in records], indent=2) + "\n"
    if output_format == "csv":
        import csv
        import io
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "paper_eq", "lhs_kind", "rhs_kind", "corrected_from_paper", "grid_size", "description"])
        for r in records:
            w.writerow([r.id, r.paper_eq, r.lhs_kind, r.rhs_kind,
                        "true" if r.corrected_from_paper else "false", len(r.default_grid), r.description])
        return buf.getvalue()
    w_id = max((len(r.id) for r in records), default=0)
    return "".join(f"{r.id:<{w_id}}  {'*' if r.corrected_from_paper else ' '}  {r.description}\n"
                   for r in records)


def format_reports(reports: Sequence[VerificationReport], output_format: str) -> str:
    if output_format == "json":
        return reports_to_json(reports) + "\n"
    if output_format == "csv":
        return reports_to_csv(reports)
    return format_text(reports)


def run(config: RunConfig, *, evaluators: dict | None = None, stdout: TextIO | None = None) -> int:
    """Execute a parsed configuration; ``evaluators`` substitutes test doubles."""
    out = stdout or sys.stdout
    if config.mode == "list":
        out.write(format_listing(list_identities(config.filter), config.output_format))
        return EXIT_PASS
    try:
        thread_count()
    except MalmstenError as exc:
        raise UsageError(str(exc)) from None
    if config.mode == "single":
        records = [_single_record(config)]
    else:
        records = list_identities(config.filter)
        if not records:
            raise UsageError(f"no identity matches filter {config.filter!r}")
    reports = verify_all(config.tolerances, records=records, evaluators=evaluators,
                         stop_on_failure=config.fail_fast)
    out.write(format_reports(reports, config.output_format))
    return EXIT_PASS if reports and all(r.pass_ for r in reports) else EXIT_FAIL


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return run(parse_args(argv))
    except UsageError as exc:
        print(f"verify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
