"""Catalog of identities and the engine that verifies them.

Record metadata (description, parameter domains, default grid) is read from
``catalog.json`` next to this module.  The two sides of each record are
computed by the evaluators in :mod:`malmsten._identities`, keyed by id.
"""
from __future__ import annotations

import json
import math
import os
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Any, Callable, Iterable

from ._identities import EVALUATORS, Evaluator
from .errors import (BindingDomainError, InvalidArgumentError, MalmstenError,
                     UnknownIdentityError)
from .quad import EvalResult

LHS_KINDS = ("unit_integral", "halfline_integral", "series", "transcendent_relation", "constant")
RHS_KINDS = ("closed_form", "series", "integral")

TARGET_FLOOR = 1e-13
CSV_HEADER = "id,binding,lhs,rhs,abs_residual,rel_residual,pass"


@dataclass(frozen=True)
class ToleranceConfig:
    rtol: float = 1e-9
    atol: float = 1e-12

    def __post_init__(self) -> None:
        for name, v, floor in (("rtol", self.rtol, 1e-14), ("atol", self.atol, 1e-15)):
            if not isinstance(v, (int, float)) or not math.isfinite(v) or v < floor:
                raise InvalidArgumentError(f"{name} must be a finite number >= {floor:g}, got {v!r}")
        object.__setattr__(self, "rtol", float(self.rtol))
        object.__setattr__(self, "atol", float(self.atol))

    def to_dict(self) -> dict:
        return {"rtol": self.rtol, "atol": self.atol}


@dataclass(frozen=True)
class ParamDomain:
    """Allowed values of one named parameter.

    ``kind`` is "int" or "real".  Bounds are closed unless flagged open;
    ``lt`` names a parameter that must be strictly larger, ``coprime_with``
    one that must be coprime, and ``parity_with`` one whose sum with this
    parameter must have the parity given by ``parity``.
    """

    name: str
    kind: str = "real"
    low: float | None = None
    high: float | None = None
    low_open: bool = False
    high_open: bool = False
    lt: str | None = None
    coprime_with: str | None = None
    parity_with: str | None = None
    parity: str | None = None
    values: tuple | None = None

    @classmethod
    def from_dict(cls, d: dict) -> "ParamDomain":
        d = dict(d)
        if d.get("values") is not None:
            d["values"] = tuple(d["values"])
        return cls(**d)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "kind": self.kind}
        for key in ("low", "high", "low_open", "high_open", "lt", "coprime_with",
                    "parity_with", "parity", "values"):
            v = getattr(self, key)
            if v is not None and v is not False:
                out[key] = list(v) if isinstance(v, tuple) else v
        return out

    def check(self, value: float, binding: dict[str, float]) -> None:
        where = f"parameter {self.name}={value!r}"
        if not math.isfinite(value):
            raise BindingDomainError(f"{where} is not finite")
        if self.kind == "int" and value != int(value):
            raise BindingDomainError(f"{where} must be an integer")
        if self.values is not None and not any(
                abs(value - parse_value(v)) <= 1e-12 * max(1.0, abs(value)) for v in self.values):
            raise BindingDomainError(f"{where} is not one of {list(self.values)}")
        if self.low is not None and (value < self.low or (self.low_open and value == self.low)):
            raise BindingDomainError(f"{where} is below {'(' if self.low_open else '['}{self.low}")
        if self.high is not None and (value > self.high or (self.high_open and value == self.high)):
            raise BindingDomainError(f"{where} is above {self.high}{')' if self.high_open else ']'}")
        if self.lt is not None and not value < binding[self.lt]:
            raise BindingDomainError(f"{where} must be smaller than {self.lt}")
        if self.coprime_with is not None and math.gcd(int(value), int(binding[self.coprime_with])) != 1:
            raise BindingDomainError(f"{where} must be coprime with {self.coprime_with}")
        if self.parity_with is not None:
            total = int(value) + int(binding[self.parity_with])
            if (total % 2 == 1) != (self.parity == "odd"):
                raise BindingDomainError(
                    f"{self.name} + {self.parity_with} must be {self.parity}")


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    paper_eq: str
    description: str
    params: tuple[ParamDomain, ...]
    lhs_kind: str
    rhs_kind: str
    corrected_from_paper: bool
    correction_note: str
    default_grid: tuple[dict, ...]

    def __post_init__(self) -> None:
        if self.lhs_kind not in LHS_KINDS:
            raise InvalidArgumentError(f"{self.id}: unknown lhs_kind {self.lhs_kind!r}")
        if self.rhs_kind not in RHS_KINDS:
            raise InvalidArgumentError(f"{self.id}: unknown rhs_kind {self.rhs_kind!r}")
        if self.corrected_from_paper and not self.correction_note.strip():
            raise InvalidArgumentError(f"{self.id}: a corrected record needs a correction note")

    @classmethod
    def from_dict(cls, d: dict) -> "IdentityRecord":
        return cls(
            id=d["id"], paper_eq=d["paper_eq"], description=d["description"],
            params=tuple(ParamDomain.from_dict(p) for p in d["params"]),
            lhs_kind=d["lhs_kind"], rhs_kind=d["rhs_kind"],
            corrected_from_paper=bool(d["corrected_from_paper"]),
            correction_note=d.get("correction_note", ""),
            default_grid=tuple(dict(b) for b in d["default_grid"]),
        )

    def to_dict(self) -> dict:
        return {
            "id": self.id, "paper_eq": self.paper_eq, "description": self.description,
            "params": [p.to_dict() for p in self.params],
            "lhs_kind": self.lhs_kind, "rhs_kind": self.rhs_kind,
            "corrected_from_paper": self.corrected_from_paper,
            "correction_note": self.correction_note,
            "default_grid": [dict(b) for b in self.default_grid],
        }

    def resolve(self, binding: dict[str, Any]) -> dict[str, float]:
        """Check a binding against the domains and return numeric values."""
        names = [p.name for p in self.params]
        extra = sorted(set(binding) - set(names))
        if extra:
            raise BindingDomainError(f"{self.id} has no parameter(s) {', '.join(extra)}")
        missing = [n for n in names if n not in binding]
        if missing:
            raise BindingDomainError(f"{self.id} needs parameter(s) {', '.join(missing)}")
        try:
            values = {k: parse_value(v) for k, v in binding.items()}
        except ValueError as exc:
            raise BindingDomainError(f"{self.id}: {exc}") from None
        for p in self.params:
            p.check(values[p.name], values)
            if p.kind == "int":
                values[p.name] = int(values[p.name])
        return values


_PI_EXPR = re.compile(r"^\s*(\d+(?:\.\d*)?)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$")


def parse_value(v: Any) -> float:
    """A number, or a string such as "3", "0.25", "pi/4", "2pi/3"."""
    if isinstance(v, bool):
        raise ValueError(f"not a number: {v!r}")
    if isinstance(v, (int, float)):
        return v
    text = str(v).strip()
    m = _PI_EXPR.match(text)
    if m:
        num = float(m.group(1)) if m.group(1) else 1.0
        den = float(m.group(2)) if m.group(2) else 1.0
        return num * math.pi / den
    try:
        f = float(text)
    except ValueError:
        raise ValueError(f"cannot read {v!r} as a number") from None
    return int(f) if re.fullmatch(r"[+-]?\d+", text) else f


@dataclass(frozen=True)
class VerificationReport:
    identity_id: str
    binding: dict
    lhs: EvalResult | None
    rhs: EvalResult | None
    abs_residual: float
    rel_residual: float
    pass_: bool
    tolerances: ToleranceConfig
    error: str | None = field(default=None)

    @property
    def errored(self) -> bool:
        return self.error is not None

    def to_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "binding": dict(self.binding),
            "lhs": None if self.lhs is None else self.lhs.to_dict(),
            "rhs": None if self.rhs is None else self.rhs.to_dict(),
            "abs_residual": _json_float(self.abs_residual),
            "rel_residual": _json_float(self.rel_residual),
            "pass": self.pass_,
            "tolerances": self.tolerances.to_dict(),
            "error": self.error,
        }


def _json_float(v: float) -> float | None:
    return v if math.isfinite(v) else None


# ---------------------------------------------------------------------------
# catalog

@lru_cache(maxsize=1)
def _catalog() -> tuple[IdentityRecord, ...]:
    text = resources.files(__package__).joinpath("catalog.json").read_text(encoding="utf-8")
    return load_catalog(json.loads(text))


def load_catalog(data: Iterable[dict]) -> tuple[IdentityRecord, ...]:
    records = [IdentityRecord.from_dict(d) for d in data]
    ids = [r.id for r in records]
    if len(set(ids)) != len(ids):
        dup = sorted({i for i in ids if ids.count(i) > 1})
        raise InvalidArgumentError(f"duplicate catalog ids: {dup}")
    for r in records:
        if r.id not in EVALUATORS:
            raise InvalidArgumentError(f"catalog id {r.id!r} has no evaluator")
        for b in r.default_grid:
            r.resolve(b)
    return tuple(sorted(records, key=lambda r: r.id))


def list_identities(filter: str | None = None) -> list[IdentityRecord]:
    recs = _catalog()
    if filter:
        recs = tuple(r for r in recs if filter in r.id or filter in r.paper_eq)
    return list(recs)


def get_identity(identity_id: str) -> IdentityRecord:
    for r in _catalog():
        if r.id == identity_id:
            return r
    raise UnknownIdentityError(f"unknown identity id {identity_id!r}")


def evaluator_routes(identity_id: str) -> tuple[str, str]:
    """Labels of the numerical routes taken by the two sides."""
    ev = EVALUATORS[get_identity(identity_id).id]
    return ev.lhs_route, ev.rhs_route


# ---------------------------------------------------------------------------
# verification

def _compute(ev: Evaluator, values: dict, tol: ToleranceConfig) -> tuple[EvalResult, EvalResult]:
    guess = max(TARGET_FLOOR, tol.rtol / 10)
    rhs = ev.rhs(values, guess)
    target = max(TARGET_FLOOR, tol.rtol * abs(rhs.value) / 10)
    if target < guess and rhs.evaluations:
        rhs = ev.rhs(values, target)
    lhs = ev.lhs(values, target)
    return lhs, rhs


def _report(record: IdentityRecord, binding: dict, lhs: EvalResult, rhs: EvalResult,
            tol: ToleranceConfig) -> VerificationReport:
    residual = abs(lhs.value - rhs.value)
    if not math.isfinite(residual):
        residual = math.inf
    if residual == 0.0:
        rel = 0.0
    elif rhs.value == 0.0:
        rel = math.inf
    else:
        rel = residual / abs(rhs.value)
    ok = residual <= max(tol.atol, tol.rtol * abs(rhs.value)) and lhs.converged and rhs.converged
    return VerificationReport(record.id, dict(binding), lhs, rhs, residual, rel, bool(ok), tol)


def evaluate_identity(identity_id: str, binding: dict | None = None,
                      tol: ToleranceConfig | None = None, *,
                      evaluator: Evaluator | None = None) -> VerificationReport:
    """Compute both sides of one identity at one binding and compare them.

    ``evaluator`` replaces the compiled-in pair; it exists for test doubles.
    """
    tol = tol or ToleranceConfig()
    record = get_identity(identity_id)
    binding = dict(binding or {})
    values = record.resolve(binding)
    ev = evaluator or EVALUATORS[record.id]
    lhs, rhs = _compute(ev, values, tol)
    return _report(record, binding, lhs, rhs, tol)


def _failed(record_id: str, binding: dict, tol: ToleranceConfig, exc: Exception) -> VerificationReport:
    return VerificationReport(record_id, dict(binding), None, None, math.inf, math.inf, False, tol,
                              f"{type(exc).__name__}: {exc}")


def _safe_evaluate(record_id: str, binding: dict, tol: ToleranceConfig,
                   evaluators: dict[str, Evaluator] | None) -> VerificationReport:
    try:
        ev = (evaluators or {}).get(record_id)
        return evaluate_identity(record_id, binding, tol, evaluator=ev)
    except (MalmstenError, ArithmeticError, ValueError) as exc:
        return _failed(record_id, binding, tol, exc)


def thread_count() -> int:
    raw = os.environ.get("MALMSTEN_THREADS", "").strip()
    if raw:
        try:
            n = int(raw)
        except ValueError:
            raise InvalidArgumentError(f"MALMSTEN_THREADS must be a positive integer, got {raw!r}") from None
        if n < 1:
            raise InvalidArgumentError(f"MALMSTEN_THREADS must be a positive integer, got {raw!r}")
        return n
    return min(4, os.cpu_count() or 1)


def verification_jobs(records: Iterable[IdentityRecord]) -> list[tuple[str, dict]]:
    jobs = []
    for r in records:
        for b in r.default_grid or ({},):
            jobs.append((r.id, dict(b)))
    return jobs


def verify_all(tol: ToleranceConfig | None = None, *, records: Iterable[IdentityRecord] | None = None,
               evaluators: dict[str, Evaluator] | None = None,
               stop_on_failure: bool = False,
               on_report: Callable[[VerificationReport], None] | None = None) -> list[VerificationReport]:
    """One report per (record, default binding), in catalog order.

    Entries run on a thread pool capped by MALMSTEN_THREADS.  With
    ``stop_on_failure`` the list ends at the first failing entry in catalog
    order.
    """
    tol = tol or ToleranceConfig()
    jobs = verification_jobs(_catalog() if records is None else records)
    workers = thread_count()
    reports: list[VerificationReport] = []

    def run(job):
        return _safe_evaluate(job[0], job[1], tol, evaluators)

    if workers == 1:
        results: Iterable[VerificationReport] = map(run, jobs)
        pool = None
    else:
        pool = ThreadPoolExecutor(max_workers=workers)
        results = pool.map(run, jobs)
    try:
        for rep in results:
            reports.append(rep)
            if on_report is not None:
                on_report(rep)
            if stop_on_failure and not rep.pass_:
                break
    finally:
        if pool is not None:
            pool.shutdown(wait=True, cancel_futures=True)
    return reports


# ---------------------------------------------------------------------------
# output

def reports_to_json(reports: Iterable[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, allow_nan=False)


def _binding_text(binding: dict) -> str:
    return ";".join(f"{k}={binding[k]}" for k in sorted(binding))


def _num(v: float | None) -> str:
    return "" if v is None else repr(float(v))


def reports_to_csv(reports: Iterable[VerificationReport]) -> str:
    import csv
    import io

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER.split(","))
    for r in reports:
        w.writerow([r.identity_id, _binding_text(r.binding),
                    _num(r.lhs.value if r.lhs else None), _num(r.rhs.value if r.rhs else None),
                    _num(_json_float(r.abs_residual)), _num(_json_float(r.rel_residual)),
                    "true" if r.pass_ else "false"])
    return buf.getvalue()
