"""Double-exponential quadrature on (0, 1) and (0, inf) with error estimates.

Unit-interval integrals use the tanh-sinh map, half-line integrals the
exp-sinh map

    x = exp(pi/2 * sinh t),   dx = pi/2 * cosh t * x dt.

Both are trapezoidal sums in t.  The step is halved until two successive
sums agree to the target; each halving reuses the previous nodes.  An
integrand with a log-log singularity at the end y -> 1 is moved to the
half-line first with y = exp(-t), where the singularity becomes log t.

Oscillatory half-line integrals are split into half-period panels, summed
directly over a head and accelerated as an alternating series afterwards.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .errors import InvalidArgumentError, NonFiniteIntegrandError

Integrand = Callable[[float], float]

SMOOTH = "smooth"
LOG_SINGULAR = "log_singular"
LOGLOG_SINGULAR = "loglog_singular"
EXP_DECAY = "exp_decay"

_ENDPOINT_KINDS = (SMOOTH, LOG_SINGULAR, LOGLOG_SINGULAR)

DEFAULT_TARGET = 1e-12
MAX_EVALUATIONS = 1 << 20
_EPS = 2.220446049250313e-16
_TINY = sys.float_info.min
_HALF_PI = 0.5 * math.pi
_MIN_LEVEL = 3


@dataclass(frozen=True)
class EvalResult:
    """A numerical value with an absolute error estimate."""

    value: float
    abs_error_estimate: float
    evaluations: int
    converged: bool

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "abs_error_estimate": self.abs_error_estimate,
            "evaluations": self.evaluations,
            "converged": self.converged,
        }


def exact(value: float, terms: int = 1) -> EvalResult:
    """Wrap a closed-form value; the estimate covers its rounding error."""
    value = float(value)
    err = 8.0 * _EPS * max(1, terms) * max(1.0, abs(value))
    return EvalResult(value, err, 0, math.isfinite(value))


def combine(terms: Iterable[tuple[float, EvalResult]], constant: float = 0.0) -> EvalResult:
    """Linear combination sum(c * r) + constant of evaluated quantities."""
    value, err, evals, ok = constant, 0.0, 0, True
    for c, r in terms:
        value += c * r.value
        err += abs(c) * r.abs_error_estimate
        evals += r.evaluations
        ok = ok and r.converged
    err += 4.0 * _EPS * abs(value)
    return EvalResult(value, err, evals, ok)


@dataclass(frozen=True)
class EndpointHint:
    """Behaviour of the integrand at the two ends of the interval.

    ``at_zero`` is one of smooth, log_singular, loglog_singular.
    ``at_one_or_infinity`` may also be exp_decay, in which case
    ``decay_rate`` gives the rate r of the bound |f(x)| <~ exp(-r x).
    """

    at_zero: str = SMOOTH
    at_one_or_infinity: str = SMOOTH
    decay_rate: float | None = None

    def __post_init__(self) -> None:
        if self.at_zero not in _ENDPOINT_KINDS:
            raise InvalidArgumentError(f"unknown endpoint behaviour {self.at_zero!r}")
        if self.at_one_or_infinity not in _ENDPOINT_KINDS + (EXP_DECAY,):
            raise InvalidArgumentError(
                f"unknown endpoint behaviour {self.at_one_or_infinity!r}")
        if self.at_one_or_infinity == EXP_DECAY:
            r = self.decay_rate
            if r is None or not math.isfinite(r) or r <= 0:
                raise InvalidArgumentError("exp_decay needs a finite positive decay_rate")
        elif self.decay_rate is not None:
            raise InvalidArgumentError("decay_rate is only meaningful with exp_decay")

    @classmethod
    def exp_decay(cls, rate: float, at_zero: str = SMOOTH) -> "EndpointHint":
        return cls(at_zero, EXP_DECAY, float(rate))


def _check_target(target: float) -> float:
    target = float(target)
    if not math.isfinite(target) or target <= 0:
        raise InvalidArgumentError(f"target_abs_error must be positive, got {target!r}")
    return target


def _exp_sinh(t: float) -> tuple[float, float] | None:
    u = _HALF_PI * math.sinh(t)
    if u > 709.0 or u < -744.0:
        return None
    x = math.exp(u)
    if x == 0.0:
        return None
    return x, _HALF_PI * math.cosh(t) * x


def _tanh_sinh(t: float) -> tuple[float, float] | None:
    u = math.pi * math.sinh(t)
    if abs(u) > 709.0:
        return None
    e = math.exp(-u)
    y = 1.0 / (1.0 + e)
    ym = e / (1.0 + e)
    if y == 0.0 or y == 1.0 or ym == 0.0:
        return None
    return y, math.pi * math.cosh(t) * y * ym


def _de_integrate(f: Integrand, transform, target: float, t_cap: float) -> EvalResult:
    """Trapezoidal sum in t with repeated step halving."""
    evals = 0

    def term(t: float) -> float:
        nonlocal evals
        node = transform(t)
        if node is None:
            return 0.0
        x, w = node
        try:
            v = f(x)
        except ZeroDivisionError as exc:
            raise NonFiniteIntegrandError(f"integrand divides by zero at x={x!r}") from exc
        evals += 1
        if not math.isfinite(v):
            raise NonFiniteIntegrandError(f"integrand is {v!r} at x={x!r}")
        return w * v

    # Level 0: unit step, walk outward until two consecutive negligible terms.
    total = term(0.0)
    abs_total = abs(total)
    bounds = []
    edge = 0.0
    for direction in (1, -1):
        small = 0
        k = 0
        last = 0.0
        while True:
            k += 1
            t = direction * k
            if k > t_cap:
                break
            v = term(float(t))
            total += v
            abs_total += abs(v)
            if abs(v) <= 1e-18 * abs_total or v == 0.0:
                small += 1
                if small == 2:
                    break
            else:
                small = 0
                last = abs(v)
        bounds.append(k)
        edge += last
    hi, lo = bounds[0], -bounds[1]

    h = 1.0
    prev = total * h
    est = math.inf
    level = 0
    converged = False
    while True:
        level += 1
        h *= 0.5
        n_new = int(round((hi - lo) / h)) // 2
        if evals + n_new > MAX_EVALUATIONS:
            break
        for i in range(n_new):
            v = term(lo + h * (2 * i + 1))
            total += v
            abs_total += abs(v)
        cur = total * h
        diff = abs(cur - prev)
        roundoff = 4.0 * _EPS * abs_total * h + _EPS * abs(cur)
        est = max(diff, roundoff) + h * 1e-18 * abs_total
        prev = cur
        if level >= _MIN_LEVEL:
            if est <= target:
                converged = True
                break
            if diff <= 2.0 * roundoff:
                # Stagnated at the rounding floor above the target.
                break
    return EvalResult(prev, est, evals, converged)


def integrate_unit(f: Integrand, hint: EndpointHint | None = None,
                   target_abs_error: float = DEFAULT_TARGET) -> EvalResult:
    """Integrate f over (0, 1).

    f is never evaluated at 0 or 1.  A log-log singularity is handled by the
    substitution y = exp(-t) followed by exp-sinh on (0, inf).
    """
    hint = hint or EndpointHint()
    target = _check_target(target_abs_error)
    if hint.at_one_or_infinity == EXP_DECAY:
        raise InvalidArgumentError("exp_decay does not apply to the unit interval")
    if LOGLOG_SINGULAR in (hint.at_zero, hint.at_one_or_infinity):
        def g(t: float) -> float:
            y = math.exp(-t)
            # Subnormal y sits inside the endpoint region; 1/y would overflow.
            if y == 1.0 or y < _TINY:
                return 0.0
            return f(y) * y
        return _de_integrate(g, _exp_sinh, target, t_cap=7)
    return _de_integrate(f, _tanh_sinh, target, t_cap=7)


def _gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


_GL_HI = _gauss_legendre(24)
_GL_LO = _gauss_legendre(16)


def gauss_panel(f: Integrand, a: float, b: float) -> tuple[float, float]:
    """Gauss-Legendre on [a, b]; returns (value, |24-point - 16-point|)."""
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    vals = []
    for nodes, weights in (_GL_HI, _GL_LO):
        acc = 0.0
        for xi, wi in zip(nodes, weights):
            v = f(mid + half * float(xi))
            if not math.isfinite(v):
                raise NonFiniteIntegrandError(f"integrand is {v!r} at x={mid + half * xi!r}")
            acc += float(wi) * v
        vals.append(acc * half)
    return vals[0], abs(vals[0] - vals[1])


def _oscillatory(f: Integrand, omega: float, target: float) -> EvalResult:
    from .sumacc import alternating_sum

    if not math.isfinite(omega) or omega <= 0:
        raise InvalidArgumentError("oscillation_frequency must be positive")
    period = math.pi / omega
    z_direct = max(40.0, 8.0 * period)
    evals = 0
    value, err = gauss_panel(f, 0.0, 0.5 * period)
    evals += 40
    k = 1
    while (k - 0.5) * period < z_direct:
        v, e = gauss_panel(f, (k - 0.5) * period, (k + 0.5) * period)
        value += v
        err += e
        evals += 40
        k += 1
    first = k

    def panel(i: int) -> float:
        j = first + i - 1
        return gauss_panel(f, (j - 0.5) * period, (j + 0.5) * period)[0]

    tail = alternating_sum(panel, max(target / 4, 1e-16))
    total = value + tail.value
    err += tail.abs_error_estimate + 4 * _EPS * abs(total)
    evals += 40 * tail.evaluations
    return EvalResult(total, err, evals, tail.converged and err <= target)


def integrate_halfline(f: Integrand, hint: EndpointHint | None = None,
                       target_abs_error: float = DEFAULT_TARGET, *,
                       oscillation_frequency: float | None = None) -> EvalResult:
    """Integrate f over (0, inf).

    With ``oscillation_frequency`` set to w the integrand is treated as
    oscillating like cos(w x) with a slowly decaying envelope.
    """
    hint = hint or EndpointHint()
    target = _check_target(target_abs_error)
    if oscillation_frequency is not None:
        return _oscillatory(f, float(oscillation_frequency), target)
    g = f
    if hint.at_one_or_infinity == EXP_DECAY:
        # Naive integrands such as 1/(exp(x) + exp(-x)) overflow long after
        # the declared decay has made them negligible.
        cutoff = 60.0 / hint.decay_rate

        def g(x: float) -> float:
            try:
                return f(x)
            except OverflowError:
                if x > cutoff:
                    return 0.0
                raise
    return _de_integrate(g, _exp_sinh, target, t_cap=7)
