"""Summation of slowly convergent alternating and character-type series.

Three engines cover everything the package needs.

* ``alternating_sum`` applies the Cohen-Rodriguez Villegas-Zagier weights
  to a sign-alternating sequence with decreasing magnitude.
* ``shifted_series`` sums  sum_{j>=0} sum_r w_r g(A j + b_r)  with
  g(x) = x^-s log^q x and sum_r w_r = 0.  A direct head is followed by an
  Euler-Maclaurin tail; the derivatives of g are exact through the
  recurrence on polynomials in log x.  Periodic Dirichlet series are the
  special case A = period, b_r = r.
* ``twisted_series`` sums  sum_{j>=0} e^{i j theta} g(A j + c)  with a
  direct head and Boole's summation formula for the tail.

Each engine evaluates its tail at three cut-offs and reports the spread as
part of the error estimate.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from . import _kernels
from .errors import (DomainError, InvalidArgumentError, NonFiniteTermError,
                     PreconditionError, SingularPrefactorError)
from .quad import EndpointHint, EvalResult, gauss_panel, integrate_halfline
from .sfcore import gamma

_EPS = 2.220446049250313e-16
_CROSS_CHECK = 1e-9
DEFAULT_TARGET = 1e-12


class SeriesValue(EvalResult):
    """Value of an infinite series; same fields as EvalResult."""


@dataclass(frozen=True)
class ComplexSeriesValue:
    value: complex
    abs_error_estimate: float
    evaluations: int
    converged: bool

    def real_part(self) -> SeriesValue:
        return SeriesValue(self.value.real, self.abs_error_estimate,
                           self.evaluations, self.converged)

    def imag_part(self) -> SeriesValue:
        return SeriesValue(self.value.imag, self.abs_error_estimate,
                           self.evaluations, self.converged)


@dataclass(frozen=True)
class PeriodicCoefficients:
    """Coefficients chi(k) = coeffs[(k - 1) mod period] of a Dirichlet series."""

    period: int
    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.period, int) or self.period <= 0:
            raise InvalidArgumentError("period must be a positive integer")
        coeffs = tuple(float(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != self.period:
            raise InvalidArgumentError(
                f"expected {self.period} coefficients, got {len(coeffs)}")
        if not all(math.isfinite(c) for c in coeffs):
            raise InvalidArgumentError("coefficients must be finite")
        scale = max(abs(c) for c in coeffs)
        if scale == 0.0:
            raise InvalidArgumentError("at least one coefficient must be nonzero")
        if abs(math.fsum(coeffs)) > 1e-12 * scale * self.period:
            raise InvalidArgumentError("coefficients must sum to zero")

    @classmethod
    def from_residues(cls, period: int, values: dict[int, float]) -> "PeriodicCoefficients":
        """Build from {residue: coefficient}; residues run over 1..period."""
        coeffs = [0.0] * period
        for r, c in values.items():
            coeffs[(r - 1) % period] += c
        return cls(period, tuple(coeffs))

    def __call__(self, k: int) -> float:
        return self.coeffs[(k - 1) % self.period]

    def scaled(self, factor: float) -> "PeriodicCoefficients":
        return PeriodicCoefficients(self.period, tuple(factor * c for c in self.coeffs))


# ---------------------------------------------------------------------------
# alternating series

def _cvz(u: Sequence[float]) -> float:
    """sum_k (-1)^k u_k from the first n entries of u."""
    n = len(u)
    d = (3 + math.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b, c, s = -1.0, -d, 0.0
    for k in range(n):
        c = b - c
        s += c * u[k]
        b = b * (k + n) * (k - n) / ((k + 0.5) * (k + 1))
    return s / d


def alternating_sum(term: Callable[[int], float],
                    target_abs_error: float = DEFAULT_TARGET) -> SeriesValue:
    """Sum term(1) + term(2) + ... for eventually alternating, decreasing terms.

    Terms before the alternating regime are added directly.  The tail is
    accelerated with two different numbers of terms; their difference is the
    error estimate.
    """
    target = float(target_abs_error)
    if not math.isfinite(target) or target <= 0:
        raise InvalidArgumentError("target_abs_error must be positive")
    cache: list[float] = []

    def a(i: int) -> float:
        while len(cache) < i:
            v = float(term(len(cache) + 1))
            if not math.isfinite(v):
                raise NonFiniteTermError(f"term {len(cache) + 1} is {v!r}")
            cache.append(v)
        return cache[i - 1]

    n1 = max(8, int(math.ceil(1.31 * math.log10(2.0 / min(target, 1e-3)))) + 2)
    window = n1 + 8
    for i in range(1, window + 1):
        a(i)
    # First index from which signs alternate and magnitudes strictly decrease.
    start = window
    while start > 1:
        x, y = cache[start - 2], cache[start - 1]
        if x * y < 0 and abs(y) < abs(x):
            start -= 1
        else:
            break
    if window - start + 1 < n1:
        raise PreconditionError(
            "terms must alternate in sign with strictly decreasing magnitude")

    head = math.fsum(cache[: start - 1])
    sign = 1.0 if cache[start - 1] > 0 else -1.0

    def tail(n: int) -> float:
        u = [sign * (-1) ** k * a(start + k) for k in range(n)]
        return sign * _cvz(u)

    prev = tail(n1)
    n = n1
    while True:
        n += 8
        cur = tail(n)
        scale = math.fsum(abs(a(start + k)) for k in range(n))
        est = abs(cur - prev) + 4 * _EPS * (scale + abs(head))
        if est <= target or n >= 96:
            break
        prev = cur
    value = head + cur
    return SeriesValue(value, est, len(cache), est <= target)


# ---------------------------------------------------------------------------
# derivatives of g(x) = x^-s log^q x

def _derivative_polys(s: float, q: int, order: int) -> list[list[float]]:
    """P_m with g^(m)(x) = x^(-s-m) P_m(log x), m = 0..order."""
    p = [0.0] * (q + 1)
    p[q] = 1.0
    polys = [p]
    for m in range(order):
        nxt = [-(s + m) * c for c in p]
        for i in range(1, len(p)):
            nxt[i - 1] += i * p[i]
        polys.append(nxt)
        p = nxt
    return polys


def _poly_at(p: list[float], ell: float) -> float:
    acc = 0.0
    for c in reversed(p):
        acc = acc * ell + c
    return acc


def _bernoulli_even(count: int) -> list[float]:
    b = [Fraction(1)]
    for m in range(1, 2 * count + 1):
        b.append(-sum(math.comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return [float(b[2 * k] / math.factorial(2 * k)) for k in range(1, count + 1)]


_B2K_OVER_FACT = _bernoulli_even(15)


def _g(x: float, s: float, q: int) -> float:
    v = x ** (-s)
    if q:
        v *= math.log(x) ** q
    return v


# ---------------------------------------------------------------------------
# shifted (Hurwitz-type) sums

def _check_s(s: float) -> float:
    s = float(s)
    if not math.isfinite(s) or s <= 0:
        raise DomainError(f"series requires s > 0, got {s!r}")
    return s


def _em_tail(weights, shifts, step: float, s: float, q: int, m: int,
             polys) -> tuple[float, float]:
    """Euler-Maclaurin value of sum_{j>=m} sum_r w_r g(step*j + b_r)."""
    base = step * m
    integral = 0.0
    boundary = 0.0
    last = 0.0
    for w, b in zip(weights, shifts):
        if w == 0.0:
            continue
        val, _ = gauss_panel(lambda x: _g(x, s, q), base, base + b)
        integral -= w * val / step
        x = base + b
        ell = math.log(x)
        acc = 0.5 * _g(x, s, q)
        for k, coef in enumerate(_B2K_OVER_FACT, start=1):
            order = 2 * k - 1
            t = coef * step ** order * x ** (-s - order) * _poly_at(polys[order], ell)
            acc -= t
            if abs(t) < 1e-20 * abs(acc) + 1e-300:
                break
        last = max(last, abs(t))
        boundary += w * acc
    return integral + boundary, last * sum(abs(w) for w in weights)


def shifted_series(weights: Sequence[float], shifts: Sequence[float], step: float,
                   s: float, log_power: int = 0,
                   target_abs_error: float = DEFAULT_TARGET) -> SeriesValue:
    """sum_{j>=0} sum_r w_r (step*j + b_r)^-s log^q(step*j + b_r)."""
    s = _check_s(s)
    w = np.ascontiguousarray(weights, dtype=float)
    b = np.ascontiguousarray(shifts, dtype=float)
    if len(w) != len(b) or len(w) == 0:
        raise InvalidArgumentError("weights and shifts must have equal nonzero length")
    if np.any(b <= 0) or step <= 0:
        raise InvalidArgumentError("shifts and step must be positive")
    if abs(math.fsum(w)) > 1e-12 * float(np.max(np.abs(w))) * len(w):
        raise InvalidArgumentError("weights must sum to zero")
    polys = _derivative_polys(s, log_power, 2 * len(_B2K_OVER_FACT))
    m0 = max(4, int(math.ceil(40.0 / step)))
    values = []
    tail_err = 0.0
    for m in (m0, 2 * m0, 4 * m0):
        head = _kernels.shifted_sum(w, b, float(step), s, log_power, m)
        tail, err = _em_tail(w, b, float(step), s, log_power, m, polys)
        values.append(head + tail)
        tail_err = err
    value = float(values[-1])
    if not math.isfinite(value):
        raise NonFiniteTermError("series value is not finite")
    spread = float(max(values) - min(values))
    est = spread + float(tail_err) + 16 * _EPS * (abs(value) + float(np.sum(np.abs(w))))
    evals = 4 * m0 * len(w)
    target = float(target_abs_error)
    return SeriesValue(value, est, evals, bool(est <= target and spread <= _CROSS_CHECK))


def _as_shifted(chi: PeriodicCoefficients) -> tuple[list[float], list[float]]:
    pairs = [(c, float(r)) for r, c in enumerate(chi.coeffs, start=1) if c != 0.0]
    return [p[0] for p in pairs], [p[1] for p in pairs]


def l_series(chi: PeriodicCoefficients, s: float,
             target_abs_error: float = DEFAULT_TARGET) -> SeriesValue:
    """sum_{k>=1} chi(k) / k^s for mean-zero periodic chi and s > 0."""
    w, b = _as_shifted(chi)
    return shifted_series(w, b, float(chi.period), s, 0, target_abs_error)


def log_l_series(chi: PeriodicCoefficients, s: float,
                 target_abs_error: float = DEFAULT_TARGET) -> SeriesValue:
    """sum_{k>=1} chi(k) log k / k^s for mean-zero periodic chi and s > 0."""
    w, b = _as_shifted(chi)
    return shifted_series(w, b, float(chi.period), s, 1, target_abs_error)


# ---------------------------------------------------------------------------
# twisted sums

def _boole_coefficients(z: complex, count: int) -> list[complex]:
    """Taylor coefficients of 1/(1 - z e^t)."""
    r = z / (1 - z)
    b = [1 / (1 - z)]
    inv_fact = [1.0 / math.factorial(i) for i in range(count + 1)]
    for k in range(1, count + 1):
        b.append(r * sum(b[k - i] * inv_fact[i] for i in range(1, k + 1)))
    return b


_BOOLE_ORDER = 48


def _boole_tail(theta: float, z: complex, coeffs: list[complex], step: float,
                shift: float, s: float, q: int, n: int, polys) -> tuple[complex, float]:
    x = step * n + shift
    ell = math.log(x)
    acc = 0j
    mags: list[float] = []
    for k, bk in enumerate(coeffs):
        if bk == 0:
            continue
        t = bk * step ** k * x ** (-s - k) * _poly_at(polys[k], ell)
        # Near z = -1 the magnitudes alternate between large and small, so
        # divergence is judged against the term two places back.
        if len(mags) > 4 and abs(t) > max(mags[-2:]):
            break
        acc += t
        mags.append(abs(t))
        if max(mags[-2:]) < 1e-20 * abs(acc):
            break
    best = max(mags[-2:]) if mags else 0.0
    return cmath.exp(1j * theta * n) * acc, best


def twisted_series(theta: float, step: float, shift: float, s: float,
                   log_power: int = 0,
                   target_abs_error: float = DEFAULT_TARGET) -> ComplexSeriesValue:
    """sum_{j>=0} e^{i j theta} (step*j + shift)^-s log^q(step*j + shift)."""
    s = _check_s(s)
    if step <= 0 or shift <= 0:
        raise InvalidArgumentError("step and shift must be positive")
    delta = abs(math.remainder(theta, 2 * math.pi))
    if delta < 4e-6:
        raise PreconditionError("twist angle too close to a multiple of 2*pi")
    z = cmath.exp(1j * theta)
    coeffs = _boole_coefficients(z, _BOOLE_ORDER)
    polys = _derivative_polys(s, log_power, _BOOLE_ORDER)
    n0 = max(8, int(math.ceil(40.0 / delta)))
    values = []
    last = 0.0
    for n in (n0, 2 * n0, 4 * n0):
        head = _kernels.twisted_sum(theta, float(step), float(shift), s, log_power, 0, n)
        tail, last = _boole_tail(theta, z, coeffs, step, shift, s, log_power, n, polys)
        values.append(head + tail)
    value = values[-1]
    if not cmath.isfinite(value):
        raise NonFiniteTermError("series value is not finite")
    spread = max(abs(v - value) for v in values)
    est = spread + last + 16 * _EPS * (abs(value) + 1.0) * math.log(4 * n0 + 2)
    target = float(target_abs_error)
    return ComplexSeriesValue(value, est, 4 * n0, est <= target and spread <= _CROSS_CHECK)


def sin_log_series(a: float, target_abs_error: float = DEFAULT_TARGET) -> SeriesValue:
    """sum_{i>=1} (-1)^(i-1) sin(i a) log(i) / i for 0 < a < pi."""
    a = float(a)
    if not (0.0 < a < math.pi):
        raise DomainError(f"sin_log_series requires 0 < a < pi, got {a!r}")
    # (-1)^(i-1) sin(i a) = -Im z^i with z = -e^{ia}; sum from i = 1.
    theta = a + math.pi
    res = twisted_series(theta, 1.0, 1.0, 1.0, 1, target_abs_error)
    value = -(cmath.exp(1j * theta) * res.value).imag
    return SeriesValue(value, res.abs_error_estimate, res.evaluations, res.converged)


# ---------------------------------------------------------------------------
# brute force

def direct_partial_sum(chi: PeriodicCoefficients, s: float, nterms: int,
                       log_power: int = 0, riesz_order: int = 0) -> float:
    """sum_{k<=N} chi(k) log^q k / k^s, optionally with Riesz weights (1-k/N)^r."""
    s = _check_s(s)
    coeffs = np.ascontiguousarray(chi.coeffs, dtype=float)
    return _kernels.periodic_sum(coeffs, s, log_power, 1, int(nterms),
                                 float(nterms), int(riesz_order))


def direct_twisted_sum(theta: float, step: float, shift: float, s: float,
                       nterms: int, log_power: int = 0, riesz_order: int = 0) -> complex:
    """First N terms of a twisted sum, optionally with Riesz weights."""
    return _kernels.twisted_sum(float(theta), float(step), float(shift), float(s),
                                log_power, 0, int(nterms), float(nterms), int(riesz_order))


# ---------------------------------------------------------------------------
# functional equations

def mellin_series(chi: PeriodicCoefficients, sigma: float,
                  target_abs_error: float = DEFAULT_TARGET) -> EvalResult:
    """Gamma(sigma) * L(chi, sigma) as the integral of t^(sigma-1) sum chi(k) e^(-k t)."""
    sigma = _check_s(sigma)
    p = chi.period
    terms = [(c, r - 1) for r, c in enumerate(chi.coeffs, start=1) if c != 0.0]

    def f(t: float) -> float:
        num = 0.0
        for c, e in terms:
            num += c * math.expm1(-e * t)
        return t ** (sigma - 1) * math.exp(-t) * num / -math.expm1(-p * t)

    return integrate_halfline(f, EndpointHint.exp_decay(1.0, "log_singular"),
                              target_abs_error)


_PI = math.pi
_SIN60 = math.sin(_PI / 3)
_SIN45 = math.sin(_PI / 4)

CHI3 = PeriodicCoefficients(3, (1, -1, 0))
BETA4 = PeriodicCoefficients(4, (1, 0, -1, 0))
F6 = PeriodicCoefficients(6, (1, 0, 0, 0, -1, 0))
PHI6 = PeriodicCoefficients(6, (1, 1, 0, -1, -1, 0))
F8 = PeriodicCoefficients(8, (1, 0, 1, 0, -1, 0, -1, 0))
T12 = PeriodicCoefficients(12, (1, 0, 0, 0, 1, 0, -1, 0, 0, 0, -1, 0))


def cos_twist_coefficients(m: int, n: int) -> PeriodicCoefficients:
    """d_k = (-1)^((k-1)/2) cos(k m pi / 2n) on odd k, zero on even k."""
    vals = {k: (-1) ** ((k - 1) // 2) * math.cos(k * m * _PI / (2 * n))
            for k in range(1, 4 * n, 2)}
    return PeriodicCoefficients.from_residues(4 * n, vals)


def sin_twist_coefficients(m: int, n: int) -> PeriodicCoefficients:
    """d_k = sin(k m pi / 2n) on odd k, zero on even k."""
    vals = {k: math.sin(k * m * _PI / (2 * n)) for k in range(1, 4 * n, 2)}
    return PeriodicCoefficients.from_residues(4 * n, vals)


def quarter_character(m: int, n: int, first: bool) -> PeriodicCoefficients:
    """Sign pattern of period 4n supported on four residues."""
    if first:
        vals = {n - m: 1, n + m: 1, 3 * n - m: -1, 3 * n + m: -1}
    else:
        vals = {m: 1, 2 * n - m: 1, 2 * n + m: -1, 4 * n - m: -1}
    return PeriodicCoefficients.from_residues(4 * n, vals)


@dataclass(frozen=True)
class _Family:
    # "integral": X(1-s) = K(s) / (cos(s pi/2) Gamma(s)) X(s) with X = Gamma L(chi).
    # "series":   L(left, s) = K(s) / (sin(s pi/2) Gamma(s)) L(right, 1-s).
    kind: str
    left: Callable[[tuple[int, int]], PeriodicCoefficients]
    right: Callable[[tuple[int, int]], PeriodicCoefficients]
    factor: Callable[[float, tuple[int, int]], float]


def _const(chi: PeriodicCoefficients):
    return lambda mn: chi


FAMILIES: dict[str, _Family] = {
    "eq34_G": _Family("integral", _const(CHI3), _const(CHI3),
                      lambda s, mn: (2 * _PI / 3) ** (1 - s) * _SIN60),
    "eq35_G1": _Family("integral", _const(BETA4), _const(BETA4),
                       lambda s, mn: (_PI / 2) ** (1 - s)),
    "eq51_beta": _Family("series", _const(BETA4), _const(BETA4),
                         lambda s, mn: (_PI / 2) ** s),
    "eq52_mod3": _Family("series", _const(CHI3), _const(CHI3),
                         lambda s, mn: (2 * _PI / 3) ** s * _SIN60),
    "eq53_f": _Family("series", _const(F6), _const(F6),
                      lambda s, mn: (_PI / 3) ** s * _SIN60 * (1 + 2 ** s) / (1 + 2 ** (s - 1))),
    "eq53_phi": _Family("series", _const(PHI6), _const(PHI6),
                        lambda s, mn: (_PI / 3) ** s * _SIN60 * 2 * (1 + 2 ** (s - 1)) / (1 + 2 ** s)),
    "eq54_F": _Family("series", _const(F8), _const(F8),
                      lambda s, mn: 2 * (_PI / 4) ** s * _SIN45),
    "eq85_Q": _Family("integral", _const(F8), _const(F8),
                      lambda s, mn: 2 * (_PI / 4) ** (1 - s) * _SIN45),
    "eq89_R": _Family("integral", _const(PHI6), _const(PHI6),
                      lambda s, mn: (_PI / 3) ** (1 - s) * _SIN60 * (1 + 2 ** s) / (1 + 2 ** (s - 1))),
    "eq97_first": _Family("series", lambda mn: quarter_character(*mn, True),
                          lambda mn: cos_twist_coefficients(*mn),
                          lambda s, mn: 2 * (_PI / (2 * mn[1])) ** s),
    "eq97_second": _Family("series", lambda mn: quarter_character(*mn, False),
                           lambda mn: sin_twist_coefficients(*mn),
                           lambda s, mn: 2 * (_PI / (2 * mn[1])) ** s),
    "eq98_T": _Family("series", _const(T12), _const(T12),
                      lambda s, mn: (_PI / 2) ** s * (1 + 3 ** -s) / (1 + 3 ** (s - 1))),
}


def feq_sides(family: str, s: float, mn: tuple[int, int] = (1, 3),
              target_abs_error: float = DEFAULT_TARGET) -> tuple[EvalResult, EvalResult]:
    """Independently computed sides of a functional equation.

    The left side is evaluated at 1 - s (series or quadrature), the right
    side from the prefactor at s and the opposite method.  ``mn`` selects
    the angle m*pi/n for the two families of period 4n.
    """
    try:
        fam = FAMILIES[family]
    except KeyError:
        raise InvalidArgumentError(f"unknown functional-equation family {family!r}") from None
    s = float(s)
    if not (0.0 < s < 1.0):
        raise DomainError(f"functional equations are evaluated for 0 < s < 1, got {s!r}")
    m, n = mn
    if not (0 < m < n) or math.gcd(m, n) != 1:
        raise InvalidArgumentError("mn must be coprime with 0 < m < n")
    c, sn = math.cos(0.5 * _PI * s), math.sin(0.5 * _PI * s)
    if abs(c) < 1e-8 or abs(sn) < 1e-8:
        raise SingularPrefactorError(f"trigonometric prefactor vanishes at s={s!r}")
    k = fam.factor(s, mn)
    if fam.kind == "integral":
        chi = fam.left(mn)
        lhs = mellin_series(chi, 1 - s, target_abs_error)
        series = l_series(chi, s, target_abs_error)
        coef = k / c
    else:
        lhs = l_series(fam.right(mn), 1 - s, target_abs_error)
        series = mellin_series(fam.left(mn), s, target_abs_error)
        coef = sn / k
    rhs = EvalResult(coef * series.value, abs(coef) * series.abs_error_estimate,
                     series.evaluations, series.converged)
    return lhs, rhs


def feq_residual(family: str, s: float, mn: tuple[int, int] = (1, 3)) -> float:
    """|LHS - RHS| of a named functional equation at s."""
    lhs, rhs = feq_sides(family, s, mn)
    return abs(lhs.value - rhs.value)
