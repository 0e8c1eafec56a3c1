"""Evaluators for the two sides of every catalogued identity.

Each entry of :data:`EVALUATORS` maps a record id to a pair of callables
``side(binding, target) -> EvalResult`` together with a short label of the
numerical route each side takes.  The two routes of an entry never share a
computation: a side is a quadrature, a series summation, or a closed form
built from log-Gamma and elementary functions.

Notation used in the comments: C is Euler's constant, lg is log-Gamma,
T(theta, step, shift, s, q) is the twisted series
sum_j e^{ij theta} (step j + shift)^-s log^q(step j + shift).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from . import malmsten as mt
from . import sumacc
from .quad import EndpointHint, EvalResult, combine, exact, integrate_halfline, integrate_unit
from .sfcore import EULER_GAMMA as C
from .sfcore import digamma, log_gamma as lg
from .sumacc import BETA4, CHI3, F6, F8, PHI6, T12

PI = math.pi
SQ2, SQ3 = math.sqrt(2.0), math.sqrt(3.0)
SIN60 = SQ3 / 2
LOG2PI = math.log(2 * PI)

Binding = dict
Side = Callable[[Binding, float], EvalResult]

QUADRATURE = "quadrature"
CLOSED = "closed form"
SHIFTED = "shifted series"
TWISTED = "twisted series"
RELATION = "relation"


@dataclass(frozen=True)
class Evaluator:
    lhs: Side
    rhs: Side
    lhs_route: str
    rhs_route: str


# ---------------------------------------------------------------------------
# small helpers

def _scale(r: EvalResult, c: float, shift: float = 0.0) -> EvalResult:
    return combine([(c, r)], shift)


def _exp(r: EvalResult) -> EvalResult:
    v = math.exp(r.value)
    return EvalResult(v, v * r.abs_error_estimate * 1.0001 + 4e-16 * v,
                      r.evaluations, r.converged)


def _ratio(num: EvalResult, den: EvalResult) -> EvalResult:
    v = num.value / den.value
    err = (num.abs_error_estimate + abs(v) * den.abs_error_estimate) / abs(den.value)
    return EvalResult(v, err + 4e-16 * abs(v), num.evaluations + den.evaluations,
                      num.converged and den.converged)


def _mul(a: EvalResult, b: EvalResult) -> EvalResult:
    v = a.value * b.value
    err = abs(a.value) * b.abs_error_estimate + abs(b.value) * a.abs_error_estimate
    return EvalResult(v, err + 4e-16 * abs(v), a.evaluations + b.evaluations,
                      a.converged and b.converged)


def _closed(fn: Callable[[Binding], float], terms: int = 8) -> Side:
    return lambda b, t: exact(fn(b), terms)


def _angle(b: Binding) -> mt.RationalAngle:
    return mt.RationalAngle(int(b["m"]), int(b["n"]))


def _halfline_t(g: Callable[[float], float], rate: float, target: float,
                at_zero: str = "log_singular") -> EvalResult:
    return integrate_halfline(g, EndpointHint.exp_decay(rate, at_zero), target)


def _loglog_unit(g: Callable[[float], float], target: float) -> EvalResult:
    return integrate_unit(g, EndpointHint("smooth", "loglog_singular"), target)


def _twist(theta: float, step: float, shift: float, s: float, q: int, phase: float,
           part: str, target: float) -> EvalResult:
    res = sumacc.twisted_series(theta, step, shift, s, q, target)
    z = cmath.exp(1j * phase) * res.value
    v = z.imag if part == "im" else z.real
    return EvalResult(v, res.abs_error_estimate, res.evaluations, res.converged)


def sin_alternating(a: float, s: float, q: int, target: float) -> EvalResult:
    """sum_{i>=1} (-1)^(i-1) sin(i a) log^q(i) / i^s."""
    return _twist(a + PI, 1.0, 1.0, s, q, a, "im", target)


def sin_plain(a: float, s: float, q: int, target: float) -> EvalResult:
    """sum_{k>=1} sin(k a) log^q(k) / k^s."""
    return _twist(a, 1.0, 1.0, s, q, a, "im", target)


def sin_odd(a: float, s: float, q: int, target: float) -> EvalResult:
    """sum_{j>=0} sin((2j+1) a) log^q(2j+1) / (2j+1)^s."""
    return _twist(2 * a, 2.0, 1.0, s, q, a, "im", target)


def cos_half_alternating(a: float, s: float, q: int, target: float) -> EvalResult:
    """sum_{j>=0} (-1)^j cos((2j+1) a/2) log^q(2j+1) / (2j+1)^s."""
    return _twist(a + PI, 2.0, 1.0, s, q, a / 2, "re", target)


def sin_half(a: float, s: float, q: int, target: float) -> EvalResult:
    """sum_{j>=0} sin((2j+1) a/2) log^q(2j+1) / (2j+1)^s."""
    return _twist(a, 2.0, 1.0, s, q, a / 2, "im", target)


def _shifted(pairs: dict[float, float], step: float, s: float, q: int,
             target: float) -> EvalResult:
    shifts = sorted(pairs)
    return sumacc.shifted_series([pairs[x] for x in shifts], shifts, step, s, q, target)


def _reflect_factor(s: float) -> float:
    """1 / (sin(s pi/2) Gamma(s))."""
    return 1.0 / (math.sin(0.5 * PI * s) * math.gamma(s))


def _gamma_ratio_sum(coef: Callable[[int], float], pairs, count: int) -> float:
    return math.fsum(coef(i) * (lg(pairs(i)[0]) - lg(pairs(i)[1])) for i in range(1, count + 1))


# ---------------------------------------------------------------------------
# the L transcendent

def l_by_quadrature(b, t):
    return mt.l_integral(_angle(b).value, b["x"], t)


def l_by_gamma(b, t):
    return exact(mt.l_closed(_angle(b), b["x"]), 2 * b["n"])


def frakl_by_quadrature(b, t):
    return mt.frakl_integral(_angle(b).value, b["x"], t)


def frakl_by_gamma(b, t):
    return exact(mt.frakl_closed(_angle(b), b["x"]), 2 * b["n"] + 2)


def l_at_right_angle_quadrature(b, t):
    return mt.l_integral(PI / 2, b["x"], t)


def l_at_right_angle_gamma(b):
    x = b["x"]
    return 2 * (math.log(2) + lg((x + 3) / 4) - lg((x + 1) / 4))


def log_four_over_pi_integral(b, t):
    # sech-weighted form: int log(1+u^2) e^{-pi u/2} / (1 + e^{-pi u}) du
    def f(u):
        return math.log1p(u * u) * math.exp(-PI * u / 2) / (1 + math.exp(-PI * u))
    return integrate_halfline(f, EndpointHint.exp_decay(PI / 2), t)


def log_u_frullani_integral(b, t):
    u = float(b["u"])

    def f(z):
        if z < 1e-3:
            # (e^{-z} - 1 + 2 sin^2(uz/2)) / z by its Taylor series
            return (-1 + z / 2 - z * z / 6 + z ** 3 / 24
                    + 2 * (u * u * z / 4 - u ** 4 * z ** 3 / 48))
        return (math.expm1(-z) + 2 * math.sin(u * z / 2) ** 2) / z

    return integrate_halfline(f, None, t, oscillation_frequency=u)


def loglog_sinh_ratio_integral(b, t):
    """int_0^inf e^{-(n-m)t} (1 - e^{-2mt}) / (1 - e^{-2nt}) log t dt."""
    m, n = int(b["m"]), int(b["n"])

    def g(x):
        return math.exp(-(n - m) * x) * math.expm1(-2 * m * x) / math.expm1(-2 * n * x) * math.log(x)

    return _halfline_t(g, n - m, t)


def loglog_sinh_ratio_gamma(m: int, n: int) -> float:
    ang = mt.RationalAngle(m, n)
    a = ang.value
    if ang.parity == mt.ODD:
        head = PI / (2 * n) * math.tan(a / 2) * LOG2PI
        tail = _gamma_ratio_sum(ang.s, lambda i: ((n + i) / (2 * n), i / (2 * n)), n - 1)
    else:
        head = PI / (2 * n) * math.tan(a / 2) * math.log(PI)
        tail = _gamma_ratio_sum(ang.s, lambda i: (1 - i / n, i / n), ang.half_count)
    return head + PI / n * tail


def loglog_geometric_integral(b, t):
    n = int(b["n"])

    def g(y):
        return y ** (n - 2) * math.log(-math.log(y)) / math.fsum(y ** (2 * k) for k in range(n))

    return _loglog_unit(g, t)


def vardi_quarter_integral(b, t):
    return _loglog_unit(lambda y: math.log(-math.log(y)) / (1 + y * y), t)


def vardi_third_integral(b, t):
    return _loglog_unit(lambda y: math.log(-math.log(y)) / (1 + y + y * y), t)


def l_shift_three_sum_quadrature(b, t):
    a, x = 2 * PI / 3, b["x"]
    return combine([(1.0, mt.l_integral(a, x + 3, t / 2)), (1.0, mt.l_integral(a, x, t / 2))])


def l_reflect_three_sum_quadrature(b, t):
    a, x = 2 * PI / 3, b["x"]
    return combine([(1.0, mt.l_integral(a, x, t / 2)), (1.0, mt.l_integral(a, 3 - x, t / 2))])


def l_reflect_three_elementary(b):
    x = b["x"]
    v = (x - 2) * (x - 1) * math.tan((x + 2) * PI / 6) * math.tan((x + 1) * PI / 6)
    return 2 * SIN60 * math.log(v)


def l_two_thirds_at_half_gamma(b):
    return 2 * SIN60 * math.log(0.5 / math.tan(PI / 12))


def l_by_sine_gamma_sum(b):
    ang, x = _angle(b), b["x"]
    n = ang.n
    return 2 * math.fsum(
        ang.s(i) * (0.5 * math.log(2 * n) + lg((x + n + i) / (2 * n)) - lg((x + i) / (2 * n)))
        for i in range(1, n))


def frakl_by_cosine_gamma_sum(b):
    ang, x = _angle(b), b["x"]
    n = ang.n
    return 2 * math.fsum(
        ang.c(i) * (0.5 * math.log(2 * n) + lg(0.5 + (x + i - 0.5) / (2 * n))
                    - lg((x + i - 0.5) / (2 * n)))
        for i in range(1, n + 1))


def relation(kind: str) -> tuple[Side, Side]:
    def sides(b):
        r = b.get("r")
        return mt.relation_sides(kind, _angle(b), b.get("x", 0.0), None if r is None else int(r))

    def lhs(b, t):
        sd = sides(b)
        k = max(1, len(sd.lhs_terms))
        return mt.relation_lhs_by_quadrature(sd, _angle(b).value, t / k)

    def rhs(b, t):
        return exact(sides(b).rhs, 4 * b["n"])

    return lhs, rhs


def tan_half_angle(b, t):
    return exact(math.tan(_angle(b).value / 2))


def tan_half_angle_sine_sum(b, t):
    ang = _angle(b)
    return exact(math.fsum(ang.s(i) for i in range(1, ang.n)), ang.n)


def sum_two_frakl_quadrature_vs_l(b, t):
    a = _angle(b).value
    return _scale(mt.frakl_integral(a, b["x"], t), 2 * math.sin(a / 2))


def l_half_shift_pair_gamma(b):
    ang, x = _angle(b), b["x"]
    return mt.l_closed(ang, x + 0.5) + mt.l_closed(ang, x - 0.5)


# ---------------------------------------------------------------------------
# Mellin transforms of rational kernels

def _s(b) -> float:
    return float(b["s"])


def sinh_ratio_mellin_integral(b, t):
    """int_0^inf sinh(mt)/sinh(nt) t^-s dt."""
    m, n, s = int(b["m"]), int(b["n"]), _s(b)

    def g(x):
        return math.exp(-(n - m) * x) * math.expm1(-2 * m * x) / math.expm1(-2 * n * x) * x ** -s

    return _halfline_t(g, n - m, t)


def sinh_ratio_mellin_series(b, t):
    m, n, s = int(b["m"]), int(b["n"]), _s(b)
    a = m * PI / n
    c = (PI / n) ** (1 - s) / math.cos(PI * s / 2)
    return _scale(sin_alternating(a, s, 0, t / abs(c)), c)


def geometric_mellin_integral(b, t):
    n, s = int(b["n"]), _s(b)

    def g(x):
        y = math.exp(-x)
        return y ** (n - 1) / math.fsum(y ** (2 * k) for k in range(n)) * x ** -s

    return _halfline_t(g, 1.0, t)


def geometric_mellin_series(b, t):
    n = int(b["n"])
    return sinh_ratio_mellin_series({"m": 1, "n": n, "s": b["s"]}, t)


def _quadratic_kernel(num: Callable[[float], float], den: Callable[[float], float],
                      sigma: float, target: float, rate: float = 1.0) -> EvalResult:
    """int_0^inf num(e^-t)/den(e^-t) t^(sigma-1) dt."""
    def g(x):
        y = math.exp(-x)
        return num(y) / den(y) * x ** (sigma - 1)
    return _halfline_t(g, rate, target)


def _digamma_relation(kernel_num, kernel_den, constant: Callable[[float], float]):
    def lhs(b, t):
        s = _s(b)
        parts = []
        for sig in (s, 1 - s):
            with_log = _halfline_t(
                lambda x: kernel_num(math.exp(-x)) / kernel_den(math.exp(-x))
                * x ** (sig - 1) * math.log(x), 1.0, t / 8)
            plain = _quadratic_kernel(kernel_num, kernel_den, sig, t / 8)
            parts.append((1.0, _ratio(with_log, plain)))
        return combine(parts)

    def rhs(b, t):
        s = _s(b)
        return exact(constant(s) + digamma(s) - PI / 2 * math.tan(PI * s / 2), 6)

    return lhs, rhs


def _sqrt_log_integral(num, den, rate: float = 1.0):
    """int_0^inf num(e^-x)/den(e^-x) log x / sqrt x dx."""
    def side(b, t):
        def g(x):
            y = math.exp(-x)
            return num(y) / den(y) * math.log(x) / math.sqrt(x)
        return _halfline_t(g, rate, t)
    return side


def _sqrt_integral(num, den, target: float, rate: float = 1.0) -> EvalResult:
    def g(x):
        y = math.exp(-x)
        return num(y) / den(y) / math.sqrt(x)
    return _halfline_t(g, rate, target)


def _one(y):
    return y


def _tri(y):
    return 1 + y + y * y


def _quad2(y):
    return 1 + y * y


def _f8num(y):
    return y * (1 + y * y)


def _f8den(y):
    return 1 + y ** 4


def _hexden(y):
    return 1 - y + y * y


def half_order_times(chi, factor: float) -> Side:
    def side(b, t):
        c = factor * math.sqrt(PI)
        return _scale(sumacc.l_series(chi, 0.5, t / abs(c)), c)
    return side


def gaussian_log_integral(b, t):
    k = float(b["k"])
    return _halfline_t(lambda x: math.exp(-k * x) * math.log(x) / math.sqrt(x), k, t)


def gaussian_log_closed(b):
    k = float(b["k"])
    return -math.sqrt(PI / k) * (math.log(k) + 2 * math.log(2) + C)


def log_series_half_combination(chi, scale: float = 1.0) -> Side:
    """-sqrt(pi) [L'(chi, 1/2) + (2 log 2 + C) L(chi, 1/2)] times scale."""
    def side(b, t):
        c = -math.sqrt(PI) * scale
        logl = sumacc.log_l_series(chi, 0.5, t / 4)
        plain = sumacc.l_series(chi, 0.5, t / 8)
        return combine([(c, logl), (c * (2 * math.log(2) + C), plain)])
    return side


def log_series_at_half(chi) -> Side:
    return lambda b, t: sumacc.log_l_series(chi, 0.5, t)


def series_at_half(chi) -> Side:
    return lambda b, t: sumacc.l_series(chi, 0.5, t)


def scaled_sqrt_integral(num, den, factor: float) -> Side:
    def side(b, t):
        c = factor / math.sqrt(PI)
        return _scale(_sqrt_integral(num, den, t / abs(c)), c)
    return side


def exp_of(side: Side) -> Side:
    def wrapped(b, t):
        r = side(b, t / 4)
        return _exp(r)
    return wrapped


def sinh_mellin_integral(b, t):
    """int_0^inf sinh(a u)/sinh(pi u) u^-s du."""
    a, s = float(b["a"]), _s(b)

    def g(u):
        return math.exp(-(PI - a) * u) * math.expm1(-2 * a * u) / math.expm1(-2 * PI * u) * u ** -s

    return _halfline_t(g, PI - a, t)


def sinh_mellin_series(b, t):
    a, s = float(b["a"]), _s(b)
    c = math.gamma(1 - s)
    return _scale(_shifted({PI - a: 1.0, PI + a: -1.0}, 2 * PI, 1 - s, 0, t / c), c)


def poisson_sine_mellin_integral(b, t):
    a, s = float(b["a"]), _s(b)
    sa, ca = math.sin(a), math.cos(a)
    return _quadratic_kernel(lambda y: sa * y, lambda y: 1 + 2 * y * ca + y * y, s, t)


def poisson_sine_mellin_series(b, t):
    a, s = float(b["a"]), _s(b)
    c = math.gamma(s)
    return _scale(sin_alternating(a, s, 0, t / c), c)


def shifted_pair(first: Callable[[float], float], second: Callable[[float], float],
                 step: float | None = None) -> Side:
    def side(b, t):
        a, s = float(b["a"]), _s(b)
        return _shifted({first(a): 1.0, second(a): -1.0}, step or 2 * PI, s, 0, t)
    return side


def reflected_sine(kind: Callable, scale: Callable[[float], float] = lambda s: 1.0) -> Side:
    def side(b, t):
        a, s = float(b["a"]), _s(b)
        c = scale(s) * _reflect_factor(s)
        return _scale(kind(a, 1 - s, 0, t / abs(c)), c)
    return side


def half_order_shifted(first, second) -> Side:
    def side(b, t):
        a = float(b["a"])
        return _shifted({first(a): 1.0, second(a): -1.0}, 2 * PI, 0.5, 0, t)
    return side


def half_order_sine(kind) -> Side:
    def side(b, t):
        c = math.sqrt(2 / PI)
        return _scale(kind(float(b["a"]), 0.5, 0, t / c), c)
    return side


def rational_shifted(first: Callable[[int, int], int], second: Callable[[int, int], int]) -> Side:
    def side(b, t):
        m, n = int(b["m"]), int(b["n"])
        return _shifted({float(first(m, n)): 1.0, float(second(m, n)): -1.0}, 2.0 * n, _s(b), 0, t)
    return side


def rational_reflected_sine(kind) -> Side:
    def side(b, t):
        m, n, s = int(b["m"]), int(b["n"]), _s(b)
        c = (PI / n) ** s * _reflect_factor(s)
        return _scale(kind(m * PI / n, 1 - s, 0, t / abs(c)), c)
    return side


# ---------------------------------------------------------------------------
# log series at s = 1

def alternating_log_series_shifted(b, t):
    m, n = int(b["m"]), int(b["n"])
    return _shifted({float(n - m): 1.0, float(n + m): -1.0}, 2.0 * n, 1.0, 1, t)


def alternating_log_series_gamma(m: int, n: int) -> float:
    ang = mt.RationalAngle(m, n)
    a = ang.value
    if ang.parity == mt.ODD:
        head = -PI / (2 * n) * math.tan(a / 2) * (C + LOG2PI)
        tail = _gamma_ratio_sum(ang.s, lambda i: ((n + i) / (2 * n), i / (2 * n)), n - 1)
    else:
        head = -PI / (2 * n) * math.tan(a / 2) * (C + math.log(PI))
        tail = _gamma_ratio_sum(ang.s, lambda i: ((n - i) / n, i / n), ang.half_count)
    return head - PI / n * tail


def plain_log_series_shifted(b, t):
    m, n = int(b["m"]), int(b["n"])
    return _shifted({float(m): 1.0, float(2 * n - m): -1.0}, 2.0 * n, 1.0, 1, t)


def plain_log_series_gamma(m: int, n: int) -> float:
    a = m * PI / n

    def sine(i):
        return math.sin(i * a)

    if m % 2:
        head = -PI / (2 * n) / math.tan(a / 2) * (C + LOG2PI)
        tail = _gamma_ratio_sum(sine, lambda i: ((n + i) / (2 * n), i / (2 * n)), n - 1)
    else:
        head = -PI / (2 * n) / math.tan(a / 2) * (C + math.log(PI))
        tail = _gamma_ratio_sum(sine, lambda i: ((n - i) / n, i / n), (n - 1) // 2)
    return head - PI / n * tail


def character_log_series(chi) -> Side:
    return lambda b, t: sumacc.log_l_series(chi, 1.0, t)


def beta_log_closed(b):
    return PI / 4 * (math.log(PI) - C) - PI * lg(0.75)


def beta_log_product_closed(b):
    return (PI * math.exp(-C) / math.gamma(0.75) ** 4) ** (PI / 4)


def chi3_log_closed(b):
    return (PI / SQ3 * (lg(1 / 3) - lg(2 / 3)) - PI / (3 * SQ3) * (C + LOG2PI))


def chi3_log_product_closed(b):
    base = math.gamma(1 / 3) * math.exp(-C / 3) / (math.gamma(2 / 3) * (2 * PI) ** (1 / 3))
    return base ** (PI / SQ3)


def f6_log_closed(b):
    return PI / (2 * SQ3) * (math.log(2 * PI / SQ3) - C - 2 * (lg(5 / 6) + lg(2 / 3)))


def f6_log_product_closed(b):
    base = math.sqrt(2 * PI) * math.exp(-C / 2) / (3 ** 0.25 * math.gamma(2 / 3) * math.gamma(5 / 6))
    return base ** (PI / SQ3)


def phi6_log_closed(b):
    return PI / (3 * SQ3) * (LOG2PI - 2 * C) - 2 * PI / SQ3 * lg(5 / 6)


def phi6_log_product_closed(b):
    return ((2 * PI) ** (1 / 3) * math.exp(-2 * C / 3) / math.gamma(5 / 6) ** 2) ** (PI / SQ3)


def _f8_log_base() -> float:
    return (0.25 * math.log(2) + lg(1 / 8) + lg(3 / 8) - C / 2 - 1.5 * LOG2PI)


def f8_log_closed(b):
    return PI / SQ2 * _f8_log_base()


def f8_log_product_closed(b):
    return math.exp(_f8_log_base()) ** (PI / SQ2)


def t12_log_closed(b):
    return PI / 3 * (0.25 * math.log(3) - C + lg(0.25) - 0.5 * math.log(2) - 3 * lg(0.75))


def t12_log_product_closed(b):
    return math.exp(t12_log_closed(b))


def _eighth_first_term() -> float:
    return PI / (2 * SQ2) * (lg(1 / 8) + lg(3 / 8) - 1.25 * math.log(2) - 1.5 * math.log(PI) - C / 2)


def _eighth_second_term() -> float:
    return PI / 2 * (0.25 * math.log(PI) - C / 4 - lg(0.75))


def eighth_alternating_closed(b):
    return _eighth_first_term() - _eighth_second_term()


def eighth_plain_closed(b):
    return _eighth_first_term() + _eighth_second_term()


def twisted_character(kind, a: float, scale: float) -> Side:
    def side(b, t):
        return _scale(kind(a, 1.0, 1, t / abs(scale)), scale)
    return side


# ---------------------------------------------------------------------------
# the log-sine integrals

def _k_integrand(a: float) -> Callable[[float], float]:
    """(sinh(au) - au) / (u sinh(pi u))."""
    def f(u):
        au = a * u
        if au < 0.1:
            a2 = au * au
            num = au * a2 / 6 * (1 + a2 / 20 * (1 + a2 / 42 * (1 + a2 / 72 * (1 + a2 / 110))))
            return num / (u * math.sinh(PI * u))
        if u < 0.5:
            return (math.sinh(au) - au) / (u * math.sinh(PI * u))
        e = math.exp(-PI * u)
        num = math.exp(-(PI - a) * u) * -math.expm1(-2 * au) - 2 * au * e
        return num / (-math.expm1(-2 * PI * u)) / u
    return f


def sinh_excess_integral(b, t):
    a = float(b["a"])
    return integrate_halfline(_k_integrand(a), EndpointHint.exp_decay(PI - a), t)


def poisson_excess_loglog_integral(b, t):
    a = float(b["a"])
    sa, ca = math.sin(a), math.cos(a)

    def g(y):
        return (sa / (1 + 2 * y * ca + y * y) - a / (1 + y) ** 2) * math.log(-math.log(y))

    return _scale(_loglog_unit(g, t * PI / 2), -2 / PI)


def _gamma_half_ratio(a: float) -> float:
    return lg(0.5 + a / (2 * PI)) - lg(0.5 - a / (2 * PI))


def sinh_excess_closed(b):
    a = float(b["a"])
    return a / PI * digamma(0.5) - _gamma_half_ratio(a)


def poisson_sine_loglog_integral(b, t):
    a = float(b["a"])
    sa, ca = math.sin(a), math.cos(a)
    return _loglog_unit(lambda y: sa * math.log(-math.log(y)) / (1 + 2 * y * ca + y * y), t)


def poisson_sine_loglog_mixed(b, t):
    a = float(b["a"])
    base = _loglog_unit(lambda y: math.log(-math.log(y)) / (1 + y) ** 2, t / max(a, 1.0))
    return _scale(base, a, -0.5 * a * digamma(0.5) + 0.5 * PI * _gamma_half_ratio(a))


def squared_loglog_integral(b, t):
    return _loglog_unit(lambda y: math.log(-math.log(y)) / (1 + y) ** 2, t)


def squared_loglog_closed(b):
    return 0.5 * digamma(0.5) + 0.5 * LOG2PI


def poisson_loglog_integral(b, t):
    a = float(b["a"])
    ca = math.cos(a)
    return _loglog_unit(lambda y: math.log(-math.log(y)) / (1 + 2 * y * ca + y * y), t)


def poisson_loglog_closed(b):
    a = float(b["a"])
    return PI / (2 * math.sin(a)) * (a / PI * LOG2PI + _gamma_half_ratio(a))


def sin_log_alternating_series(b, t):
    return sumacc.sin_log_series(float(b["a"]), t)


def sin_log_alternating_closed(b):
    a = float(b["a"])
    return -0.5 * PI * _gamma_half_ratio(a) - 0.5 * a * (C + LOG2PI)


def sin_log_plain_series(b, t):
    return sin_plain(float(b["a"]), 1.0, 1, t)


def sin_log_plain_closed(b):
    a = float(b["a"])
    return (0.5 * PI * (lg(a / (2 * PI)) - lg(1 - a / (2 * PI)))
            - 0.5 * (PI - a) * (C + LOG2PI))


def sin_log_odd_series(b, t):
    return sin_odd(float(b["a"]), 1.0, 1, t)


def sin_log_odd_closed(b):
    a = float(b["a"])
    return (0.5 * PI * (lg(a / (2 * PI)) - lg(0.5 + a / (2 * PI)))
            - 0.25 * PI * (C + math.log(2 * PI / math.tan(a / 2))))


# ---------------------------------------------------------------------------
# the cosh transcendent and quarter characters

def frakl_loglog_integral(b, t):
    """int_0^inf e^{-(n-m)t} (1 + e^{-2mt}) / (1 + e^{-2nt}) log t dt."""
    m, n = int(b["m"]), int(b["n"])

    def g(x):
        return math.exp(-(n - m) * x) * (1 + math.exp(-2 * m * x)) / (1 + math.exp(-2 * n * x)) * math.log(x)

    return _halfline_t(g, n - m, t)


def frakl_loglog_gamma(m: int, n: int) -> float:
    ang = mt.RationalAngle(m, n)
    sec = 1 / math.cos(ang.value / 2)
    if ang.parity == mt.ODD:
        head = PI / (2 * n) * sec * LOG2PI
        tail = _gamma_ratio_sum(ang.c, lambda i: (0.5 + (i - 0.5) / (2 * n), (i - 0.5) / (2 * n)), n)
    else:
        head = PI / (2 * n) * sec * math.log(PI)
        tail = _gamma_ratio_sum(ang.c, lambda i: (1 - (i - 0.5) / n, (i - 0.5) / n), ang.half_count)
    return head + PI / n * tail


def hexagonal_loglog_integral(b, t):
    return _loglog_unit(lambda y: math.log(-math.log(y)) / (1 - y + y * y), t)


def hexagonal_loglog_closed(b):
    return 2 * PI / SQ3 * (5 / 6 * LOG2PI - lg(1 / 6))


def cosh_ratio_mellin_integral(b, t):
    m, n, s = int(b["m"]), int(b["n"]), _s(b)

    def g(x):
        return math.exp(-(n - m) * x) * (1 + math.exp(-2 * m * x)) / (1 + math.exp(-2 * n * x)) * x ** -s

    return _halfline_t(g, n - m, t)


def cosh_ratio_mellin_series(b, t):
    m, n, s = int(b["m"]), int(b["n"]), _s(b)
    c = 2 * (PI / (2 * n)) ** (1 - s) / math.cos(PI * s / 2)
    return _scale(cos_half_alternating(m * PI / n, s, 0, t / abs(c)), c)


def hexagonal_mellin_integral(b, t):
    return _quadratic_kernel(lambda y: y, _hexden, 1 - _s(b), t)


def hexagonal_mellin_series(b, t):
    s = _s(b)
    c = (PI / 3) ** (1 - s) * SIN60 / (math.cos(PI * s / 2) * math.gamma(s))
    a = sumacc.mellin_series(CHI3, s, t / (4 * abs(c)))
    p = sumacc.mellin_series(PHI6, s, t / (4 * abs(c)))
    return combine([(c, a), (c, p)])


def quarter_log_integral(b, t):
    return _sqrt_log_integral(_f8num, _f8den)(b, t)


def cosh_mellin_integral(b, t):
    a, s = float(b["a"]), _s(b)

    def g(u):
        return math.exp(-(PI - a) * u) * (1 + math.exp(-2 * a * u)) / (1 + math.exp(-2 * PI * u)) * u ** -s

    return _halfline_t(g, PI - a, t)


def cosh_mellin_series(b, t):
    a, s = float(b["a"]), _s(b)
    c = math.gamma(1 - s)
    pairs = {PI - a: 1.0, PI + a: 1.0, 3 * PI - a: -1.0, 3 * PI + a: -1.0}
    return _scale(_shifted(pairs, 4 * PI, 1 - s, 0, t / c), c)


def quartic_poisson_mellin_integral(b, t):
    a, s = float(b["a"]), _s(b)
    ch, ca = math.cos(a / 2), math.cos(a)
    return _quadratic_kernel(lambda y: (1 + y * y) * ch * y,
                             lambda y: 1 + 2 * y * y * ca + y ** 4, s, t)


def quartic_poisson_mellin_series(b, t):
    a, s = float(b["a"]), _s(b)
    c = math.gamma(s)
    return _scale(cos_half_alternating(a, s, 0, t / c), c)


def quarter_shifted(pairs: Callable[[float], dict]) -> Side:
    def side(b, t):
        return _shifted(pairs(float(b["a"])), 4 * PI, _s(b), 0, t)
    return side


def quarter_reflected(kind) -> Side:
    def side(b, t):
        a, s = float(b["a"]), _s(b)
        c = 2 ** (1 - s) * _reflect_factor(s)
        return _scale(kind(a, 1 - s, 0, t / abs(c)), c)
    return side


def cosh_integral(b, t):
    a = float(b["a"])
    return integrate_halfline(
        lambda u: math.exp(-(PI - a) * u) * (1 + math.exp(-2 * a * u)) / (1 + math.exp(-2 * PI * u)),
        EndpointHint.exp_decay(PI - a), t)


def quarter_first_log_series(b, t):
    chi = sumacc.quarter_character(int(b["m"]), int(b["n"]), True)
    return sumacc.log_l_series(chi, 1.0, t)


def quarter_first_log_gamma(m: int, n: int) -> float:
    ang = mt.RationalAngle(m, n)
    sec = 1 / math.cos(ang.value / 2)
    if ang.parity == mt.ODD:
        head = -PI / (2 * n) * sec * (C + LOG2PI)
        tail = _gamma_ratio_sum(ang.c, lambda i: (0.5 + (i - 0.5) / (2 * n), (i - 0.5) / (2 * n)), n)
    else:
        head = -PI / (2 * n) * sec * (C + math.log(PI))
        tail = _gamma_ratio_sum(ang.c, lambda i: (1 - (i - 0.5) / n, (i - 0.5) / n), ang.half_count)
    return head - PI / n * tail


def quarter_second_log_series(b, t):
    chi = sumacc.quarter_character(int(b["m"]), int(b["n"]), False)
    return sumacc.log_l_series(chi, 1.0, t)


def quarter_second_log_gamma(m: int, n: int) -> float:
    a = m * PI / n

    def sine(i):
        return math.sin((i - 0.5) * a)

    csc = 1 / math.sin(a / 2)
    if m % 2:
        head = -PI / (2 * n) * csc * (C + LOG2PI)
        tail = _gamma_ratio_sum(sine, lambda i: (0.5 + (i - 0.5) / (2 * n), (i - 0.5) / (2 * n)), n)
    else:
        head = -PI / (2 * n) * csc * (C + math.log(PI))
        tail = _gamma_ratio_sum(sine, lambda i: (1 - (i - 0.5) / n, (i - 0.5) / n), (n - 1) // 2)
    return head - PI / n * tail


def cos_half_log_series(b, t):
    return cos_half_alternating(float(b["a"]), 1.0, 1, t)


def cos_half_log_closed(b):
    a = float(b["a"])
    return (PI / 4 * (math.log(PI) - C - math.log(math.cos(a / 2)))
            - PI / 2 * (lg(0.75 + a / (4 * PI)) + lg(0.75 - a / (4 * PI))))


# ---------------------------------------------------------------------------
# functional equations

def feq(family: str) -> tuple[Side, Side]:
    def mn(b):
        return (int(b["m"]), int(b["n"])) if "m" in b else (1, 3)

    def lhs(b, t):
        return sumacc.feq_sides(family, _s(b), mn(b), t)[0]

    def rhs(b, t):
        return sumacc.feq_sides(family, _s(b), mn(b), t)[1]

    return lhs, rhs


# ---------------------------------------------------------------------------
# the table

def _pair(lhs: Side, rhs: Side, lr: str, rr: str) -> Evaluator:
    return Evaluator(lhs, rhs, lr, rr)


def _closed_pair(lhs: Side, rhs_fn: Callable[[Binding], float], lr: str, terms: int = 8) -> Evaluator:
    return Evaluator(lhs, _closed(rhs_fn, terms), lr, CLOSED)


def _rel(kind: str) -> Evaluator:
    lhs, rhs = relation(kind)
    return Evaluator(lhs, rhs, QUADRATURE, CLOSED)


def _feq(family: str) -> Evaluator:
    lhs, rhs = feq(family)
    integral = sumacc.FAMILIES[family].kind == "integral"
    return Evaluator(lhs, rhs, QUADRATURE if integral else SHIFTED,
                     SHIFTED if integral else QUADRATURE)


def _mn_closed(fn: Callable[[int, int], float]) -> Callable[[Binding], float]:
    return lambda b: fn(int(b["m"]), int(b["n"]))


_chi3_sqrt = (_one, _tri)
_beta_sqrt = (_one, _quad2)

EVALUATORS: dict[str, Evaluator] = {
    # L transcendent
    "eq07": _pair(l_by_quadrature, l_by_gamma, QUADRATURE, CLOSED),
    "eq08": _closed_pair(log_four_over_pi_integral,
                                          lambda b: math.log(4 / PI), QUADRATURE),
    "eq09": _closed_pair(log_u_frullani_integral,
                                      lambda b: math.log(float(b["u"])), QUADRATURE),
    "eq10": _closed_pair(loglog_sinh_ratio_integral,
                                         _mn_closed(loglog_sinh_ratio_gamma), QUADRATURE),
    "eq11": _closed_pair(loglog_geometric_integral,
                                          lambda b: loglog_sinh_ratio_gamma(1, int(b["n"])),
                                          QUADRATURE),
    "eq12a": _closed_pair(
        vardi_quarter_integral,
        lambda b: PI / 2 * (0.5 * LOG2PI + lg(0.75) - lg(0.25)), QUADRATURE),
    "eq12b": _closed_pair(
        vardi_third_integral,
        lambda b: PI / SQ3 * (LOG2PI / 3 + lg(2 / 3) - lg(1 / 3)), QUADRATURE),
    "eq13": _closed_pair(l_at_right_angle_quadrature, l_at_right_angle_gamma,
                                       QUADRATURE),
    "eq14": _rel("rec_L_eq14"),
    "eq15": _rel("refl_L_eq15"),
    "eq16": _closed_pair(l_at_right_angle_quadrature,
                                              lambda b: math.log(4 / PI), QUADRATURE),
    "eq17a": _closed_pair(
        l_shift_three_sum_quadrature,
        lambda b: 2 * SIN60 * math.log((b["x"] + 2) * (b["x"] + 1)), QUADRATURE),
    "eq17b": _closed_pair(
        l_reflect_three_sum_quadrature, l_reflect_three_elementary, QUADRATURE),
    "eq18": _closed_pair(
        lambda b, t: mt.l_integral(2 * PI / 3, 1.5, t), l_two_thirds_at_half_gamma, QUADRATURE),
    "eq19": _pair(tan_half_angle, tan_half_angle_sine_sum, CLOSED, "finite sum"),
    "eq20": _closed_pair(l_by_quadrature, l_by_sine_gamma_sum, QUADRATURE),
    "eq21": _rel("rec_L_eq21"),
    "eq22": _rel("refl_L_eq22"),
    "eq23": _rel("halfpoint_L_eq23"),
    "eq24": _rel("rec_L_eq24"),
    "eq25": _rel("refl_L_eq25"),
    "eq26": _rel("mult_L_eq26"),
    # Mellin transforms and Dirichlet series
    "eq31": _pair(sinh_ratio_mellin_integral, sinh_ratio_mellin_series,
                                    QUADRATURE, TWISTED),
    "eq32": _pair(geometric_mellin_integral, geometric_mellin_series,
                                   QUADRATURE, TWISTED),
    "eq34": _feq("eq34_G"),
    "eq35": _feq("eq35_G1"),
    "eq37a": _pair(*_digamma_relation(_one, _tri, lambda s: math.log(2 * PI / 3)),
                             QUADRATURE, CLOSED),
    "eq37b": _pair(*_digamma_relation(_one, _quad2, lambda s: math.log(PI / 2)),
                              QUADRATURE, CLOSED),
    "eq38a": _pair(
        _sqrt_log_integral(*_chi3_sqrt),
        half_order_times(CHI3, 0.5 * (math.log(PI / 6) - PI / 2 - C)), QUADRATURE, SHIFTED),
    "eq38b": _pair(
        _sqrt_log_integral(*_beta_sqrt),
        half_order_times(BETA4, 0.5 * (math.log(PI / 8) - PI / 2 - C)), QUADRATURE, SHIFTED),
    "eq40": _closed_pair(gaussian_log_integral, gaussian_log_closed,
                                             QUADRATURE),
    "eq41a": _pair(
        lambda b, t: _scale(_sqrt_log_integral(*_chi3_sqrt)(b, t / SIN60), SIN60),
        log_series_half_combination(CHI3, SIN60), QUADRATURE, SHIFTED),
    "eq41b": _pair(
        _sqrt_log_integral(*_beta_sqrt), log_series_half_combination(BETA4),
        QUADRATURE, SHIFTED),
    "eq42a": _pair(
        log_series_at_half(CHI3),
        scaled_sqrt_integral(*_chi3_sqrt, 0.5 * (PI / 2 - C - math.log(8 * PI / 3))),
        SHIFTED, QUADRATURE),
    "eq42b": _pair(
        log_series_at_half(BETA4),
        scaled_sqrt_integral(*_beta_sqrt, 0.5 * (PI / 2 - C - math.log(2 * PI))),
        SHIFTED, QUADRATURE),
    "eq43a": _pair(series_at_half(CHI3),
                                      scaled_sqrt_integral(*_chi3_sqrt, 1.0),
                                      SHIFTED, QUADRATURE),
    "eq43b": _pair(series_at_half(BETA4),
                                      scaled_sqrt_integral(*_beta_sqrt, 1.0),
                                      SHIFTED, QUADRATURE),
    "eq43c": _pair(
        exp_of(log_series_at_half(CHI3)),
        exp_of(scaled_sqrt_integral(*_chi3_sqrt, 0.5 * (PI / 2 - C - math.log(8 * PI / 3)))),
        SHIFTED, QUADRATURE),
    "eq43d": _pair(
        exp_of(log_series_at_half(BETA4)),
        exp_of(scaled_sqrt_integral(*_beta_sqrt, 0.5 * (PI / 2 - C - math.log(2 * PI)))),
        SHIFTED, QUADRATURE),
    "eq44": _pair(sinh_mellin_integral, sinh_mellin_series, QUADRATURE, SHIFTED),
    "eq46": _pair(poisson_sine_mellin_integral, poisson_sine_mellin_series,
                                      QUADRATURE, TWISTED),
    "eq47": _pair(
        shifted_pair(lambda a: PI - a, lambda a: PI + a), reflected_sine(sin_alternating),
        SHIFTED, TWISTED),
    "eq48": _pair(
        shifted_pair(lambda a: a, lambda a: 2 * PI - a), reflected_sine(sin_plain),
        SHIFTED, TWISTED),
    "eq49a": _pair(
        half_order_shifted(lambda a: PI - a, lambda a: PI + a), half_order_sine(sin_alternating),
        SHIFTED, TWISTED),
    "eq49b": _pair(
        half_order_shifted(lambda a: a, lambda a: 2 * PI - a), half_order_sine(sin_plain),
        SHIFTED, TWISTED),
    "eq50a": _pair(
        rational_shifted(lambda m, n: n - m, lambda m, n: n + m),
        rational_reflected_sine(sin_alternating), SHIFTED, TWISTED),
    "eq50b": _pair(
        rational_shifted(lambda m, n: m, lambda m, n: 2 * n - m),
        rational_reflected_sine(sin_plain), SHIFTED, TWISTED),
    "eq51": _feq("eq51_beta"),
    "eq52": _feq("eq52_mod3"),
    "eq53a": _feq("eq53_f"),
    "eq53b": _feq("eq53_phi"),
    "eq54": _feq("eq54_F"),
    # log series at s = 1
    "eq55": _closed_pair(alternating_log_series_shifted,
                                                _mn_closed(alternating_log_series_gamma), SHIFTED),
    "eq55_ex1": _closed_pair(character_log_series(BETA4), beta_log_closed, SHIFTED),
    "eq55_ex1_prod": _closed_pair(exp_of(character_log_series(BETA4)),
                                              beta_log_product_closed, SHIFTED),
    "eq55_ex2a": _closed_pair(character_log_series(CHI3), chi3_log_closed, SHIFTED),
    "eq55_ex2a_prod": _closed_pair(exp_of(character_log_series(CHI3)),
                                               chi3_log_product_closed, SHIFTED),
    "eq55_ex2b": _closed_pair(character_log_series(F6), f6_log_closed, SHIFTED),
    "eq55_ex2b_prod": _closed_pair(exp_of(character_log_series(F6)),
                                             f6_log_product_closed, SHIFTED),
    "eq55_ex3a": _closed_pair(
        lambda b, t: _shifted({3.0: 1.0, 5.0: -1.0}, 8.0, 1.0, 1, t),
        eighth_alternating_closed, SHIFTED),
    "eq55_ex3b": _closed_pair(
        lambda b, t: _shifted({1.0: 1.0, 7.0: -1.0}, 8.0, 1.0, 1, t),
        eighth_plain_closed, SHIFTED),
    "eq56": _closed_pair(plain_log_series_shifted,
                                          _mn_closed(plain_log_series_gamma), SHIFTED),
    # log-sine integrals
    "eq60": _pair(sinh_excess_integral, poisson_excess_loglog_integral,
                                     QUADRATURE, "loglog quadrature"),
    "eq61": _closed_pair(sinh_excess_integral, sinh_excess_closed, QUADRATURE),
    "eq62": _pair(poisson_sine_loglog_integral, poisson_sine_loglog_mixed,
                                      QUADRATURE, "loglog quadrature"),
    "eq62b": _closed_pair(squared_loglog_integral, squared_loglog_closed,
                                         QUADRATURE),
    "eq63": _closed_pair(poisson_loglog_integral, poisson_loglog_closed,
                                        QUADRATURE),
    "eq64": _closed_pair(sin_log_alternating_series,
                                                     sin_log_alternating_closed, TWISTED),
    "eq65": _closed_pair(sin_log_plain_series, sin_log_plain_closed, TWISTED),
    "eq66": _closed_pair(sin_log_odd_series, sin_log_odd_closed, TWISTED),
    "eq64_ex1": _closed_pair(twisted_character(sin_alternating, PI / 2, 1.0),
                                             beta_log_closed, TWISTED),
    "eq64_ex1_prod": _closed_pair(
        exp_of(twisted_character(sin_alternating, PI / 2, 1.0)), beta_log_product_closed, TWISTED),
    "eq64_ex2a": _closed_pair(
        twisted_character(sin_alternating, PI / 3, 1 / SIN60), chi3_log_closed, TWISTED),
    "eq64_ex2a_prod": _closed_pair(
        exp_of(twisted_character(sin_alternating, PI / 3, 1 / SIN60)), chi3_log_product_closed,
        TWISTED),
    "eq65_ex2b": _closed_pair(
        twisted_character(sin_plain, PI / 3, 1 / SIN60), phi6_log_closed, TWISTED),
    "eq65_ex2b_prod": _closed_pair(
        exp_of(twisted_character(sin_plain, PI / 3, 1 / SIN60)), phi6_log_product_closed, TWISTED),
    "eq66_ex2c": _closed_pair(
        twisted_character(sin_odd, PI / 3, 1 / SIN60), f6_log_closed, TWISTED),
    "eq66_ex2c_prod": _closed_pair(
        exp_of(twisted_character(sin_odd, PI / 3, 1 / SIN60)), f6_log_product_closed, TWISTED),
    "eq66_ex3": _closed_pair(
        twisted_character(sin_odd, PI / 4, SQ2), f8_log_closed, TWISTED),
    "eq66_ex3_prod": _closed_pair(
        exp_of(twisted_character(sin_odd, PI / 4, SQ2)), f8_log_product_closed, TWISTED),
    # cosh transcendent
    "eq69": _closed_pair(sum_two_frakl_quadrature_vs_l, l_half_shift_pair_gamma,
                                      QUADRATURE),
    "eq70": _pair(frakl_by_quadrature, frakl_by_gamma, QUADRATURE, CLOSED),
    "eq71": _closed_pair(frakl_loglog_integral,
                                              _mn_closed(frakl_loglog_gamma), QUADRATURE),
    "eq72": _closed_pair(hexagonal_loglog_integral, hexagonal_loglog_closed,
                                          QUADRATURE),
    "eq74": _closed_pair(frakl_by_quadrature, frakl_by_cosine_gamma_sum,
                                         QUADRATURE),
    "eq75": _rel("rec_frakL_eq75"),
    "eq76": _rel("refl_frakL_eq76"),
    "eq77": _rel("rec_frakL_eq77"),
    "eq78": _rel("refl_frakL_eq78"),
    "eq79": _rel("halfpoint_frakL_eq79"),
    "eq80": _rel("mult_frakL_eq80"),
    # cosh kernels
    "eq83": _pair(cosh_ratio_mellin_integral, cosh_ratio_mellin_series,
                                    QUADRATURE, TWISTED),
    "eq85": _feq("eq85_Q"),
    "eq86": _pair(hexagonal_mellin_integral, hexagonal_mellin_series,
                                   QUADRATURE, "Mellin quadrature"),
    "eq89": _feq("eq89_R"),
    "eq90a": _pair(*_digamma_relation(_f8num, _f8den, lambda s: math.log(PI / 4)),
                             QUADRATURE, CLOSED),
    "eq90b": _pair(*_digamma_relation(
        _one, _hexden,
        lambda s: math.log(PI / 3) - 2 ** (s - 1) * math.log(2) / ((1 + 2 ** s) * (1 + 2 ** (s - 1)))),
        QUADRATURE, CLOSED),
    "eq91a": _pair(
        quarter_log_integral,
        half_order_times(F8, 0.5 * (math.log(PI / 16) - PI / 2 - C)), QUADRATURE, SHIFTED),
    "eq91b": _pair(
        _sqrt_log_integral(_one, _hexden),
        half_order_times(PHI6, 0.5 * (math.log(PI / 3) - PI / 2 - C - (5 - 2 * SQ2) * math.log(2))),
        QUADRATURE, SHIFTED),
    "eq92a": _pair(
        log_series_at_half(F8),
        scaled_sqrt_integral(_f8num, _f8den, 0.5 * (PI / 2 - C - math.log(PI))),
        SHIFTED, QUADRATURE),
    "eq92b": _pair(
        log_series_at_half(PHI6),
        scaled_sqrt_integral(_one, _hexden,
                             0.5 * (PI / 2 - C - 2 * SQ2 * math.log(2) - math.log(PI / 6))),
        SHIFTED, QUADRATURE),
    "eq93": _pair(cosh_mellin_integral, cosh_mellin_series, QUADRATURE, SHIFTED),
    "eq94": _pair(quartic_poisson_mellin_integral,
                                         quartic_poisson_mellin_series, QUADRATURE, TWISTED),
    "eq95": _pair(
        quarter_shifted(lambda a: {PI - a: 1.0, PI + a: 1.0, 3 * PI - a: -1.0, 3 * PI + a: -1.0}),
        quarter_reflected(cos_half_alternating), SHIFTED, TWISTED),
    "eq96": _pair(
        quarter_shifted(lambda a: {a: 1.0, 2 * PI - a: 1.0, 2 * PI + a: -1.0, 4 * PI - a: -1.0}),
        quarter_reflected(sin_half), SHIFTED, TWISTED),
    "eq97a": _feq("eq97_first"),
    "eq97b": _feq("eq97_second"),
    "eq98": _feq("eq98_T"),
    "eq99": _closed_pair(cosh_integral,
                                       lambda b: 0.5 / math.cos(float(b["a"]) / 2), QUADRATURE),
    "eq100": _closed_pair(quarter_first_log_series,
                                                   _mn_closed(quarter_first_log_gamma), SHIFTED),
    "eq101": _closed_pair(quarter_second_log_series,
                                                    _mn_closed(quarter_second_log_gamma), SHIFTED),
    "eq101_ex": _closed_pair(character_log_series(F8), f8_log_closed, SHIFTED),
    "eq101_ex_prod": _closed_pair(exp_of(character_log_series(F8)),
                                             f8_log_product_closed, SHIFTED),
    "eq101_ex3a": _closed_pair(character_log_series(PHI6), phi6_log_closed,
                                               SHIFTED),
    "eq101_ex3a_prod": _closed_pair(exp_of(character_log_series(PHI6)),
                                                phi6_log_product_closed, SHIFTED),
    "eq101_ex3b": _closed_pair(character_log_series(T12), t12_log_closed, SHIFTED),
    "eq101_ex3b_prod": _closed_pair(exp_of(character_log_series(T12)),
                                               t12_log_product_closed, SHIFTED),
    "ps_formula": _closed_pair(cos_half_log_series, cos_half_log_closed, TWISTED),
}
