"""The transcendents L(a, x) and its cosh analogue, written here as FL(a, x).

    L(a, x)  = int_0^inf sinh(a u) / sinh(pi u) * log(x^2 + u^2) du
    FL(a, x) = int_0^inf cosh(a u) / cosh(pi u) * log(x^2 + u^2) du

for 0 < a < pi and x >= 0.  At a rational angle a = m pi / n both reduce to
finite sums of log-Gamma values.  The branch depends on the parity of m + n;
with s_i = (-1)^(i-1) sin(i a) and c_i = (-1)^(i-1) cos((i - 1/2) a):

  m + n odd:   L = tan(a/2) log 2n + 2 sum_{i<n} s_i log[G((x+n+i)/2n) / G((x+i)/2n)]
  m + n even:  L = tan(a/2) log n  + 2 sum_{i<=K} s_i log[G((x+n-i)/n) / G((x+i)/n)]

with K = (n - 1)/2, and similarly for FL with sec(a/2), c_i and the
arguments shifted by 1/2 (the odd sum runs to i = n).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import BranchMismatchError, DomainError, SingularArgumentError
from .quad import EndpointHint, EvalResult, combine, exact, integrate_halfline
from .sfcore import log_gamma

ODD = "odd"
EVEN = "even"
_SINGULAR_RADIUS = 1e-8


@dataclass(frozen=True)
class RationalAngle:
    """The angle a = m pi / n with 0 < m < n coprime."""

    m: int
    n: int
    value: float = field(init=False)
    parity: str = field(init=False)

    def __post_init__(self) -> None:
        m, n = self.m, self.n
        if not (isinstance(m, int) and isinstance(n, int)):
            raise DomainError("m and n must be integers")
        if not (0 < m < n):
            raise DomainError(f"need 0 < m < n, got m={m}, n={n}")
        if math.gcd(m, n) != 1:
            raise DomainError(f"m={m} and n={n} are not coprime")
        object.__setattr__(self, "value", m * math.pi / n)
        object.__setattr__(self, "parity", ODD if (m + n) % 2 else EVEN)

    def s(self, i: int) -> float:
        return (-1) ** (i - 1) * math.sin(i * self.value)

    def c(self, i: int) -> float:
        return (-1) ** (i - 1) * math.cos((i - 0.5) * self.value)

    @property
    def half_count(self) -> int:
        return (self.n - 1) // 2


@dataclass(frozen=True)
class TranscendentPoint:
    angle: RationalAngle | float
    x: float

    def __post_init__(self) -> None:
        a = self.angle.value if isinstance(self.angle, RationalAngle) else self.angle
        _check_a(a)
        _check_x(self.x)

    @property
    def a(self) -> float:
        return self.angle.value if isinstance(self.angle, RationalAngle) else float(self.angle)


def _check_a(a: float) -> float:
    a = float(a)
    if not (0.0 < a < math.pi):
        raise DomainError(f"a must lie in (0, pi), got {a!r}")
    return a


def _check_x(x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"x must be finite and >= 0, got {x!r}")
    return x


def _angle(angle: RationalAngle | tuple[int, int]) -> RationalAngle:
    return angle if isinstance(angle, RationalAngle) else RationalAngle(*angle)


# ---------------------------------------------------------------------------
# integrals

def _log_x2_u2(x: float) -> Callable[[float], float]:
    if x == 0.0:
        return lambda u: 2.0 * math.log(u)
    x2 = x * x
    return lambda u: math.log(x2 + u * u)


def l_integral(a: float, x: float, target_abs_error: float = 1e-12) -> EvalResult:
    a, x = _check_a(a), _check_x(x)
    lg = _log_x2_u2(x)
    decay = math.pi - a

    def f(u: float) -> float:
        # sinh(au)/sinh(pi u) without overflow
        ratio = math.exp(-decay * u) * math.expm1(-2 * a * u) / math.expm1(-2 * math.pi * u)
        return ratio * lg(u)

    hint = EndpointHint.exp_decay(decay, "log_singular" if x == 0 else "smooth")
    return integrate_halfline(f, hint, target_abs_error)


def frakl_integral(a: float, x: float, target_abs_error: float = 1e-12) -> EvalResult:
    a, x = _check_a(a), _check_x(x)
    lg = _log_x2_u2(x)
    decay = math.pi - a

    def f(u: float) -> float:
        ratio = math.exp(-decay * u) * (1 + math.exp(-2 * a * u)) / (1 + math.exp(-2 * math.pi * u))
        return ratio * lg(u)

    hint = EndpointHint.exp_decay(decay, "log_singular" if x == 0 else "smooth")
    return integrate_halfline(f, hint, target_abs_error)


# ---------------------------------------------------------------------------
# closed forms

def l_closed(angle: RationalAngle | tuple[int, int], x: float) -> float:
    ang, x = _angle(angle), _check_x(x)
    n, a = ang.n, ang.value
    terms = []
    if ang.parity == ODD:
        terms.append(math.tan(a / 2) * math.log(2 * n))
        for i in range(1, n):
            terms.append(2 * ang.s(i) * (log_gamma((x + n + i) / (2 * n))
                                         - log_gamma((x + i) / (2 * n))))
    else:
        terms.append(math.tan(a / 2) * math.log(n))
        for i in range(1, ang.half_count + 1):
            terms.append(2 * ang.s(i) * (log_gamma((x + n - i) / n)
                                         - log_gamma((x + i) / n)))
    return math.fsum(terms)


def frakl_closed(angle: RationalAngle | tuple[int, int], x: float) -> float:
    ang, x = _angle(angle), _check_x(x)
    n, a = ang.n, ang.value
    terms = []
    if ang.parity == ODD:
        terms.append(math.log(2 * n) / math.cos(a / 2))
        for i in range(1, n + 1):
            terms.append(2 * ang.c(i) * (log_gamma((x + n + i - 0.5) / (2 * n))
                                         - log_gamma((x + i - 0.5) / (2 * n))))
    else:
        terms.append(math.log(n) / math.cos(a / 2))
        for i in range(1, ang.half_count + 1):
            terms.append(2 * ang.c(i) * (log_gamma((x + n - i + 0.5) / n)
                                         - log_gamma((x + i - 0.5) / n)))
    return math.fsum(terms)


# ---------------------------------------------------------------------------
# structural relations

@dataclass(frozen=True)
class RelationSides:
    """LHS = constant + sum coef * T(x_k) with T in {L, FL}; RHS elementary."""

    lhs_terms: tuple[tuple[float, str, float], ...]
    lhs_constant: float
    rhs: float


def _log_positive(v: float) -> float:
    if not v > 0.0:
        raise DomainError(f"relation evaluated outside its domain (log of {v!r})")
    return math.log(v)


def _guard(points, where: str) -> None:
    for p in points:
        if abs(p - round(p)) < _SINGULAR_RADIUS:
            raise SingularArgumentError(f"{where}: 0*inf point at {p!r}")


def _xcot(d: float, n: int) -> float:
    """d * cot(d pi / 2n)."""
    return d / math.tan(d * math.pi / (2 * n))


def _rec_l_odd(ang, x, r):
    rhs = 2 * math.fsum(ang.s(i) * math.log(x + i) for i in range(1, ang.n))
    return RelationSides(((1.0, "L", x + ang.n), (1.0, "L", x)), 0.0, rhs)


def _refl_l_odd(ang, x, r):
    n = ang.n
    _guard([(x - i) / (2 * n) for i in range(1, n)], "reflection")
    rhs = 2 * math.fsum(ang.s(i) * _log_positive(_xcot(x - i, n)) for i in range(1, n))
    return RelationSides(((1.0, "L", x), (1.0, "L", abs(n - x))), 0.0, rhs)


def _half_l(ang, x, r):
    n = ang.n
    terms = []
    for i in range(1, n):
        d = n / 2 - i
        if 2 * i == n:
            terms.append(ang.s(i) * math.log(2 * n / math.pi))
        else:
            terms.append(ang.s(i) * _log_positive(d / math.tan(math.pi / 4 - i * math.pi / (2 * n))))
    return RelationSides(((1.0, "L", n / 2),), 0.0, math.fsum(terms))


def _rec_l_even(ang, x, r):
    n, k = ang.n, ang.half_count
    rhs = 2 * math.fsum(ang.s(i) * math.log((x + n - i) / (x + i)) for i in range(1, k + 1))
    return RelationSides(((1.0, "L", x + n), (-1.0, "L", x)), 0.0, rhs)


def _refl_l_even(ang, x, r):
    n, k = ang.n, ang.half_count
    pts = []
    for i in range(1, k + 1):
        pts += [(x - i) / n, (x + i) / n, (n - x - i) / n]
    _guard(pts, "reflection")
    terms = []
    for i in range(1, k + 1):
        v = ((x - i) / (n - x - i) * math.sin((x + i) * math.pi / n)
             / math.sin((x - i) * math.pi / n))
        terms.append(ang.s(i) * _log_positive(v))
    return RelationSides(((1.0, "L", x), (-1.0, "L", abs(n - x))), 0.0, 2 * math.fsum(terms))


def _mult_l(ang, x, r):
    n, a = ang.n, ang.value
    lr = math.log(r)
    if ang.parity == ODD:
        lhs = tuple((1.0, "L", x + 2 * n * j / r) for j in range(r))
        terms = [r * math.tan(a / 2) * math.log(2 * n)]
        for i in range(1, n):
            terms.append(2 * ang.s(i) * (log_gamma(r / 2 + r * (x + i) / (2 * n))
                                         - r / 2 * lr - log_gamma(r * (x + i) / (2 * n))))
    else:
        lhs = tuple((1.0, "L", x + n * j / r) for j in range(r))
        terms = [r * math.tan(a / 2) * math.log(n)]
        for i in range(1, ang.half_count + 1):
            terms.append(2 * ang.s(i) * (log_gamma(r * (x + n - i) / n)
                                         - (r - 2 * r * i / n) * lr - log_gamma(r * (x + i) / n)))
    return RelationSides(lhs, 0.0, math.fsum(terms))


def _identity_tan(ang, x, r):
    rhs = math.fsum(ang.s(i) for i in range(1, ang.n))
    return RelationSides((), math.tan(ang.value / 2), rhs)


def _rec_f_odd(ang, x, r):
    rhs = 2 * math.fsum(ang.c(i) * math.log(x + i - 0.5) for i in range(1, ang.n + 1))
    return RelationSides(((1.0, "F", x + ang.n), (1.0, "F", x)), 0.0, rhs)


def _refl_f_odd(ang, x, r):
    n = ang.n
    _guard([(x - i + 0.5) / (2 * n) for i in range(1, n + 1)], "reflection")
    rhs = 2 * math.fsum(ang.c(i) * _log_positive(_xcot(x - i + 0.5, n))
                        for i in range(1, n + 1))
    return RelationSides(((1.0, "F", x), (1.0, "F", abs(n - x))), 0.0, rhs)


def _half_f(ang, x, r):
    n = ang.n
    terms = []
    for i in range(1, n + 1):
        d = (n + 1) / 2 - i
        if 2 * i == n + 1:
            terms.append(ang.c(i) * math.log(2 * n / math.pi))
        else:
            cot = 1 / math.tan(math.pi / 4 - (i - 0.5) * math.pi / (2 * n))
            terms.append(ang.c(i) * _log_positive(d * cot))
    return RelationSides(((1.0, "F", n / 2),), 0.0, math.fsum(terms))


def _rec_f_even(ang, x, r):
    n, k = ang.n, ang.half_count
    rhs = 2 * math.fsum(ang.c(i) * math.log((x + n + 0.5 - i) / (x + i - 0.5))
                        for i in range(1, k + 1))
    return RelationSides(((1.0, "F", x + n), (-1.0, "F", x)), 0.0, rhs)


def _refl_f_even(ang, x, r):
    n, k = ang.n, ang.half_count
    pts = []
    for i in range(1, k + 1):
        pts += [(x - i + 0.5) / n, (x + i - 0.5) / n, (n - x - i + 0.5) / n]
    _guard(pts, "reflection")
    terms = []
    for i in range(1, k + 1):
        v = ((x - i + 0.5) / (n - x - i + 0.5) * math.sin((x + i - 0.5) * math.pi / n)
             / math.sin((x - i + 0.5) * math.pi / n))
        terms.append(ang.c(i) * _log_positive(v))
    return RelationSides(((1.0, "F", x), (-1.0, "F", abs(n - x))), 0.0, 2 * math.fsum(terms))


def _mult_f(ang, x, r):
    n, a = ang.n, ang.value
    lr = math.log(r)
    sec = 1 / math.cos(a / 2)
    if ang.parity == ODD:
        lhs = tuple((1.0, "F", x + 2 * n * j / r) for j in range(r))
        terms = [r * sec * math.log(2 * n)]
        for i in range(1, n + 1):
            terms.append(2 * ang.c(i) * (log_gamma(r * (x + n + i - 0.5) / (2 * n))
                                         - r / 2 * lr - log_gamma(r * (x + i - 0.5) / (2 * n))))
    else:
        lhs = tuple((1.0, "F", x + n * j / r) for j in range(r))
        terms = [r * sec * math.log(n)]
        for i in range(1, ang.half_count + 1):
            terms.append(2 * ang.c(i) * (log_gamma(r * (x + n - i + 0.5) / n)
                                         - r * (n - 2 * i + 1) / n * lr
                                         - log_gamma(r * (x + i - 0.5) / n)))
    return RelationSides(lhs, 0.0, math.fsum(terms))


# kind -> (required parity or None, builder, needs r, only angle (1, 2))
_RELATIONS: dict[str, tuple[str | None, Callable, bool, bool]] = {
    "rec_L_eq14": (ODD, _rec_l_odd, False, True),
    "refl_L_eq15": (ODD, _refl_l_odd, False, True),
    "rec_L_eq21": (ODD, _rec_l_odd, False, False),
    "refl_L_eq22": (ODD, _refl_l_odd, False, False),
    "halfpoint_L_eq23": (ODD, _half_l, False, False),
    "rec_L_eq24": (EVEN, _rec_l_even, False, False),
    "refl_L_eq25": (EVEN, _refl_l_even, False, False),
    "mult_L_eq26": (None, _mult_l, True, False),
    "identity_eq19": (ODD, _identity_tan, False, False),
    "rec_frakL_eq75": (ODD, _rec_f_odd, False, False),
    "refl_frakL_eq76": (ODD, _refl_f_odd, False, False),
    "halfpoint_frakL_eq79": (ODD, _half_f, False, False),
    "rec_frakL_eq77": (EVEN, _rec_f_even, False, False),
    "refl_frakL_eq78": (EVEN, _refl_f_even, False, False),
    "mult_frakL_eq80": (None, _mult_f, True, False),
}

RELATION_KINDS = tuple(_RELATIONS)


def relation_sides(kind: str, angle: RationalAngle | tuple[int, int], x: float = 0.0,
                   r: int | None = None) -> RelationSides:
    """Decompose a structural relation into transcendent values and an elementary side."""
    try:
        parity, build, needs_r, only_quarter = _RELATIONS[kind]
    except KeyError:
        raise DomainError(f"unknown relation kind {kind!r}") from None
    ang = _angle(angle)
    x = _check_x(x)
    if only_quarter and (ang.m, ang.n) != (1, 2):
        raise BranchMismatchError(f"{kind} is stated for the angle pi/2 only")
    if parity is not None and ang.parity != parity:
        raise BranchMismatchError(
            f"{kind} needs m+n {parity}, angle {ang.m}pi/{ang.n} is {ang.parity}")
    if needs_r:
        if r is None or int(r) != r or r < 2:
            raise DomainError("multiplication relations need an integer r >= 2")
        r = int(r)
    return build(ang, x, r)


def relation_residual(kind: str, angle: RationalAngle | tuple[int, int], x: float = 0.0,
                      r: int | None = None) -> float:
    """|LHS - RHS| of a structural relation with L and FL from the closed forms."""
    ang = _angle(angle)
    sides = relation_sides(kind, ang, x, r)
    closed = {"L": l_closed, "F": frakl_closed}
    lhs = sides.lhs_constant + math.fsum(c * closed[t](ang, xv) for c, t, xv in sides.lhs_terms)
    return abs(lhs - sides.rhs)


def relation_lhs_by_quadrature(sides: RelationSides, a: float,
                               target_abs_error: float = 1e-12) -> EvalResult:
    """The transcendent side of a relation, every value from its integral."""
    integral = {"L": l_integral, "F": frakl_integral}
    parts = [(c, integral[t](a, xv, target_abs_error)) for c, t, xv in sides.lhs_terms]
    if not parts:
        return exact(sides.lhs_constant)
    return combine(parts, sides.lhs_constant)
