"""Real special functions on the positive axis: Gamma, log-Gamma, digamma.

Gamma and log-Gamma delegate to the C library through :mod:`math`, which is
accurate to a few ulp.  The digamma function is computed here: upward
recurrence until the argument is large, then the asymptotic series

    psi(x) ~ log x - 1/(2x) - sum_k B_2k / (2k x^2k).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .errors import DomainError, InvalidArgumentError

EULER_GAMMA = 0.57721566490153286060651209008240243


@dataclass(frozen=True)
class SpecialFunctionAccuracy:
    """Requested absolute accuracy for the self-computed special functions."""

    target: float = 1e-15

    def __post_init__(self) -> None:
        if not (1e-15 <= self.target <= 1e-6):
            raise InvalidArgumentError(
                f"accuracy target must lie in [1e-15, 1e-6], got {self.target!r}"
            )

    @property
    def recurrence_threshold(self) -> float:
        # The asymptotic tail after the x^-14 term is below 1e-17 for x >= 10
        # and below 1e-11 for x >= 6.
        return 10.0 if self.target < 1e-10 else 6.0


_DEFAULT_ACCURACY = SpecialFunctionAccuracy()


def _check_positive(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"{name} requires a finite positive argument, got {x!r}")
    return x


def gamma(x: float) -> float:
    """Gamma function for x > 0.  Returns +inf once the result overflows."""
    x = _check_positive(x, "gamma")
    try:
        return math.gamma(x)
    except OverflowError:
        return math.inf


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0, finite for every finite x."""
    x = _check_positive(x, "log_gamma")
    return math.lgamma(x)


def digamma(x: float, accuracy: SpecialFunctionAccuracy | None = None) -> float:
    """Logarithmic derivative of Gamma for x > 0."""
    x = _check_positive(x, "digamma")
    acc = accuracy or _DEFAULT_ACCURACY
    return _kernels.digamma(x, acc.recurrence_threshold)


def euler_gamma() -> float:
    """The Euler-Mascheroni constant C = -psi(1)."""
    return EULER_GAMMA
