"""Pure-Python kernels, used when the compiled core is unavailable.

Long sums are vectorised with numpy in fixed-size chunks; the chunk totals
are combined with math.fsum so the rounding error stays near the compiled
kernel's compensated summation.
"""
from __future__ import annotations

import math

import numpy as np

_CHUNK = 1 << 18


def digamma(x: float, threshold: float) -> float:
    acc = 0.0
    while x < threshold:
        acc -= 1.0 / x
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    series = inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (
        1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760 - inv2 / 12.0))))))
    return acc + math.log(x) - 0.5 * inv - series


def _g(x: np.ndarray, s: float, log_power: int) -> np.ndarray:
    v = x ** (-s)
    if log_power:
        v = v * np.log(x) ** log_power
    return v


def periodic_sum(coeffs, s: float, log_power: int, start: int, stop: int,
                 riesz_n: float = 0.0, riesz_order: int = 0) -> float:
    c = np.asarray(coeffs, dtype=float)
    p = len(c)
    parts = []
    for lo in range(start, stop + 1, _CHUNK):
        k = np.arange(lo, min(lo + _CHUNK, stop + 1), dtype=np.int64)
        w = c[(k - 1) % p]
        mask = w != 0.0
        k, w = k[mask].astype(float), w[mask]
        terms = w * _g(k, s, log_power)
        if riesz_order > 0:
            terms *= (1.0 - k / riesz_n) ** riesz_order
        parts.append(float(np.sum(terms)))
    return math.fsum(parts)


def shifted_sum(weights, shifts, step: float, s: float, log_power: int,
                count: int) -> float:
    parts = []
    for lo in range(0, count, _CHUNK):
        base = step * np.arange(lo, min(lo + _CHUNK, count), dtype=float)
        inner = np.zeros_like(base)
        for w, b in zip(weights, shifts):
            inner += w * _g(base + b, s, log_power)
        parts.append(float(np.sum(inner)))
    return math.fsum(parts)


def twisted_sum(theta: float, step: float, shift: float, s: float, log_power: int,
                start: int, stop: int, riesz_n: float = 0.0,
                riesz_order: int = 0) -> complex:
    re_parts, im_parts = [], []
    for lo in range(start, stop, _CHUNK):
        j = np.arange(lo, min(lo + _CHUNK, stop), dtype=float)
        g = _g(step * j + shift, s, log_power)
        if riesz_order > 0:
            g *= (1.0 - j / riesz_n) ** riesz_order
        ang = theta * j
        re_parts.append(float(np.sum(g * np.cos(ang))))
        im_parts.append(float(np.sum(g * np.sin(ang))))
    return complex(math.fsum(re_parts), math.fsum(im_parts))
