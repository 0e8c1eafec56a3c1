"""Time the compiled kernels against the pure-Python fallback.

Kernel timings call both implementations directly; the end-to-end line runs
the full catalog once per backend in a subprocess so that the backend
choice made at import time is honoured.

    python benchmarks/bench_kernels.py
"""
from __future__ import annotations

import os
import subprocess
import sys
import timeit

import numpy as np

from malmsten import _pycore

try:
    from malmsten import _ccore
except ImportError:
    _ccore = None

CHI = np.array([1.0, -1.0, 0.0], dtype=float)
W = np.array([1.0, -1.0], dtype=float)
B = np.array([0.25, 0.75], dtype=float)

CASES = {
    "digamma(0.3)": lambda m: m.digamma(0.3, 10.0),
    "periodic_sum 1e5": lambda m: m.periodic_sum(CHI, 0.5, 1, 1, 100_000),
    "shifted_sum 1e5": lambda m: m.shifted_sum(W, B, 1.0, 0.5, 1, 100_000),
    "twisted_sum 1e5": lambda m: m.twisted_sum(2.0, 1.0, 1.0, 0.5, 1, 0, 100_000),
}

CATALOG_RUN = ("import time; from malmsten import verify_all, BACKEND; t = time.perf_counter(); "
               "r = verify_all(); print(BACKEND, time.perf_counter() - t, all(x.pass_ for x in r))")


def best_of(fn, number: int) -> float:
    return min(timeit.repeat(fn, number=number, repeat=5)) / number


def catalog_time(pure: bool) -> str:
    env = dict(os.environ, MALMSTEN_PURE_PYTHON="1" if pure else "0", MALMSTEN_THREADS="1")
    out = subprocess.run([sys.executable, "-c", CATALOG_RUN], env=env, check=True,
                         capture_output=True, text=True).stdout.split()
    return f"{out[0]:<7} {float(out[1]):.3f} s  all pass: {out[2]}"


def main() -> None:
    if _ccore is None:
        print("compiled core not built; only the fallback is available")
    print(f"{'kernel':<20} {'python':>12} {'cython':>12} {'speedup':>8}")
    for name, call in CASES.items():
        number = 2000 if name.startswith("digamma") else 5
        t_py = best_of(lambda: call(_pycore), number)
        if _ccore is None:
            print(f"{name:<20} {t_py * 1e6:>10.1f}us")
            continue
        t_c = best_of(lambda: call(_ccore), number)
        print(f"{name:<20} {t_py * 1e6:>10.1f}us {t_c * 1e6:>10.1f}us {t_py / t_c:>7.1f}x")
    print("full catalog, 1 thread:")
    print("  " + catalog_time(pure=True))
    if _ccore is not None:
        print("  " + catalog_time(pure=False))


if __name__ == "__main__":
    main()
