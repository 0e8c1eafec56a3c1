# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: digamma and long compensated partial sums."""

from libc.math cimport log, pow, cos, sin, fabs


cdef inline void _neumaier(double *s, double *c, double x) noexcept nogil:
    cdef double t = s[0] + x
    if fabs(s[0]) >= fabs(x):
        c[0] += (s[0] - t) + x
    else:
        c[0] += (x - t) + s[0]
    s[0] = t


cdef inline double _g(double x, double s, int q) noexcept nogil:
    cdef double v = pow(x, -s)
    cdef double lx
    if q > 0:
        lx = log(x)
        for _ in range(q):
            v *= lx
    return v


cpdef double digamma(double x, double threshold):
    cdef double acc = 0.0
    cdef double inv, inv2, series
    while x < threshold:
        acc -= 1.0 / x
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    series = inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (
        1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760 - inv2 / 12.0))))))
    return acc + log(x) - 0.5 * inv - series


def periodic_sum(double[::1] coeffs, double s, int log_power, long long start,
                 long long stop, double riesz_n=0.0, int riesz_order=0):
    cdef Py_ssize_t p = coeffs.shape[0]
    cdef long long k
    cdef double tot = 0.0, comp = 0.0, c, w
    cdef Py_ssize_t r
    with nogil:
        r = <Py_ssize_t>((start - 1) % p)
        for k in range(start, stop + 1):
            c = coeffs[r]
            r += 1
            if r == p:
                r = 0
            if c == 0.0:
                continue
            w = c * _g(<double>k, s, log_power)
            if riesz_order > 0:
                w *= pow(1.0 - k / riesz_n, riesz_order)
            _neumaier(&tot, &comp, w)
    return tot + comp


def shifted_sum(double[::1] weights, double[::1] shifts, double step, double s,
                int log_power, long long count):
    cdef Py_ssize_t nr = weights.shape[0]
    cdef long long j
    cdef Py_ssize_t r
    cdef double tot = 0.0, comp = 0.0, base, inner
    with nogil:
        for j in range(count):
            base = step * j
            inner = 0.0
            for r in range(nr):
                inner += weights[r] * _g(base + shifts[r], s, log_power)
            _neumaier(&tot, &comp, inner)
    return tot + comp


def twisted_sum(double theta, double step, double shift, double s, int log_power,
                long long start, long long stop, double riesz_n=0.0, int riesz_order=0):
    cdef long long j
    cdef double re = 0.0, cre = 0.0, im = 0.0, cim = 0.0, g, ang
    with nogil:
        for j in range(start, stop):
            g = _g(step * j + shift, s, log_power)
            if riesz_order > 0:
                g *= pow(1.0 - j / riesz_n, riesz_order)
            ang = theta * j
            _neumaier(&re, &cre, g * cos(ang))
            _neumaier(&im, &cim, g * sin(ang))
    return complex(re + cre, im + cim)
