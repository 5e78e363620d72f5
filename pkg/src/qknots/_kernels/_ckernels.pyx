# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: erf and piecewise-polynomial evaluation.

Mirrors _pykernels.py exactly; qknots._kernels selects whichever imports.
"""
import numpy as np

cimport numpy as cnp
from libc.math cimport exp, fabs, INFINITY, NAN

cnp.import_array()

cdef double TWO_OVER_SQRT_PI = 1.1283791670955126
cdef double INV_SQRT_PI = 0.5641895835477563


cdef double _erf(double x) nogil:
    cdef double ax, sign, a2, term, total, k, f, c, d, an, delta, erfc
    cdef int n
    if x != x:
        return x
    if x == 0.0:
        return 0.0
    ax = fabs(x)
    sign = 1.0 if x > 0.0 else -1.0
    if ax == INFINITY:
        return sign
    if ax <= 3.0:
        a2 = 2.0 * ax * ax
        term = 1.0
        total = 1.0
        k = 3.0
        while True:
            term *= a2 / k
            total += term
            k += 2.0
            if term < total * 1e-18:
                break
        return sign * TWO_OVER_SQRT_PI * ax * exp(-ax * ax) * total
    f = ax
    c = ax
    d = 0.0
    n = 1
    while True:
        an = 0.5 * n
        d = 1.0 / (ax + an * d)
        c = ax + an / c
        delta = c * d
        f *= delta
        n += 1
        if fabs(delta - 1.0) < 1e-18 or n > 300:
            break
    erfc = INV_SQRT_PI * exp(-ax * ax) / f
    return sign * (1.0 - erfc)


def erf_scalar(double x):
    return _erf(x)


def erf_many(double[::1] xs):
    cdef Py_ssize_t i, n = xs.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    with nogil:
        for i in range(n):
            out[i] = _erf(xs[i])
    return out_arr


cdef Py_ssize_t _locate(double[::1] knots, Py_ssize_t m, double x) nogil:
    # bisect-right over knots, then map to a cell index; -1 when out of span
    cdef Py_ssize_t lo = 0, hi = m + 1, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if x < knots[mid]:
            hi = mid
        else:
            lo = mid + 1
    lo -= 1
    if lo == m and x == knots[m]:
        lo = m - 1
    if lo < 0 or lo >= m:
        return -1
    return lo


cdef double _horner(double[:, ::1] coeffs, Py_ssize_t i, double t) nogil:
    cdef Py_ssize_t k = coeffs.shape[1] - 1
    cdef double acc = coeffs[i, k]
    while k > 0:
        k -= 1
        acc = acc * t + coeffs[i, k]
    return acc


def piecewise_scalar(double[::1] knots, double[::1] anchors, double[:, ::1] coeffs, double x):
    cdef Py_ssize_t m = anchors.shape[0]
    cdef Py_ssize_t i = _locate(knots, m, x)
    if i < 0:
        return NAN
    return _horner(coeffs, i, x - anchors[i])


def piecewise_many(double[::1] knots, double[::1] anchors, double[:, ::1] coeffs, double[::1] xs):
    cdef Py_ssize_t m = anchors.shape[0]
    cdef Py_ssize_t j, i, n = xs.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    with nogil:
        for j in range(n):
            i = _locate(knots, m, xs[j])
            out[j] = NAN if i < 0 else _horner(coeffs, i, xs[j] - anchors[i])
    return out_arr
