"""Pure-Python/numpy fallback kernels.

Same contracts as the compiled backend in _ckernels.pyx; selected by
qknots._kernels when the extension is unavailable.
"""
import math

import numpy as np

_TWO_OVER_SQRT_PI = 1.1283791670955126
_INV_SQRT_PI = 0.5641895835477563


def erf_scalar(x):
    """erf with absolute error below 1e-14 and exact odd symmetry.

    Positive-term scaled Maclaurin series for |x| <= 3 (no cancellation),
    Lentz continued fraction for the complementary function beyond.
    """
    if x != x:
        return x
    if x == 0.0:
        return 0.0
    ax = abs(x)
    sign = 1.0 if x > 0.0 else -1.0
    if ax == math.inf:
        return sign
    if ax <= 3.0:
        # erf(a) = (2/sqrt(pi)) a e^{-a^2} sum_n (2a^2)^n / (1*3*...*(2n+1))
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
        return sign * _TWO_OVER_SQRT_PI * ax * math.exp(-ax * ax) * total
    # erfc(a) = (e^{-a^2}/sqrt(pi)) / (a + (1/2)/(a + 1/(a + (3/2)/(a + ...))))
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
        if abs(delta - 1.0) < 1e-18 or n > 300:
            break
    erfc = _INV_SQRT_PI * math.exp(-ax * ax) / f
    return sign * (1.0 - erfc)


def erf_many(xs):
    out = np.empty(xs.shape[0], dtype=np.float64)
    for i in range(xs.shape[0]):
        out[i] = erf_scalar(xs[i])
    return out


def piecewise_scalar(knots, anchors, coeffs, x):
    """Evaluate a piecewise polynomial at one point.

    knots: (m+1,) increasing, may start/end with +-inf; anchors: (m,) finite;
    coeffs: (m, deg+1) ascending degree. Cells are left-closed/right-open;
    a finite top knot belongs to the last cell. Returns NaN out of span.
    """
    m = anchors.shape[0]
    idx = int(np.searchsorted(knots, x, side="right")) - 1
    if idx == m and x == knots[m]:
        idx = m - 1
    if idx < 0 or idx >= m:
        return math.nan
    t = x - anchors[idx]
    row = coeffs[idx]
    acc = row[-1]
    for k in range(row.shape[0] - 2, -1, -1):
        acc = acc * t + row[k]
    return acc


def piecewise_many(knots, anchors, coeffs, xs):
    m = anchors.shape[0]
    idx = np.searchsorted(knots, xs, side="right") - 1
    top = np.isfinite(knots[m]) & (xs == knots[m])
    idx[top] = m - 1
    oob = (idx < 0) | (idx >= m)
    safe = np.clip(idx, 0, m - 1)
    t = xs - anchors[safe]
    acc = coeffs[safe, -1].copy()
    for k in range(coeffs.shape[1] - 2, -1, -1):
        acc = acc * t + coeffs[safe, k]
    acc[oob] = np.nan
    return acc
