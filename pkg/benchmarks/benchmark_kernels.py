"""Timing comparison of the compiled and pure-Python kernel backends.

Run as: python3 benchmarks/benchmark_kernels.py [--size N] [--repeats K]
"""
import argparse
import math
import time

import numpy as np

from qknots import HALF_LINE, ExponentialKernel, FunctionWithDerivatives, knots_halfline
from qknots._kernels import _pykernels
from qknots.approx import build_taylor

try:
    from qknots._kernels import _ckernels
except ImportError:
    _ckernels = None


def _time(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=200_000, help="points per call")
    ap.add_argument("--repeats", type=int, default=5, help="timing repeats (best-of)")
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    xs = rng.uniform(-6.0, 6.0, size=args.size)

    kv = knots_halfline(ExponentialKernel(1.0, HALF_LINE), 2.0, 64)
    f = FunctionWithDerivatives(
        (lambda x: math.exp(-x), lambda x: -math.exp(-x), lambda x: math.exp(-x)),
        HALF_LINE,
    )
    P = build_taylor(f, kv, 2)
    xs_pos = rng.uniform(0.0, 12.0, size=args.size)
    knots_arr = np.asarray(kv.knots)
    anchors_arr = np.asarray(P.anchors)
    coeffs_arr = np.asarray(P.coeffs)

    benches = [
        ("erf_many", lambda mod: mod.erf_many(xs)),
        (
            "piecewise_many",
            lambda mod: mod.piecewise_many(knots_arr, anchors_arr, coeffs_arr, xs_pos),
        ),
    ]

    print(f"size={args.size} repeats={args.repeats} (best-of)")
    print(f"{'kernel':<16}{'python':>12}{'compiled':>12}{'speedup':>10}")
    for name, call in benches:
        t_py = _time(lambda: call(_pykernels), args.repeats)
        if _ckernels is None:
            print(f"{name:<16}{t_py * 1e3:>10.2f}ms{'n/a':>12}{'n/a':>10}")
            continue
        t_c = _time(lambda: call(_ckernels), args.repeats)
        a = np.asarray(call(_pykernels))
        b = np.asarray(call(_ckernels))
        worst = float(np.max(np.abs(a - b)))
        print(
            f"{name:<16}{t_py * 1e3:>10.2f}ms{t_c * 1e3:>10.2f}ms{t_py / t_c:>9.1f}x"
            f"   (max |diff| {worst:.1e})"
        )


if __name__ == "__main__":
    main()
