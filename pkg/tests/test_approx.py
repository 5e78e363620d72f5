import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _golden import INT_ABS_SIN_EXP, L2_X_GAUSS
from qknots import (
    HALF_LINE,
    REAL_LINE,
    ConstantOne,
    ExponentialKernel,
    FunctionWithDerivatives,
    GaussianDensity,
    Interval,
    OutOfSpan,
    Tolerance,
    approximation_error,
    build_lagrange,
    build_taylor,
    eval_piecewise,
    knots_halfline,
    knots_realline,
    smoothness_seminorm,
    weighted_Lq_norm,
)

TIGHT = Tolerance(rel=1e-12, abs=1e-16)


def exp_knots(n=8):
    return knots_halfline(ExponentialKernel(1.0, HALF_LINE), 1.0, n)


class TestWeightedNorm:
    def test_identity_against_gaussian(self):
        got = weighted_Lq_norm(lambda x: x, GaussianDensity(1.0), 2.0, REAL_LINE, TIGHT)
        assert got == pytest.approx(L2_X_GAUSS, rel=1e-10)

    def test_unit_function_against_density(self):
        got = weighted_Lq_norm(lambda x: 1.0, GaussianDensity(1.0), 1.0, REAL_LINE, TIGHT)
        assert got == pytest.approx(1.0, rel=1e-10)

    def test_sup_norm(self):
        got = weighted_Lq_norm(lambda x: x, ExponentialKernel(1.0, HALF_LINE), math.inf, HALF_LINE)
        assert got == pytest.approx(math.exp(-1.0), rel=1e-6)


class TestSeminorm:
    def test_exp_decay_r1_sup(self):
        f = FunctionWithDerivatives((lambda x: math.exp(-x), lambda x: -math.exp(-x)))
        got = smoothness_seminorm(f, ConstantOne(HALF_LINE), math.inf, HALF_LINE, r=1)
        assert got == pytest.approx(1.0, rel=1e-6)

    def test_sine_r2_weighted_L1(self):
        f = FunctionWithDerivatives((math.sin, math.cos, lambda x: -math.sin(x)))
        got = smoothness_seminorm(f, ExponentialKernel(1.0, HALF_LINE), 1.0, HALF_LINE, TIGHT, r=2)
        assert got == pytest.approx(INT_ABS_SIN_EXP, rel=1e-9)

    def test_low_degree_polynomial_vanishes(self):
        f = FunctionWithDerivatives((lambda x: 3.0 * x + 2.0, lambda x: 3.0, lambda x: 0.0))
        got = smoothness_seminorm(f, ConstantOne(HALF_LINE), 1.0, Interval(0.0, 5.0), r=2)
        assert got == pytest.approx(0.0, abs=1e-12)


class TestTaylor:
    def test_exact_on_low_degree(self):
        # degree r-1 polynomials are reproduced exactly by order-r pieces
        f = FunctionWithDerivatives(
            (lambda x: 2.0 * x + 1.0, lambda x: 2.0, lambda x: 0.0)
        )
        P = build_taylor(f, exp_knots(), 2)
        for x in (0.05, 0.4, 1.1, 2.7, 6.0):
            assert eval_piecewise(P, x) == pytest.approx(2.0 * x + 1.0, rel=1e-14)

    def test_matches_function_at_anchors(self):
        f = FunctionWithDerivatives((math.sin, math.cos))
        P = build_taylor(f, exp_knots(), 1)
        for a in P.anchors:
            if math.isfinite(a):
                assert eval_piecewise(P, a) == pytest.approx(math.sin(a), abs=1e-15)

    def test_realline_symmetric(self):
        kv = knots_realline(ExponentialKernel(1.0), 1.0, 4)
        f = FunctionWithDerivatives((lambda x: x * x, lambda x: 2.0 * x))
        P = build_taylor(f, kv, 1)
        assert eval_piecewise(P, 0.9) == pytest.approx(eval_piecewise(P, -0.9), rel=1e-13)

    def test_out_of_span(self):
        f = FunctionWithDerivatives((math.sin, math.cos))
        P = build_taylor(f, exp_knots(), 1)
        with pytest.raises(OutOfSpan):
            eval_piecewise(P, -0.5)


class TestLagrange:
    def test_interpolates(self):
        P = build_lagrange(math.sin, exp_knots(), 3)
        for x in (0.1, 0.9):
            assert eval_piecewise(P, x) == pytest.approx(math.sin(x), abs=5e-3)
        # the unbounded tail cell extrapolates from synthetic nodes
        assert eval_piecewise(P, 2.2) == pytest.approx(math.sin(2.2), abs=5e-2)

    def test_exact_on_low_degree(self):
        g = lambda x: x * x - 0.5 * x + 1.0
        P = build_lagrange(g, exp_knots(), 3)
        for x in (0.05, 0.4, 1.1, 2.7):
            assert eval_piecewise(P, x) == pytest.approx(g(x), rel=1e-12)


class TestApproximationError:
    def test_decreases_with_n(self):
        f = FunctionWithDerivatives((lambda x: math.exp(-x), lambda x: -math.exp(-x)))
        rho = ExponentialKernel(1.0, HALF_LINE)
        errs = []
        for n in (4, 16, 64):
            kv = knots_halfline(ExponentialKernel(0.5, HALF_LINE), 1.0, n)
            P = build_taylor(f, kv, 1)
            errs.append(approximation_error(lambda x: math.exp(-x), P, rho, 1.0))
        assert errs[0] > errs[1] > errs[2]
        assert errs[2] < errs[0] / 8.0


@given(x=st.floats(min_value=1e-3, max_value=8.0))
@settings(max_examples=60, deadline=None)
def test_taylor_constant_reproduced(x):
    f = FunctionWithDerivatives((lambda t: 4.5, lambda t: 0.0))
    P = build_taylor(f, exp_knots(), 1)
    assert eval_piecewise(P, x) == 4.5
