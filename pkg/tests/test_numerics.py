import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import _golden as G
from qknots import (
    DEFAULT_TOL,
    HALF_LINE,
    REAL_LINE,
    DomainError,
    Interval,
    NoSignChange,
    ParameterOutOfRange,
    Tolerance,
    erf,
    find_root,
    integrate,
    minimize_scalar,
    sup_on,
)


class TestInterval:
    def test_orders_endpoints(self):
        iv = Interval(-2.0, 3.0)
        assert iv.lo == -2.0 and iv.hi == 3.0

    @pytest.mark.parametrize("lo,hi", [(1.0, 1.0), (2.0, -1.0), (math.nan, 0.0)])
    def test_rejects_degenerate(self, lo, hi):
        with pytest.raises(ParameterOutOfRange):
            Interval(lo, hi)

    def test_named_lines(self):
        assert REAL_LINE.lo == -math.inf and REAL_LINE.hi == math.inf
        assert HALF_LINE.lo == 0.0 and HALF_LINE.hi == math.inf


class TestTolerance:
    def test_defaults_valid(self):
        assert DEFAULT_TOL.rel >= 1e-14

    def test_rejects_too_tight(self):
        with pytest.raises(ParameterOutOfRange):
            Tolerance(rel=1e-15)


class TestIntegrate:
    def test_polynomial_on_bounded(self):
        r = integrate(lambda x: x * x, Interval(0.0, 1.0))
        assert abs(r.value - 1.0 / 3.0) < 1e-12

    def test_exponential_half_line(self):
        r = integrate(lambda x: math.exp(-x), HALF_LINE)
        assert abs(r.value - 1.0) < 1e-10

    def test_gaussian_real_line(self):
        r = integrate(lambda x: math.exp(-x * x), REAL_LINE)
        assert abs(r.value - math.sqrt(math.pi)) < 1e-10

    def test_result_is_float(self):
        r = integrate(lambda x: 1.0, Interval(0.0, 2.0))
        assert isinstance(r, float)
        assert abs(float(r) - 2.0) < 1e-13

    def test_left_tail(self):
        r = integrate(lambda x: math.exp(x), Interval(-math.inf, 0.0))
        assert abs(r.value - 1.0) < 1e-10

    def test_nonfinite_integrand_rejected(self):
        with pytest.raises(DomainError):
            integrate(lambda x: math.nan, Interval(0.0, 1.0))


class TestFindRoot:
    TIGHT = Tolerance(rel=1e-13, abs=1e-300)

    def test_cosine(self):
        r = find_root(math.cos, Interval(0.0, 3.0), self.TIGHT)
        assert abs(r - math.pi / 2.0) < 1e-12

    def test_cubic_reference_root(self):
        g = lambda c: c * (c - 1.0) ** 2 - 1.0
        r = find_root(g, Interval(1.0, 3.0), self.TIGHT)
        assert abs(r - G.ROOT_C_CM1_SQ) < 1e-12

    def test_no_sign_change(self):
        with pytest.raises(NoSignChange):
            find_root(lambda x: 1.0 + x * x, Interval(-1.0, 1.0))


class TestMinimizeScalar:
    def test_parabola(self):
        x, v = minimize_scalar(lambda x: (x - 2.0) ** 2 + 5.0, Interval(-10.0, 10.0))
        assert abs(x - 2.0) < 1e-6
        assert abs(v - 5.0) < 1e-12


class TestSupOn:
    def test_bounded(self):
        v = sup_on(lambda x: -(x - 0.3) ** 2 + 1.5, Interval(0.0, 1.0))
        assert abs(v - 1.5) < 1e-10

    def test_real_line(self):
        v = sup_on(lambda x: math.exp(-((x - 3.0) ** 2)), REAL_LINE)
        assert abs(v - 1.0) < 1e-10


class TestErf:
    def test_reference_points(self):
        for x, want in G.ERF_TABLE:
            assert abs(erf(x) - want) <= 1e-14, x

    def test_odd_symmetry_exact(self):
        for x, _ in G.ERF_TABLE:
            assert erf(-x) == -erf(x)

    def test_zero(self):
        assert erf(0.0) == 0.0

    def test_saturation(self):
        assert erf(40.0) == 1.0
        assert erf(-40.0) == -1.0

    @given(st.floats(min_value=-8.0, max_value=8.0, allow_nan=False))
    @settings(max_examples=200, deadline=None)
    def test_bounded_by_one(self, x):
        assert -1.0 <= erf(x) <= 1.0

    @given(st.floats(min_value=-4.0, max_value=4.0), st.floats(min_value=1e-4, max_value=1.0))
    @settings(max_examples=100, deadline=None)
    def test_strictly_increasing(self, x, h):
        assert erf(x + h) > erf(x)
