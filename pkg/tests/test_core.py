import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qknots import (
    HALF_LINE,
    REAL_LINE,
    ConstantOne,
    DomainError,
    ExponentialKernel,
    ExponentialShape,
    ExponentialShapeB,
    FunctionWithDerivatives,
    GaussianDensity,
    GaussianShape,
    GenericPositive,
    Interval,
    LogNormalDensity,
    LogNormalQuantizer,
    LogisticDensity,
    MissingDerivative,
    ParameterOutOfRange,
    ProblemExponents,
    StudentDensity,
    StudentQuantizer,
    StudentShape,
    c1_constant,
    omega_of,
    weight_eval,
)


class TestProblemExponents:
    @pytest.mark.parametrize(
        "p,q,r,alpha",
        [
            (math.inf, 1, 1, 2.0),
            (2, 1, 1, 1.5),
            (math.inf, math.inf, 2, 2.0),
            (1, 1, 1, 1.0),
            (2, 2, 2, 2.0),
        ],
    )
    def test_alpha(self, p, q, r, alpha):
        assert ProblemExponents(p, q, r).alpha == pytest.approx(alpha, rel=1e-15)

    def test_rate_exponent(self):
        assert ProblemExponents(math.inf, 1, 1).rate_exponent == -1.0
        assert ProblemExponents(2, 1, 2).rate_exponent == -2.0
        assert ProblemExponents(1, 2, 1).rate_exponent == pytest.approx(-0.5)
        assert ProblemExponents(2, 2, 2).rate_exponent == -2.0

    def test_p_le_q(self):
        assert ProblemExponents(2, 2, 1).p_le_q
        assert ProblemExponents(2, math.inf, 1).p_le_q
        assert not ProblemExponents(math.inf, 1, 1).p_le_q

    def test_conjugate(self):
        assert ProblemExponents(2, 2, 1).p_conjugate == 2.0
        assert ProblemExponents(1, 1, 1).p_conjugate == math.inf
        assert ProblemExponents(math.inf, 1, 1).p_conjugate == 1.0

    @pytest.mark.parametrize("p,q,r", [(0.5, 1, 1), (2, 0.0, 1), (2, 1, 0), (2, 1, -1)])
    def test_rejects_bad_exponents(self, p, q, r):
        with pytest.raises(ParameterOutOfRange):
            ProblemExponents(p, q, r)

    def test_c1_r1_is_one(self):
        assert c1_constant(ProblemExponents(math.inf, 1, 1)) == 1.0
        assert c1_constant(ProblemExponents(2, 2, 1)) == 1.0

    def test_c1_pinf(self):
        # p* = 1: 1/((r-1)! (r-1+1)) = 1/((r-1)! r)
        assert c1_constant(ProblemExponents(math.inf, 1, 2)) == pytest.approx(0.5)
        assert c1_constant(ProblemExponents(math.inf, 1, 3)) == pytest.approx(1.0 / 6.0)

    def test_c1_p1(self):
        # p* = inf: the root factor is 1
        assert c1_constant(ProblemExponents(1, 1, 2)) == pytest.approx(1.0)

    def test_c1_p2(self):
        # p* = 2: 1/((r-1)! sqrt((r-1)*2+1))
        assert c1_constant(ProblemExponents(2, 1, 2)) == pytest.approx(1.0 / math.sqrt(3.0))


WEIGHTS = [
    GaussianDensity(1.3),
    GaussianDensity(0.7, mu=0.4),
    ExponentialKernel(0.8),
    ExponentialKernel(2.0, HALF_LINE),
    GaussianShape(1.5),
    ExponentialShape(2.5),
    ConstantOne(),
    LogNormalDensity(0.2, 1.1),
    LogNormalQuantizer(2.3),
    LogisticDensity(0.5),
    ExponentialShapeB(0.9),
    StudentDensity(3.0),
    StudentShape(4.0, 2.0),
    StudentQuantizer(2.5),
]


class TestWeightFamilies:
    @pytest.mark.parametrize("w", WEIGHTS, ids=lambda w: type(w).__name__)
    def test_call_is_exp_of_log(self, w):
        for x in (0.1, 0.5, 1.7, 4.0):
            if not w.domain.contains(x):
                continue
            assert w(x) == pytest.approx(math.exp(w.log_at(x)), rel=1e-15)
            assert w(x) > 0.0

    def test_gaussian_density_normalized(self):
        g = GaussianDensity(2.0)
        assert g(0.0) == pytest.approx(1.0 / (2.0 * math.sqrt(2.0 * math.pi)))

    def test_exponential_kernel_symmetric(self):
        k = ExponentialKernel(1.5)
        assert k(2.0) == k(-2.0) == pytest.approx(math.exp(-3.0))

    def test_constant_one(self):
        assert ConstantOne()(123.4) == 1.0

    def test_lognormal_density_halfline(self):
        d = LogNormalDensity(0.0, 1.0)
        assert d.domain == HALF_LINE
        assert d(1.0) == pytest.approx(1.0 / math.sqrt(2.0 * math.pi))
        assert d(math.e) == pytest.approx(math.exp(-1.5) / math.sqrt(2.0 * math.pi))

    def test_lognormal_quantizer_branches(self):
        k = LogNormalQuantizer(2.0)
        # flat near zero, power decay beyond the breakpoint
        assert k(1e-9) == k(1e-6)
        assert k(50.0) < k(5.0)

    def test_logistic_density(self):
        d = LogisticDensity(0.5)
        assert d(1.0) == pytest.approx(d(-1.0), rel=1e-14)
        assert d(0.0) > d(1.0)

    def test_student_quantizer_power(self):
        k = StudentQuantizer(3.0)
        assert k(1.0) == pytest.approx(2.0**-3.0)
        assert k(-1.0) == k(1.0)

    @pytest.mark.parametrize(
        "ctor",
        [
            lambda: GaussianDensity(0.0),
            lambda: GaussianDensity(-1.0),
            lambda: ExponentialKernel(0.0),
            lambda: GaussianShape(-2.0),
            lambda: ExponentialShape(0.0),
            lambda: LogNormalDensity(0.0, 0.0),
            lambda: LogNormalQuantizer(-1.0),
            lambda: LogisticDensity(0.0),
            lambda: ExponentialShapeB(0.0),
            lambda: StudentDensity(-3.0),
            lambda: StudentShape(0.0, 1.0),
            lambda: StudentShape(3.0, -0.5),
            lambda: StudentQuantizer(0.0),
        ],
    )
    def test_rejects_bad_parameters(self, ctor):
        with pytest.raises(ParameterOutOfRange):
            ctor()

    def test_student_shape_allows_zero_offset(self):
        StudentShape(3.0, 0.0)


class TestGenericPositive:
    def test_wraps_callable(self):
        w = GenericPositive(lambda x: 1.0 + x * x, REAL_LINE, monotonicity="symmetric-unimodal")
        assert w(2.0) == 5.0
        assert w.log_at(2.0) == pytest.approx(math.log(5.0))

    def test_rejects_nonpositive_value(self):
        w = GenericPositive(lambda x: x, REAL_LINE, monotonicity="symmetric-unimodal")
        with pytest.raises(DomainError):
            w(-1.0)

    def test_rejects_unknown_monotonicity(self):
        with pytest.raises(ParameterOutOfRange):
            GenericPositive(lambda x: 1.0, REAL_LINE, monotonicity="wiggly")


class TestRatioWeight:
    def test_log_is_difference(self):
        rho = GaussianDensity(1.0)
        psi = ExponentialShape(2.0)
        om = omega_of(rho, psi)
        for x in (-1.5, 0.0, 2.0):
            assert om.log_at(x) == pytest.approx(rho.log_at(x) - psi.log_at(x), abs=1e-14)

    def test_domain_intersection(self):
        om = omega_of(LogNormalDensity(0.0, 1.0), ConstantOne())
        assert om.domain == HALF_LINE

    def test_tags(self):
        assert omega_of(GaussianDensity(1.0), GaussianShape(2.0)).tag == ("gauss-gauss", 1.0, 2.0)
        assert omega_of(GaussianDensity(1.0), ConstantOne()).tag == ("gauss-gauss", 1.0, math.inf)
        assert omega_of(GaussianDensity(1.0), ExponentialShape(3.0)).tag == ("gauss-exp", 1.0, 3.0)
        assert omega_of(LogNormalDensity(0.5, 2.0), ConstantOne()).tag == ("lognormal", 0.5, 2.0)
        assert omega_of(LogisticDensity(0.5), ExponentialShapeB(1.0)).tag == ("logistic-exp", 2.0, 1.0)
        assert omega_of(StudentDensity(3.0), StudentShape(3.0, 2.0)).tag == ("student", 3.0, 2.0)
        assert omega_of(ExponentialKernel(1.0), ConstantOne()).tag is None

    def test_weight_eval_outside_domain(self):
        om = omega_of(LogNormalDensity(0.0, 1.0), ConstantOne())
        with pytest.raises(DomainError):
            weight_eval(om, -1.0)


class TestFunctionWithDerivatives:
    def test_call_and_derivative(self):
        f = FunctionWithDerivatives((math.sin, math.cos))
        assert f(0.3) == math.sin(0.3)
        assert f.derivative(1)(0.3) == math.cos(0.3)
        assert f.orders == 2

    def test_missing_derivative(self):
        f = FunctionWithDerivatives((math.sin,))
        with pytest.raises(MissingDerivative):
            f.derivative(1)

    def test_requires_one_evaluator(self):
        with pytest.raises(ParameterOutOfRange):
            FunctionWithDerivatives(())


@given(
    sigma=st.floats(min_value=0.3, max_value=3.0),
    x=st.floats(min_value=-8.0, max_value=8.0),
)
@settings(max_examples=80, deadline=None)
def test_gaussian_density_scaling(sigma, x):
    # scaling x and sigma together only rescales the normalization
    g1 = GaussianDensity(sigma)
    g2 = GaussianDensity(2.0 * sigma)
    assert g2(2.0 * x) == pytest.approx(g1(x) / 2.0, rel=1e-12)
