import math
import os
import subprocess
import sys

import numpy as np
import pytest

import qknots
from qknots._kernels import _pykernels


def _compiled():
    try:
        from qknots._kernels import _ckernels

        return _ckernels
    except ImportError:
        return None


XS = np.array([x / 7.0 for x in range(-35, 36)] + [-12.0, 12.0, 0.0, 1e-8, -1e-8])

KNOTS = np.array([0.0, 0.5, 1.25, 3.0, math.inf])
ANCHORS = np.array([0.0, 0.5, 1.25, 3.0])
COEFFS = np.array([(1.0, -1.0), (0.5, 0.25), (0.9, 0.0), (0.05, -0.01)])


class TestPythonBackend:
    def test_erf_scalar_reference(self):
        assert _pykernels.erf_scalar(0.0) == 0.0
        assert _pykernels.erf_scalar(1.0) == pytest.approx(math.erf(1.0), abs=1e-15)
        assert _pykernels.erf_scalar(-2.3) == pytest.approx(math.erf(-2.3), abs=1e-15)

    def test_erf_many_matches_scalar(self):
        many = _pykernels.erf_many(XS)
        for x, v in zip(XS, many):
            assert v == _pykernels.erf_scalar(x)

    def test_piecewise_many_matches_scalar(self):
        xs = np.array([0.1, 0.6, 2.0, 4.0])
        many = _pykernels.piecewise_many(KNOTS, ANCHORS, COEFFS, xs)
        for x, v in zip(xs, many):
            assert v == _pykernels.piecewise_scalar(KNOTS, ANCHORS, COEFFS, x)


@pytest.mark.skipif(_compiled() is None, reason="compiled backend not built")
class TestBackendParity:
    def test_erf_parity(self):
        ck = _compiled()
        for x in XS:
            assert ck.erf_scalar(x) == pytest.approx(_pykernels.erf_scalar(x), abs=1e-15)

    def test_erf_many_parity(self):
        ck = _compiled()
        a = list(ck.erf_many(XS))
        b = list(_pykernels.erf_many(XS))
        assert a == pytest.approx(b, abs=1e-15)

    def test_piecewise_parity(self):
        ck = _compiled()
        for x in (0.05, 0.49999, 0.5, 1.0, 2.99, 3.0, 50.0):
            got = ck.piecewise_scalar(KNOTS, ANCHORS, COEFFS, x)
            want = _pykernels.piecewise_scalar(KNOTS, ANCHORS, COEFFS, x)
            assert got == pytest.approx(want, abs=1e-15)

    def test_piecewise_many_parity(self):
        ck = _compiled()
        xs = np.array([0.01 + 0.07 * i for i in range(60)])
        a = list(ck.piecewise_many(KNOTS, ANCHORS, COEFFS, xs))
        b = list(_pykernels.piecewise_many(KNOTS, ANCHORS, COEFFS, xs))
        assert a == pytest.approx(b, abs=1e-15)


class TestBackendSelection:
    def test_backend_reported(self):
        assert qknots.BACKEND in ("compiled", "python")

    def test_forced_python_backend(self):
        env = dict(os.environ, QKNOTS_FORCE_PY="1")
        proc = subprocess.run(
            [sys.executable, "-c", "import qknots; print(qknots.BACKEND)"],
            capture_output=True,
            text=True,
            env=env,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "python"

    def test_forced_python_same_knots(self):
        args = [
            "-m", "qknots.cli", "knots", "--quantizer", "exp", "--a", "1",
            "--alpha", "2", "--domain", "real", "--n", "8",
        ]
        base = subprocess.run([sys.executable, *args], capture_output=True, text=True)
        env = dict(os.environ, QKNOTS_FORCE_PY="1")
        forced = subprocess.run([sys.executable, *args], capture_output=True, text=True, env=env)
        assert base.returncode == forced.returncode == 0
        assert base.stdout == forced.stdout
