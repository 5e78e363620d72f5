"""Kernel backend selection: compiled extension when available, numpy fallback otherwise.

Set QKNOTS_FORCE_PY=1 to force the pure-Python backend (used by the parity
tests and the benchmark).
"""
import os

if os.environ.get("QKNOTS_FORCE_PY") == "1":
    from . import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "compiled"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "python"

erf_scalar = _impl.erf_scalar
erf_many = _impl.erf_many
piecewise_scalar = _impl.piecewise_scalar
piecewise_many = _impl.piecewise_many

__all__ = ["BACKEND", "erf_scalar", "erf_many", "piecewise_scalar", "piecewise_many"]
