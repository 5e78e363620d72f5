"""Build script: compiles the optional Cython kernels, falling back to pure Python.

The package is fully functional without the extension; qknots._kernels picks
the compiled backend at import time when it is available.
"""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("QKNOTS_NO_EXT") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "qknots._kernels._ckernels",
                    ["src/qknots/_kernels/_ckernels.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            language_level=3,
        )
    except Exception as exc:  # noqa: BLE001 - any build-chain gap means pure-Python install
        print(f"qknots: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
