"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure NumPy fallback is selected at
import time); the extension only accelerates the hot loops of the geometric
verifier and the bulk coordinate maps.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "planarvpg._kernels.ckern",
                ["src/planarvpg/_kernels/ckern.pyx"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level=3,
    )
except Exception:
    # No Cython/compiler available: install pure-Python only.
    ext_modules = []

setup(ext_modules=ext_modules)
