"""Build script: compiles the sieve kernel extension when Cython is available.

The package works without the extension (a pure-Python kernel is selected at
import time), so a failed extension build is downgraded to a warning.
"""

import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "matula._sieve_cy",
                sources=["src/matula/_sieve_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    print("warning: Cython not available, building pure-Python only", file=sys.stderr)

setup(ext_modules=ext_modules)
