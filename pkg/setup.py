"""Build script.

The compiled GF(2) homology kernel is optional: if Cython or a C compiler is
missing, the build falls back to a pure-Python install and the package selects
its pure kernel at import time.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/ridgeline/_gf2core.pyx"],
        language_level="3",
    )
except Exception as exc:  # missing Cython / compiler: pure install still works
    sys.stderr.write(f"ridgeline: skipping compiled kernel ({exc})\n")

setup(ext_modules=ext_modules)
