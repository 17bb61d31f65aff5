"""Build script: compiles the optional enumeration-kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time); set LINCONG_PURE_BUILD=1 to skip compilation entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("LINCONG_PURE_BUILD") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/lincong/_kernels_cy.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
