"""Build script for the optional compiled hashing kernel.

The package is pure Python except for ddxkit.model._hash_cy, a Cython twin of
ddxkit.model._hash_py. If Cython or a C compiler is unavailable (or
DDXKIT_NO_EXT is set), the extension is skipped and the package falls back to
the pure-Python kernel at import time.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("DDXKIT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "ddxkit.model._hash_cy",
                    ["src/ddxkit/model/_hash_cy.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
