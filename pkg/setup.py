"""Build script: compiles the optional search kernel.

The package is pure Python except for quiddity._speedups, a Cython twin of
quiddity._kernel.  If Cython (or a C compiler) is unavailable the extension is
simply skipped and the pure kernel is used at runtime.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.path.exists("src/quiddity/_speedups.pyx"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("quiddity._speedups", ["src/quiddity/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
