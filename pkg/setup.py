"""Build script.

The package is pure Python; an optional Cython extension accelerates the
monomial kernel.  If Cython (or a C compiler) is unavailable the extension
is skipped and the pure-Python kernel is used at runtime.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("laddergb._speedups", ["src/laddergb/_speedups.pyx"])],
        language_level=3,
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
