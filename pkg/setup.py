"""Build script: compiles the term-map kernel extension when Cython is present.

The package is fully functional without the extension (polyz._kernels falls back
to the pure-Python implementation), so a failed compile only costs speed.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/polyz/_kernels_c.pyx"],
        language_level=3,
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
