"""Build script: compiles the optional word-combinatorics extension.

The package works without the extension (a pure Python twin of the kernel
is selected at import time), so any failure to cythonize or compile is
non-fatal and falls back to a pure wheel.
"""

from setuptools import Extension, setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    try:
        return cythonize(
            [Extension("qperm._wordkernel", ["src/qperm/_wordkernel.pyx"])],
            language_level=3,
        )
    except Exception:
        return []


setup(ext_modules=extensions())
