"""Build script: compiles the Cython shooting kernel when possible.

The package works without the extension (a pure-Python kernel is selected
at import time), so any build failure here degrades to the fallback
instead of breaking the install.
"""
from setuptools import setup, Extension

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "diraconf._kernels._shoot",
                ["src/diraconf/_kernels/_shoot.pyx"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover
    print(f"diraconf: skipping compiled kernel ({exc!r}); "
          "pure-Python fallback will be used")
    ext_modules = []

setup(ext_modules=ext_modules)
