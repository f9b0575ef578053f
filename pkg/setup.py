"""Build the optional Cython kernel; the package works without it."""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("PROJCLOSURE_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("projclosure._kernels", [os.path.join("src", "projclosure", "_kernels.pyx")])],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )

setup(ext_modules=ext_modules)
