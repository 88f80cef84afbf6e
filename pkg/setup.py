"""Builds the optional Cython search kernel.

The package works without it (a pure-Python kernel is selected at
import time), so any failure here downgrades to a plain install.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/menumt/decoder/_search_cy.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
