"""Build script for the optional compiled window-tally kernel.

The package works without the extension; rdflink.patterns falls back to
the pure-Python kernel when the compiled one is absent.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/rdflink/_window_cy.pyx",
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
