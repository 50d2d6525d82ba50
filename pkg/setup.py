"""Build script: compiles the optional integer-polynomial kernel extension.

The package works without the extension (a pure-Python twin of the kernels
is selected at import time), so a failed Cython build only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "sprsynth._kernels_cy",
                ["src/sprsynth/_kernels_cy.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
