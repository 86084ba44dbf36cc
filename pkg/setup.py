"""Build script: compiles the optional containment kernel.

The package is fully functional without the extension (a pure-Python
implementation of the same search is selected at import time), so any
failure to cythonize or compile downgrades to a pure install instead of
aborting.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "triblock._match_cy",
                ["src/triblock/_match_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
