"""Build the optional compiled kernel.

The package is fully functional without it (brauer._kernels falls back to
the pure-Python twin at import time), so a missing Cython or C compiler
only costs speed, not features.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "brauer._kernels._speedups",
                ["src/brauer/_kernels/_speedups.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
