"""Build the optional compiled kernels.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so a missing Cython or compiler is
not fatal to installation from source.
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
                "otplab._kernels._core",
                sources=["src/otplab/_kernels/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
