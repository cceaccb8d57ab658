import os

from setuptools import Extension, setup

# The compiled kernels are an optional speedup: the package falls back to
# pure-Python twins at import time if the extension is absent.  Set
# ZEROPROD_PURE_BUILD=1 to skip compilation entirely.
ext_modules = []
if not os.environ.get("ZEROPROD_PURE_BUILD"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "zeroprod._kernels",
                    ["src/zeroprod/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
