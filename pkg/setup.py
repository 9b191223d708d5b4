"""Build script: compiles the optional chart-kernel extension.

The extension is marked optional; if Cython or a C compiler is missing the
install proceeds and the package falls back to the pure-Python kernels.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension(
        "rothyp._kernels._speed",
        ["src/rothyp/_kernels/_speed.pyx"],
        extra_compile_args=["-O3"],
    )
    ext.optional = True
    ext_modules = cythonize([ext], language_level=3)

setup(ext_modules=ext_modules)
