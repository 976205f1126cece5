import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # fall back to the pure-Python kernels
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("TOEPLITZ_LATTICE_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "toeplitz_lattice._kernels",
                ["src/toeplitz_lattice/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
