import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "naring._fastops",
                ["src/naring/_fastops.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # without cython the package still works on the pure fallback
    extensions = []

setup(ext_modules=extensions)
