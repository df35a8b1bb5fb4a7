import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; wellspec._backend falls back to numpy
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "wellspec._ckernels",
                ["src/wellspec/_ckernels.pyx"],
                include_dirs=[np.get_include()],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
