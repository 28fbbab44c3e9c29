from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    extensions = [
        Extension(
            "gradedspectra.kernels._ckernels",
            ["src/gradedspectra/kernels/_ckernels.pyx"],
        )
    ]
    ext_modules = cythonize(
        extensions,
        compiler_directives={
            "language_level": "3str",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
else:
    # The package still works without the compiled core: the pure-Python
    # kernels are selected at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
