from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("qhall.kernels._ckernels", ["src/qhall/kernels/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python kernels are selected at import time when the
    # extension is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules)
