import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("JAMESHOPF_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("jameshopf._kernels", ["src/jameshopf/_kernels.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython: the pure-Python kernels are picked up at import
        ext_modules = []

setup(ext_modules=ext_modules)
