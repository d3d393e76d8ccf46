import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SKEWLAT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/skewlat/_kernels_c.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass  # pure-Python fallback still works

setup(ext_modules=ext_modules)
