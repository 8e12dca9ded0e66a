"""Build script: compiles the optional Cython kernel when Cython is available.

The package is fully functional without the extension; ``interlie.kernel``
falls back to the pure-Python implementation at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "interlie._blockmul",
                ["src/interlie/_blockmul.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
