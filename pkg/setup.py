from setuptools import setup
from setuptools.extension import Extension

# The Walsh-transform kernel is an optional speedup: if Cython (or a C
# compiler) is missing, the build proceeds and the package falls back to
# the pure-Python kernel at import time.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("dualdeg._walsh", ["src/dualdeg/_walsh.pyx"], optional=True)],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
