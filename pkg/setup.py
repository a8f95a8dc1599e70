import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext = Extension(
    "socval._kernels._fast",
    ["src/socval/_kernels/_fast.pyx"],
    include_dirs=[numpy.get_include()],
    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
)

# Without Cython the package still installs; socval._kernels falls back to
# the pure NumPy implementations at import time.
setup(ext_modules=cythonize([ext], language_level=3) if cythonize else [])
